import numpy as np
import pytest

from wsmeans import Dataset

# Small unbalanced 2x2 layout used as the worked fixture throughout the
# suite: cell (a1,b1) holds {1,3}, (a1,b2) holds {4}, (a2,b1) holds {6},
# (a2,b2) holds {7,9}. Cell means are (2,4,6,8) and the full-model SSE is 4
# on 2 df.
WORKED_ROWS = [
    ("a1", "b1", 1.0),
    ("a1", "b1", 3.0),
    ("a1", "b2", 4.0),
    ("a2", "b1", 6.0),
    ("a2", "b2", 7.0),
    ("a2", "b2", 9.0),
]

WORKED_CSV = "y,alpha,beta\n1,a1,b1\n3,a1,b1\n4,a1,b2\n6,a2,b1\n7,a2,b2\n9,a2,b2\n"


@pytest.fixture
def worked() -> Dataset:
    return Dataset(WORKED_ROWS)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260818)
