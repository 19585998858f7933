"""Two-factor datasets, the cell-means design matrix, and least-squares fits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, OrthonormalBasis, as_matrix, as_vector, gram_schmidt


class EmptyCellError(ValueError):
    """A factor-level combination has no observations."""

    def __init__(self, a_label: str, b_label: str):
        self.a_label = a_label
        self.b_label = b_label
        super().__init__(f"empty cell: no observations for ({a_label!r}, {b_label!r})")


class DimensionMismatchError(ValueError):
    """Row counts of a design matrix and response vector disagree."""


class Dataset:
    """Observations classified by two categorical factors.

    Levels of each factor are ordered lexicographically by label; cell
    ``(i, j)`` refers to the i-th A level crossed with the j-th B level, and
    cells are enumerated with j varying fastest. Every cell must contain at
    least one observation or construction fails with :class:`EmptyCellError`.
    """

    def __init__(self, observations):
        obs = []
        for rec in observations:
            a_label, b_label, response = rec
            obs.append((str(a_label), str(b_label), float(response)))
        if not obs:
            raise ValueError("dataset needs at least one observation")
        responses = np.array([r for _, _, r in obs])
        if not np.isfinite(responses).all():
            raise ValueError("responses contain non-finite values")
        self.observations: tuple = tuple(obs)
        self.a_levels: tuple = tuple(sorted({a for a, _, _ in obs}))
        self.b_levels: tuple = tuple(sorted({b for _, b, _ in obs}))
        a, b = len(self.a_levels), len(self.b_levels)
        a_index = {lab: i for i, lab in enumerate(self.a_levels)}
        b_index = {lab: j for j, lab in enumerate(self.b_levels)}
        cells = np.array(
            [a_index[rec[0]] * b + b_index[rec[1]] for rec in obs], dtype=int
        )
        counts = np.bincount(cells, minlength=a * b).reshape(a, b)
        for i in range(a):
            for j in range(b):
                if counts[i, j] == 0:
                    raise EmptyCellError(self.a_levels[i], self.b_levels[j])
        self.cell_counts: np.ndarray = counts
        self.observation_cells: np.ndarray = cells
        self.responses: np.ndarray = responses

    @classmethod
    def from_arrays(cls, a_labels, b_labels, responses) -> "Dataset":
        if not (len(a_labels) == len(b_labels) == len(responses)):
            raise ValueError("factor label and response arrays must share a length")
        return cls(zip(a_labels, b_labels, responses))

    @property
    def n_total(self) -> int:
        return len(self.observations)

    def cell_index(self, a_label: str, b_label: str) -> int:
        """Flat cell index of a label pair (j fastest)."""
        i = self.a_levels.index(a_label)
        j = self.b_levels.index(b_label)
        return i * len(self.b_levels) + j

    def __repr__(self) -> str:
        return (
            f"Dataset(n={self.n_total}, a_levels={len(self.a_levels)}, "
            f"b_levels={len(self.b_levels)})"
        )


def cell_means_design(dataset: Dataset) -> np.ndarray:
    """Indicator design matrix of the cell-means model.

    Row s carries a single 1 in the column of the cell holding observation s,
    so each column sums to that cell's count and the model mean is the vector
    of population cell means.
    """
    n = dataset.n_total
    ab = len(dataset.a_levels) * len(dataset.b_levels)
    design = np.zeros((n, ab))
    design[np.arange(n), dataset.observation_cells] = 1.0
    return design


@dataclass
class ModelFit:
    """Least-squares fit of a response on a design matrix.

    ``mse`` is None for a saturated model (zero error degrees of freedom).
    """

    design: np.ndarray
    basis: OrthonormalBasis
    fitted: np.ndarray
    sse: float
    df_error: int
    mse: float | None

    @property
    def rank(self) -> int:
        return self.basis.rank


def fit(x, y, tol: float = DEFAULT_TOL) -> ModelFit:
    """Least-squares fit: fitted values are the orthogonal projection of y
    onto the design's column space; no coefficient vector is materialized."""
    x = as_matrix(x, "design")
    y = as_vector(y, "response")
    if x.shape[0] != y.shape[0]:
        raise DimensionMismatchError(
            f"design has {x.shape[0]} rows but response has {y.shape[0]}"
        )
    basis = gram_schmidt(x, tol)
    fitted = basis.project(y)
    residual = y - fitted
    sse = float(residual @ residual)
    df_error = y.shape[0] - basis.rank
    mse = sse / df_error if df_error > 0 else None
    return ModelFit(design=x, basis=basis, fitted=fitted, sse=sse, df_error=df_error, mse=mse)


def cell_means(dataset: Dataset, y=None) -> np.ndarray:
    """Sample cell means in cell order (j fastest).

    ``y`` defaults to the dataset's own responses; passing another vector of
    matching length averages that instead (used by simulation).
    """
    y = dataset.responses if y is None else as_vector(y)
    if y.shape[0] != dataset.n_total:
        raise DimensionMismatchError(
            f"dataset has {dataset.n_total} observations but response has {y.shape[0]}"
        )
    ab = dataset.cell_counts.size
    sums = np.zeros(ab)
    np.add.at(sums, dataset.observation_cells, y)
    return sums / dataset.cell_counts.ravel()
