"""The in-package special functions are checked against scipy, which plays
no role in the package itself and therefore counts as an independent oracle."""

import numpy as np
import pytest
import scipy.special
import scipy.stats

from wsmeans.special import (
    chi_square_cdf,
    f_survival,
    regularized_incomplete_beta,
    regularized_lower_gamma,
)


def test_incomplete_beta_against_scipy(rng):
    for _ in range(300):
        a = float(rng.uniform(0.05, 50.0))
        b = float(rng.uniform(0.05, 50.0))
        x = float(rng.uniform(0.0, 1.0))
        ours = regularized_incomplete_beta(x, a, b)
        ref = scipy.special.betainc(a, b, x)
        assert ours == pytest.approx(ref, abs=1e-12, rel=1e-10)


def test_incomplete_beta_edges():
    assert regularized_incomplete_beta(0.0, 2.0, 3.0) == 0.0
    assert regularized_incomplete_beta(1.0, 2.0, 3.0) == 1.0
    assert regularized_incomplete_beta(0.5, 1.0, 1.0) == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(ValueError):
        regularized_incomplete_beta(-0.1, 1.0, 1.0)
    with pytest.raises(ValueError):
        regularized_incomplete_beta(0.5, 0.0, 1.0)


def test_incomplete_beta_reflection_identity(rng):
    # I_x(a,b) + I_{1-x}(b,a) = 1; the two calls share one continued-fraction
    # evaluation path, so this should hold almost to machine precision.
    for _ in range(200):
        a = float(rng.uniform(0.1, 20.0))
        b = float(rng.uniform(0.1, 20.0))
        x = float(rng.uniform(0.0, 1.0))
        total = regularized_incomplete_beta(x, a, b) + regularized_incomplete_beta(
            1.0 - x, b, a
        )
        assert total == pytest.approx(1.0, abs=1e-13)


def test_lower_gamma_against_scipy(rng):
    for _ in range(300):
        a = float(rng.uniform(0.05, 60.0))
        x = float(rng.uniform(0.0, 120.0))
        ours = regularized_lower_gamma(a, x)
        ref = scipy.special.gammainc(a, x)
        assert ours == pytest.approx(ref, abs=1e-12, rel=1e-10)


def test_chi_square_cdf_against_scipy(rng):
    for _ in range(100):
        df = int(rng.integers(1, 30))
        x = float(rng.uniform(0.0, 3.0 * df + 5.0))
        assert chi_square_cdf(x, df) == pytest.approx(
            scipy.stats.chi2.cdf(x, df), abs=1e-12
        )


def test_f_survival_against_scipy(rng):
    for _ in range(200):
        d1 = int(rng.integers(1, 12))
        d2 = int(rng.integers(1, 40))
        f = float(rng.uniform(0.0, 15.0))
        assert f_survival(f, d1, d2) == pytest.approx(
            scipy.stats.f.sf(f, d1, d2), abs=1e-12
        )


def test_f_survival_median_of_f11():
    # F(1,1) has median exactly 1, so the survival there is exactly 1/2.
    assert f_survival(1.0, 1, 1) == pytest.approx(0.5, abs=1e-12)


def test_f_survival_degenerate_inputs():
    assert f_survival(0.0, 3, 5) == 1.0
    assert f_survival(-2.0, 3, 5) == 1.0
    with pytest.raises(ValueError):
        f_survival(1.0, 0, 5)
