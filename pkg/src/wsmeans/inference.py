"""F tests, noncentrality, and null-distribution simulation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .design import ModelFit
from .hypotheses import LinearHypothesis
from .linalg import DEFAULT_TOL, as_matrix, as_vector, gram_schmidt
from .special import f_survival


class NoErrorDfError(ValueError):
    """Saturated model: zero error degrees of freedom, no F test."""


class NoHypothesisDfError(ValueError):
    """Zero numerator degrees of freedom, no F test."""


@dataclass
class TestResult:
    """An F test assembled from a sum-of-squares report and an error fit."""

    ss_numerator: float
    df_numerator: int
    ss_error: float
    df_error: int
    ms_numerator: float
    mse: float
    f_statistic: float
    p_value: float
    method_agreement: float


def f_test(report, error_fit: ModelFit) -> TestResult:
    """F statistic and p-value for a hypothesis.

    The restricted-vs-full-model sum of squares is the canonical numerator;
    ``method_agreement`` carries over the report's largest cross-formulation
    discrepancy.
    """
    if report.df < 1:
        raise NoHypothesisDfError("hypothesis has zero degrees of freedom")
    if error_fit.df_error < 1:
        raise NoErrorDfError("saturated model: no error degrees of freedom")
    ss_num = report.ss_rmfm
    ms_num = ss_num / report.df
    f_stat = ms_num / error_fit.mse
    p = f_survival(f_stat, report.df, error_fit.df_error)
    return TestResult(
        ss_numerator=ss_num,
        df_numerator=report.df,
        ss_error=error_fit.sse,
        df_error=error_fit.df_error,
        ms_numerator=ms_num,
        mse=error_fit.mse,
        f_statistic=f_stat,
        p_value=p,
        method_agreement=report.max_discrepancy,
    )


def noncentrality(x, p, beta, sigma2: float) -> float:
    """Noncentrality of the numerator quadratic form: beta' X' P X beta / sigma2.

    Zero exactly when the hypothesis defining P holds at beta.
    """
    if sigma2 <= 0:
        raise ValueError("sigma2 must be positive")
    x = as_matrix(x, "design")
    p = as_matrix(p, "projector")
    beta = as_vector(beta, "beta")
    mean = x @ beta
    return max(float(mean @ p @ mean), 0.0) / sigma2


@dataclass
class NullSimulation:
    """Seeded draws of the numerator sum of squares under the null.

    ``ss_scaled`` holds SS/sigma2 per draw (the chi-squared candidate);
    ``sse_scaled`` and ``p_values`` accompany it for independence and
    uniformity diagnostics.
    """

    ss_scaled: np.ndarray
    sse_scaled: np.ndarray
    p_values: np.ndarray
    df_numerator: int
    df_error: int


def chi_square_simulation(
    x,
    hypothesis: LinearHypothesis,
    n_draws: int,
    seed: int,
    beta=None,
    sigma2: float = 1.0,
    tol: float = DEFAULT_TOL,
) -> NullSimulation:
    """Simulate the numerator SS over normal draws with a null-true mean.

    ``beta`` must satisfy the hypothesis (default: the zero vector); draws
    come from numpy's seeded default generator. Each draw's numerator SS and
    SSE are accumulated through the fitted-space bases, and p-values use the
    same F machinery as :func:`f_test`.
    """
    if n_draws < 1:
        raise ValueError("n_draws must be >= 1")
    if sigma2 <= 0:
        raise ValueError("sigma2 must be positive")
    x = as_matrix(x, "design")
    n = x.shape[0]
    if beta is None:
        mean = np.zeros(n)
    else:
        beta = as_vector(beta, "beta")
        violation = np.abs(hypothesis.contrast.T @ beta).max()
        if violation > tol * (1.0 + np.abs(beta).max()):
            raise ValueError(
                f"mean vector is not null-conforming (|G'beta| up to {violation:g})"
            )
        mean = x @ beta

    basis_full = gram_schmidt(x, tol)
    basis_restricted = gram_schmidt(x @ hypothesis.null_space, tol)
    df_error = n - basis_full.rank
    df_num = hypothesis.df

    rng = np.random.default_rng(seed)
    draws = mean[:, None] + np.sqrt(sigma2) * rng.standard_normal((n, n_draws))
    full_proj_sq = (basis_full.basis.T @ draws) ** 2
    restricted_proj_sq = (basis_restricted.basis.T @ draws) ** 2
    ss_num = full_proj_sq.sum(axis=0) - restricted_proj_sq.sum(axis=0)
    sse = (draws**2).sum(axis=0) - full_proj_sq.sum(axis=0)
    ss_num = np.clip(ss_num, 0.0, None)
    sse = np.clip(sse, 0.0, None)

    if df_num > 0 and df_error > 0:
        f_stats = (ss_num / df_num) / (sse / df_error)
        p_values = np.array([f_survival(f, df_num, df_error) for f in f_stats])
    else:
        p_values = np.full(n_draws, np.nan)

    return NullSimulation(
        ss_scaled=ss_num / sigma2,
        sse_scaled=sse / sigma2,
        p_values=p_values,
        df_numerator=df_num,
        df_error=df_error,
    )
