"""Numerator sums of squares by four equivalent formulations.

The same hypothesis admits a geometric form (quadratic form in the
difference of projectors), a restricted-vs-full-model difference of error
sums of squares, a Pearson chi-squared form in the estimated functions, and
a weighted-summary form generalizing Yates's method of weighted squares of
means. They agree to rounding; ``ss_rmfm`` is the designated reference
because it uses nothing beyond two independent least-squares fits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .design import Dataset, cell_means, cell_means_design, fit
from .hypotheses import YatesDecomposition, two_factor_hypothesis
from .linalg import DEFAULT_TOL, as_matrix, as_vector, g_inverse, gram_schmidt, projector

#: Relative scale for the cross-formulation agreement test.
DEFAULT_AGREEMENT_TOL = 1e-8


class SingularGramError(ValueError):
    """Summary-map columns are linearly dependent, so the weight matrix is singular."""


@dataclass
class SumOfSquaresReport:
    """One hypothesis' sum of squares under every formulation.

    ``ss_mwsm`` is None except for two-factor main effects, where the
    explicit scalar formula applies. ``max_discrepancy`` is the largest
    pairwise absolute difference among the forms present.
    """

    ss_geometric: float
    ss_rmfm: float
    ss_pearson: float
    ss_yates_general: float
    ss_mwsm: float | None
    df: int
    max_discrepancy: float

    @property
    def values(self) -> dict[str, float]:
        """Present forms keyed by method name."""
        out = {
            "geometric": self.ss_geometric,
            "rmfm": self.ss_rmfm,
            "pearson": self.ss_pearson,
            "yates": self.ss_yates_general,
        }
        if self.ss_mwsm is not None:
            out["mwsm"] = self.ss_mwsm
        return out

    def agrees(self, agreement_tol: float = DEFAULT_AGREEMENT_TOL) -> bool:
        """Whether all forms match within the magnitude-scaled tolerance."""
        return self.max_discrepancy <= agreement_tol * (1.0 + self.ss_geometric)


def numerator_projector(x, null_space, tol: float = DEFAULT_TOL) -> np.ndarray:
    """The symmetric idempotent P with SS = y' P y: projector onto the design's
    column space minus the projector onto the restricted model's."""
    x = as_matrix(x, "design")
    return projector(x, tol) - projector(x @ as_matrix(null_space, "null_space"), tol)


def ss_geometric(x, null_space, y, tol: float = DEFAULT_TOL) -> float:
    """Squared distance of the fitted mean from the restricted model."""
    y = as_vector(y, "response")
    p = numerator_projector(x, null_space, tol)
    return max(float(y @ p @ y), 0.0)


def ss_rmfm(x, null_space, y, tol: float = DEFAULT_TOL) -> float:
    """Increase in error sum of squares when the model is restricted.

    Two independent fits, never collapsed algebraically: this is the
    reference the other formulations are checked against.
    """
    x = as_matrix(x, "design")
    restricted = fit(x @ as_matrix(null_space, "null_space"), y, tol)
    full = fit(x, y, tol)
    return max(restricted.sse - full.sse, 0.0)


def ss_pearson(representer, y, tol: float = DEFAULT_TOL) -> float:
    """Chi-squared-style quadratic form in the estimated functions.

    With h the representer, this is (h'y)' (h'h)^- (h'y): the estimated
    functions weighted by a generalized inverse of their covariance scale.
    """
    h = as_matrix(representer, "representer")
    y = as_vector(y, "response")
    u = h.T @ y
    return max(float(u @ g_inverse(h.T @ h, tol) @ u), 0.0)


def ss_yates_general(
    decomposition: YatesDecomposition, y, tol: float = DEFAULT_TOL
) -> float:
    """Error sum of squares of the summaries under their null model.

    With u the summaries, d their Gram matrix, and m the null-model span,
    this is u' (d^-1 - d^-1 m (m' d^-1 m)^- m' d^-1) u, the direct
    generalization of the weighted squares of means.
    """
    a = as_matrix(decomposition.summary_map, "summary_map")
    y = as_vector(y, "response")
    if gram_schmidt(a, tol).rank < a.shape[1]:
        raise SingularGramError(
            "summary map has linearly dependent columns; weight matrix is singular"
        )
    u = a.T @ y
    d_inv = np.linalg.inv(decomposition.gram)
    m = np.asarray(decomposition.null_basis, dtype=float)
    if m.shape[1]:
        core = g_inverse(m.T @ d_inv @ m, tol)
        weight = d_inv - d_inv @ m @ core @ m.T @ d_inv
    else:
        weight = d_inv
    return max(float(u @ weight @ u), 0.0)


def ss_mwsm(dataset: Dataset, effect: str, y=None) -> float:
    """Yates's explicit weighted squares of means for a main effect.

    Scalar arithmetic only: per-level weights are reciprocals of the summary
    variances (up to the error variance), the weighted grand mean is formed,
    and weighted squared deviations are accumulated. No matrix operations,
    matching the method's original explicit-formula character.
    """
    if effect not in ("A", "B"):
        raise ValueError("weighted squares of means applies to main effects only")
    means = cell_means(dataset, y)
    a = len(dataset.a_levels)
    b = len(dataset.b_levels)
    counts = dataset.cell_counts

    weights: list[float] = []
    summaries: list[float] = []
    if effect == "A":
        for i in range(a):
            inv_w = sum(1.0 / counts[i, j] for j in range(b)) / (b * b)
            weights.append(1.0 / inv_w)
            summaries.append(sum(means[i * b + j] for j in range(b)) / b)
    else:
        for j in range(b):
            inv_w = sum(1.0 / counts[i, j] for i in range(a)) / (a * a)
            weights.append(1.0 / inv_w)
            summaries.append(sum(means[i * b + j] for i in range(a)) / a)

    total_weight = sum(weights)
    weighted_mean = sum(w * u for w, u in zip(weights, summaries)) / total_weight
    return float(sum(w * (u - weighted_mean) ** 2 for w, u in zip(weights, summaries)))


def effect_sum_of_squares(
    dataset: Dataset, effect: str, y=None, tol: float = DEFAULT_TOL
) -> SumOfSquaresReport:
    """Compute every applicable formulation for a two-factor effect and
    report their agreement."""
    y = dataset.responses if y is None else as_vector(y, "response")
    x = cell_means_design(dataset)
    hyp, decomposition = two_factor_hypothesis(dataset, effect, tol)
    values = [
        ss_geometric(x, hyp.null_space, y, tol),
        ss_rmfm(x, hyp.null_space, y, tol),
        ss_pearson(hyp.representer, y, tol),
        ss_yates_general(decomposition, y, tol),
    ]
    mwsm = ss_mwsm(dataset, effect, y) if effect in ("A", "B") else None
    present = values + ([mwsm] if mwsm is not None else [])
    return SumOfSquaresReport(
        ss_geometric=values[0],
        ss_rmfm=values[1],
        ss_pearson=values[2],
        ss_yates_general=values[3],
        ss_mwsm=mwsm,
        df=hyp.df,
        max_discrepancy=float(max(present) - min(present)),
    )
