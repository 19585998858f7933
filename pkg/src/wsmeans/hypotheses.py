"""Linear hypotheses about estimable functions and their derived matrices.

A hypothesis states that a set of linear functions of the model parameters
is zero. From the function matrix this module derives the null-space basis
(the restricted model's parameter span), the representer whose columns live
in the design's column space, and, for two-factor effects, the weighted
marginal-means decomposition that mirrors Yates's construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .design import Dataset, cell_means_design
from .linalg import (
    DEFAULT_TOL,
    as_matrix,
    complement_basis,
    g_inverse,
    gram_schmidt,
    kronecker,
    centering_matrix,
    ones_column,
)

EFFECTS = ("A", "B", "AB")


class NotEstimableError(ValueError):
    """The requested functions are not identified by the design."""


class ZeroHypothesisError(ValueError):
    """The function matrix is identically zero: zero df, no test exists."""


@dataclass
class LinearHypothesis:
    """A testable hypothesis that ``contrast.T @ beta = 0``.

    Fields:
        contrast: k x c matrix of estimable functions.
        null_space: orthonormal basis of the parameter vectors satisfying
            the hypothesis; the restricted model is design @ null_space.
        representer: matrix with columns in the design's column space whose
            inner products with the response reproduce the estimated
            functions (design.T @ representer == contrast).
        df: numerator degrees of freedom, rank(P_X) - rank(P_XN).
    """

    contrast: np.ndarray
    null_space: np.ndarray
    representer: np.ndarray
    df: int


@dataclass
class YatesDecomposition:
    """Weighted-summary route to the same hypothesis.

    ``summary_map.T @ y`` yields the summary statistics (marginal means of
    cell means, in the two-factor case); ``contrasts`` expresses the
    hypothesis on those summaries; ``null_basis`` spans the complement of
    the contrast span (the summaries' null model); ``gram`` is
    summary_map.T @ summary_map, the summaries' covariance up to the error
    variance.
    """

    summary_map: np.ndarray
    contrasts: np.ndarray
    null_basis: np.ndarray
    gram: np.ndarray


def make_hypothesis(x, g, tol: float = DEFAULT_TOL) -> LinearHypothesis:
    """Validate estimability of ``g`` under design ``x`` and derive the
    null-space basis, representer, and degrees of freedom.

    Raises NotEstimableError when span(g) is not inside the design's row
    space, and ZeroHypothesisError when ``g`` is identically zero.
    """
    x = as_matrix(x, "design")
    g = as_matrix(g, "contrast")
    k = x.shape[1]
    if g.shape[0] != k:
        raise ValueError(f"contrast has {g.shape[0]} rows, design has {k} columns")
    col_norms = np.linalg.norm(g, axis=0)
    if g.shape[1] == 0 or not col_norms.any():
        raise ZeroHypothesisError("contrast matrix is zero: df = 0, no test exists")
    row_basis = gram_schmidt(x.T, tol).basis
    residual = g - row_basis @ (row_basis.T @ g)
    bad = np.linalg.norm(residual, axis=0) > tol * np.maximum(col_norms, 1.0)
    if bad.any():
        raise NotEstimableError(
            f"columns {np.flatnonzero(bad).tolist()} of the contrast are not "
            "estimable under this design"
        )
    null_space = complement_basis(g, k, tol)
    representer = x @ (g_inverse(x.T @ x, tol) @ g)
    df = gram_schmidt(x, tol).rank - gram_schmidt(x @ null_space, tol).rank
    return LinearHypothesis(
        contrast=g, null_space=null_space, representer=representer, df=df
    )


def two_factor_hypothesis(
    dataset: Dataset, effect: str, tol: float = DEFAULT_TOL
) -> tuple[LinearHypothesis, YatesDecomposition]:
    """Hypothesis and summary decomposition for a two-factor effect.

    Effect "A" tests equality of the A marginal means (unweighted averages
    of cell means over B levels), "B" the symmetric statement, and "AB"
    vanishing interaction. The main-effect decompositions use the low
    dimension summary (one value per level, a one-column null basis); the
    interaction uses the cell means themselves as summaries.
    """
    if effect not in EFFECTS:
        raise ValueError(f"effect must be one of {EFFECTS}, got {effect!r}")
    a = len(dataset.a_levels)
    b = len(dataset.b_levels)
    design = cell_means_design(dataset)
    inv_counts = np.diag(1.0 / dataset.cell_counts.ravel())

    if effect == "A":
        level_sum = kronecker(np.eye(a), ones_column(b))
        contrast_full = kronecker(centering_matrix(a), ones_column(b)) / b
        summary_map = design @ inv_counts @ level_sum / b
        contrasts = centering_matrix(a)
        null_basis = ones_column(a)
    elif effect == "B":
        level_sum = kronecker(ones_column(a), np.eye(b))
        contrast_full = kronecker(ones_column(a), centering_matrix(b)) / a
        summary_map = design @ inv_counts @ level_sum / a
        contrasts = centering_matrix(b)
        null_basis = ones_column(b)
    else:  # AB
        contrast_full = kronecker(centering_matrix(a), centering_matrix(b))
        summary_map = design @ inv_counts
        contrasts = contrast_full
        null_basis = complement_basis(contrasts, a * b, tol)

    hyp = make_hypothesis(design, contrast_full, tol)
    decomposition = YatesDecomposition(
        summary_map=summary_map,
        contrasts=contrasts,
        null_basis=null_basis,
        gram=summary_map.T @ summary_map,
    )
    return hyp, decomposition


def marginal_means(decomposition: YatesDecomposition, y) -> np.ndarray:
    """Summary statistics of a response under a decomposition.

    For a main effect these are the per-level unweighted averages of the
    sample cell means across the other factor.
    """
    y = np.asarray(y, dtype=float)
    return decomposition.summary_map.T @ y
