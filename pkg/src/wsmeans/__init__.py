"""Weighted squares of means and friends: exact F tests for unbalanced
two-factor layouts, with the hypothesis sum of squares computed by four
provably equivalent routes (projection difference, model comparison,
quadratic form in the estimated function, and weighted summary means).
"""

from .anova import anova_report, render_text
from .design import (
    Dataset,
    DimensionMismatchError,
    EmptyCellError,
    ModelFit,
    cell_means,
    cell_means_design,
    fit,
)
from .hypotheses import (
    EFFECTS,
    LinearHypothesis,
    NotEstimableError,
    YatesDecomposition,
    ZeroHypothesisError,
    make_hypothesis,
    marginal_means,
    two_factor_hypothesis,
)
from .inference import (
    NoErrorDfError,
    NoHypothesisDfError,
    NullSimulation,
    TestResult,
    chi_square_simulation,
    f_test,
    noncentrality,
)
from .linalg import (
    DEFAULT_TOL,
    OrthonormalBasis,
    complement_basis,
    g_inverse,
    gram_schmidt,
    projector,
)
from .special import (
    chi_square_cdf,
    f_survival,
    regularized_incomplete_beta,
    regularized_lower_gamma,
)
from .sumsquares import (
    DEFAULT_AGREEMENT_TOL,
    SingularGramError,
    SumOfSquaresReport,
    effect_sum_of_squares,
    numerator_projector,
    ss_geometric,
    ss_mwsm,
    ss_pearson,
    ss_rmfm,
    ss_yates_general,
)
from .verify import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "anova_report",
    "render_text",
    "Dataset",
    "DimensionMismatchError",
    "EmptyCellError",
    "ModelFit",
    "cell_means",
    "cell_means_design",
    "fit",
    "EFFECTS",
    "LinearHypothesis",
    "NotEstimableError",
    "YatesDecomposition",
    "ZeroHypothesisError",
    "make_hypothesis",
    "marginal_means",
    "two_factor_hypothesis",
    "NoErrorDfError",
    "NoHypothesisDfError",
    "NullSimulation",
    "TestResult",
    "chi_square_simulation",
    "f_test",
    "noncentrality",
    "DEFAULT_TOL",
    "OrthonormalBasis",
    "complement_basis",
    "g_inverse",
    "gram_schmidt",
    "projector",
    "chi_square_cdf",
    "f_survival",
    "regularized_incomplete_beta",
    "regularized_lower_gamma",
    "DEFAULT_AGREEMENT_TOL",
    "SingularGramError",
    "SumOfSquaresReport",
    "effect_sum_of_squares",
    "numerator_projector",
    "ss_geometric",
    "ss_mwsm",
    "ss_pearson",
    "ss_rmfm",
    "ss_yates_general",
    "CheckResult",
    "run_all",
]
