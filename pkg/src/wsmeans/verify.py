"""Randomized self-verification suites.

Each check draws seeded random instances, measures worst-case departures
from an identity the library is supposed to satisfy, and reports pass/fail
against a fixed threshold. The CLI ``verify`` subcommand drives these and
exits nonzero when any check fails.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .design import Dataset, cell_means_design
from .hypotheses import two_factor_hypothesis
from .inference import chi_square_simulation, noncentrality
from .linalg import complement_basis, projector, sym_sqrt_pd
from .special import chi_square_cdf
from .sumsquares import effect_sum_of_squares, numerator_projector

#: Asymptotic 1% Kolmogorov-Smirnov critical value scale.
KS_CRITICAL_1PCT = 1.63

EXPECTED_DF = {
    "A": lambda a, b: a - 1,
    "B": lambda a, b: b - 1,
    "AB": lambda a, b: (a - 1) * (b - 1),
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    discrepancy: float
    threshold: float
    detail: str

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.name}: {status}  max discrepancy {self.discrepancy:.3e} "
            f"(threshold {self.threshold:.3e})  {self.detail}"
        )


def random_dataset(
    rng: np.random.Generator,
    level_range: tuple[int, int] = (2, 4),
    max_count: int = 5,
) -> Dataset:
    """Unbalanced two-factor dataset with random level counts and cell sizes."""
    lo, hi = level_range
    a = int(rng.integers(lo, hi + 1))
    b = int(rng.integers(lo, hi + 1))
    observations = []
    for i in range(a):
        for j in range(b):
            for _ in range(int(rng.integers(1, max_count + 1))):
                observations.append((f"a{i + 1}", f"b{j + 1}", rng.standard_normal()))
    return Dataset(observations)


def ks_distance(sample: np.ndarray, cdf) -> float:
    """Kolmogorov-Smirnov distance between a sample and a reference CDF."""
    values = np.sort(np.asarray(sample, dtype=float))
    n = values.size
    probs = np.array([cdf(v) for v in values])
    steps = np.arange(1, n + 1) / n
    return float(max((steps - probs).max(), (probs - (steps - 1.0 / n)).max()))


def equivalence_check(
    seed: int, instances: int = 200, corrupt: bool = False
) -> CheckResult:
    """All formulations agree on random unbalanced layouts, every effect.

    ``corrupt`` deliberately perturbs one formulation's value, as a negative
    control proving the comparison has teeth.
    """
    rng = np.random.default_rng(seed)
    threshold = 1e-8
    worst = 0.0
    df_ok = True
    for _ in range(instances):
        dataset = random_dataset(rng)
        a = len(dataset.a_levels)
        b = len(dataset.b_levels)
        for effect in ("A", "B", "AB"):
            report = effect_sum_of_squares(dataset, effect)
            values = report.values
            if corrupt:
                values["pearson"] += 1e-5 * (1.0 + values["pearson"])
            spread = max(values.values()) - min(values.values())
            worst = max(worst, spread / (1.0 + values["geometric"]))
            if report.df != EXPECTED_DF[effect](a, b):
                df_ok = False
    passed = worst <= threshold and df_ok
    detail = f"instances={instances} effects=A,B,AB df_consistent={df_ok}"
    return CheckResult("equivalence", passed, worst, threshold, detail)


def projector_identity_check(seed: int, instances: int = 100) -> CheckResult:
    """Projector identity between a weighted span and its weighted complement.

    For random R, M spanning the complement of span(R), and random symmetric
    pd D: the projector onto span(D^{1/2} R) equals the identity minus the
    projector onto span(D^{-1/2} M).
    """
    rng = np.random.default_rng(seed)
    threshold = 1e-8
    worst = 0.0
    for _ in range(instances):
        r_dim = int(rng.integers(2, 7))
        c_dim = int(rng.integers(1, r_dim + 2))
        r_mat = rng.uniform(-1.0, 1.0, size=(r_dim, c_dim))
        m_mat = complement_basis(r_mat, r_dim)
        l_mat = rng.uniform(-1.0, 1.0, size=(r_dim, r_dim))
        d_mat = l_mat @ l_mat.T + 0.5 * np.eye(r_dim)
        d_half = sym_sqrt_pd(d_mat)
        d_half_inv = np.linalg.inv(d_half)
        left = projector(d_half @ r_mat)
        right = np.eye(r_dim) - projector(d_half_inv @ m_mat)
        worst = max(worst, float(np.abs(left - right).max()))
    return CheckResult(
        "projector_identity", worst <= threshold, worst, threshold, f"instances={instances}"
    )


def projector_uniqueness_check(seed: int, instances: int = 25, draws_per: int = 4) -> CheckResult:
    """Consequences of the numerator projector's uniqueness.

    On random two-factor layouts, P = P_full - P_restricted annihilates the
    restricted design, has trace equal to the effect df, yields zero
    noncentrality on every null-conforming parameter vector, positive
    noncentrality off the null, and the whole-space projector P_full fails
    the defining span condition (counterexample to any other choice).
    """
    rng = np.random.default_rng(seed)
    threshold = 1e-8
    worst = 0.0
    structure_ok = True
    for _ in range(instances):
        dataset = random_dataset(rng)
        a = len(dataset.a_levels)
        b = len(dataset.b_levels)
        x = cell_means_design(dataset)
        for effect in ("A", "B", "AB"):
            hyp, _ = two_factor_hypothesis(dataset, effect)
            p = numerator_projector(x, hyp.null_space)
            worst = max(worst, float(np.abs(p @ (x @ hyp.null_space)).max()))
            worst = max(
                worst, abs(float(np.trace(p)) - EXPECTED_DF[effect](a, b))
            )
            for _ in range(draws_per):
                gamma = rng.standard_normal(hyp.null_space.shape[1])
                worst = max(worst, noncentrality(x, p, hyp.null_space @ gamma, 1.0))
                beta = rng.standard_normal(x.shape[1])
                if np.abs(hyp.contrast.T @ beta).max() > 1e-3:
                    if noncentrality(x, p, beta, 1.0) <= 0.0:
                        structure_ok = False
            # The full-space projector is a symmetric idempotent inside the
            # design span whose transformed span strictly exceeds the
            # hypothesis span, so it cannot serve as the numerator projector.
            p_full = projector(x)
            rank_full = np.linalg.matrix_rank(x.T @ p_full)
            if rank_full <= hyp.df:
                structure_ok = False
    passed = worst <= threshold and structure_ok
    detail = f"instances={instances} alternatives_positive={structure_ok}"
    return CheckResult("projector_uniqueness", passed, worst, threshold, detail)


def distribution_check(seed: int, draws: int = 10000) -> CheckResult:
    """Null distribution of the numerator SS on a fixed unbalanced layout.

    Checks the chi-squared fit of SS/sigma2 (KS at the 1% level), uniformity
    of the F-test p-values (KS at 1%), and near-zero sample correlation
    between numerator SS and SSE.
    """
    observations = []
    counts = {(0, 0): 1, (0, 1): 2, (1, 0): 3, (1, 1): 1, (2, 0): 2, (2, 1): 2}
    filler = np.random.default_rng(seed + 1)
    for (i, j), c in counts.items():
        for _ in range(c):
            observations.append((f"a{i + 1}", f"b{j + 1}", filler.standard_normal()))
    dataset = Dataset(observations)
    x = cell_means_design(dataset)
    hyp, _ = two_factor_hypothesis(dataset, "A")
    sim = chi_square_simulation(x, hyp, n_draws=draws, seed=seed)

    ks_crit = KS_CRITICAL_1PCT / np.sqrt(draws)
    ks_chi2 = ks_distance(sim.ss_scaled, lambda v: chi_square_cdf(v, sim.df_numerator))
    ks_uniform = ks_distance(sim.p_values, lambda v: min(max(v, 0.0), 1.0))
    corr = float(np.corrcoef(sim.ss_scaled, sim.sse_scaled)[0, 1])
    corr_bound = 4.0 / np.sqrt(draws)

    passed = ks_chi2 < ks_crit and ks_uniform < ks_crit and abs(corr) <= corr_bound
    worst = max(ks_chi2 / ks_crit, ks_uniform / ks_crit, abs(corr) / corr_bound)
    detail = (
        f"draws={draws} ks_chi2={ks_chi2:.4f} ks_uniform={ks_uniform:.4f} "
        f"|corr|={abs(corr):.4f} (ks crit {ks_crit:.4f}, corr bound {corr_bound:.4f})"
    )
    # discrepancy reported as worst ratio to its own threshold
    return CheckResult("distribution", passed, worst, 1.0, detail)


def run_all(
    seed: int,
    instances: int = 200,
    draws: int = 10000,
    corrupt: bool = False,
) -> list[CheckResult]:
    """Run every verification suite with substreams derived from one seed."""
    return [
        equivalence_check(seed, instances=instances, corrupt=corrupt),
        projector_identity_check(seed + 1),
        projector_uniqueness_check(seed + 2),
        distribution_check(seed + 3, draws=draws),
    ]
