"""End-to-end ANOVA table assembly for two-factor datasets.

``anova_report`` produces one plain dict holding everything the CLI emits;
the JSON output is that dict verbatim and the text table is rendered from
it, so the two formats cannot drift apart.
"""

from __future__ import annotations

from .design import Dataset, cell_means_design, fit
from .inference import f_test
from .linalg import DEFAULT_TOL
from .sumsquares import DEFAULT_AGREEMENT_TOL, effect_sum_of_squares

METHOD_ORDER = ("geometric", "rmfm", "pearson", "yates", "mwsm")
EFFECT_ORDER = ("A", "B", "AB")

SATURATED_NOTE = "saturated model: zero error degrees of freedom, F and p undefined"


def normalize_selection(requested, allowed, what: str) -> tuple[str, ...]:
    """Expand "all" and validate a comma-separated or iterable selection,
    preserving canonical order."""
    if requested in (None, "all", ("all",), ["all"]):
        return tuple(allowed)
    if isinstance(requested, str):
        items = [part.strip() for part in requested.split(",") if part.strip()]
    else:
        items = [str(part).strip() for part in requested]
    for item in items:
        if item not in allowed:
            raise ValueError(f"unknown {what} {item!r}; expected one of {allowed}")
    return tuple(item for item in allowed if item in items)


def anova_report(
    dataset: Dataset,
    effects=("A", "B", "AB"),
    methods=METHOD_ORDER,
    tol: float = DEFAULT_TOL,
    agreement_tol: float = DEFAULT_AGREEMENT_TOL,
) -> dict:
    """Full ANOVA report as a JSON-ready dict.

    Every formulation is always computed (their agreement is part of the
    product); ``methods`` only selects which values appear in the output.
    F statistics use the restricted-vs-full-model sum of squares and are
    suppressed, with an explanatory note, when the model is saturated.
    """
    effects = normalize_selection(effects, EFFECT_ORDER, "effect")
    methods = normalize_selection(methods, METHOD_ORDER, "method")
    x = cell_means_design(dataset)
    error_fit = fit(x, dataset.responses, tol)
    saturated = error_fit.df_error == 0

    effect_rows = []
    for effect in effects:
        report = effect_sum_of_squares(dataset, effect, tol=tol)
        ss = {name: value for name, value in report.values.items() if name in methods}
        row = {
            "name": effect,
            "df": report.df,
            "ss": ss,
            "discrepancy": report.max_discrepancy,
            "agreement_ok": report.agrees(agreement_tol),
        }
        if saturated:
            row["f"] = None
            row["p"] = None
            row["note"] = SATURATED_NOTE
        else:
            result = f_test(report, error_fit)
            row["f"] = result.f_statistic
            row["p"] = result.p_value
        effect_rows.append(row)

    return {
        "effects": effect_rows,
        "error": {
            "ss": error_fit.sse,
            "df": error_fit.df_error,
            "mse": error_fit.mse,
        },
        "levels": {"A": list(dataset.a_levels), "B": list(dataset.b_levels)},
        "n_observations": dataset.n_total,
    }


def _num(value) -> str:
    return f"{value:.12g}"


def render_text(report: dict) -> str:
    """Fixed-width table rendering of an :func:`anova_report` dict."""
    methods = [
        name
        for name in METHOD_ORDER
        if any(name in row["ss"] for row in report["effects"])
    ]
    header = ["Effect", "df"] + [f"SS[{m}]" for m in methods] + ["max|diff|", "F", "p"]
    rows = [header]
    for row in report["effects"]:
        cells = [row["name"], str(row["df"])]
        for m in methods:
            cells.append(_num(row["ss"][m]) if m in row["ss"] else "-")
        cells.append(f"{row['discrepancy']:.3e}")
        cells.append(_num(row["f"]) if row["f"] is not None else "-")
        cells.append(_num(row["p"]) if row["p"] is not None else "-")
        rows.append(cells)
    error = report["error"]
    rows.append(
        ["Error", str(error["df"]), _num(error["ss"])]
        + [""] * (len(methods) - 1) + ["", "", ""]
    )

    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = [
        f"Two-factor ANOVA: {report['n_observations']} observations, "
        f"A levels {len(report['levels']['A'])}, B levels {len(report['levels']['B'])}"
    ]
    for idx, cells in enumerate(rows):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip())
        if idx == 0:
            lines.append("-" * (sum(widths) + 2 * (len(widths) - 1)))
    mse = error["mse"]
    lines.append(f"Error mean square: {_num(mse) if mse is not None else '-'}")
    notes = {row.get("note") for row in report["effects"] if row.get("note")}
    for note in sorted(notes):
        lines.append(f"note: {note}")
    disagreements = [row["name"] for row in report["effects"] if not row["agreement_ok"]]
    if disagreements:
        lines.append(
            "WARNING: formulations disagree beyond tolerance for "
            f"{', '.join(disagreements)}; the rmfm value is canonical"
        )
    return "\n".join(lines)
