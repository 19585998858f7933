"""Command-line interface.

Two modes:

* default: read a CSV of observations, compute the ANOVA table, print it
  as text or JSON;
* ``verify``: run the self-checking suites (formulation equivalence,
  projector identities, null-distribution calibration) and report PASS/FAIL.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .anova import anova_report, render_text
from .design import Dataset, EmptyCellError
from .linalg import DEFAULT_TOL
from .sumsquares import DEFAULT_AGREEMENT_TOL
from .verify import run_all


class ParseError(ValueError):
    """Input CSV could not be interpreted as a two-factor dataset."""


def read_dataset(path: str, response: str, factor_a: str, factor_b: str) -> Dataset:
    """Load observations from a CSV file with a header row.

    Labels are stripped of surrounding whitespace; fully blank lines are
    skipped. Raises :class:`ParseError` with the offending row number for
    anything malformed, and propagates :class:`EmptyCellError` if the level
    grid has a hole.
    """
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            rows = list(csv.reader(handle))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    if not rows:
        raise ParseError(f"{path}: file is empty, expected a header row")
    header = [cell.strip() for cell in rows[0]]
    columns = {}
    for role, name in (("response", response), ("factor", factor_a), ("factor", factor_b)):
        if name not in header:
            raise ParseError(
                f"{path}: {role} column {name!r} not found; header has {header}"
            )
        columns[name] = header.index(name)
    observations = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not any(cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise ParseError(
                f"{path}:{lineno}: expected {len(header)} fields, found {len(row)}"
            )
        a_label = row[columns[factor_a]].strip()
        b_label = row[columns[factor_b]].strip()
        if not a_label or not b_label:
            which = factor_a if not a_label else factor_b
            raise ParseError(f"{path}:{lineno}: empty label in factor column {which!r}")
        raw = row[columns[response]].strip()
        try:
            value = float(raw)
        except ValueError:
            raise ParseError(
                f"{path}:{lineno}: response {raw!r} is not numeric"
            ) from None
        observations.append((a_label, b_label, value))
    if not observations:
        raise ParseError(f"{path}: no data rows after the header")
    return Dataset(observations)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anova",
        description=(
            "F tests for unbalanced two-factor layouts, with the hypothesis "
            "sum of squares computed by several provably equivalent routes."
        ),
    )
    parser.add_argument("--input", help="CSV file with a header row")
    parser.add_argument("--response", help="name of the numeric response column")
    parser.add_argument(
        "--factors",
        help="comma-separated names of the two factor columns, A first",
    )
    parser.add_argument(
        "--effects",
        default="all",
        help="comma-separated subset of A,B,AB (default: all)",
    )
    parser.add_argument(
        "--methods",
        default="all",
        help=(
            "comma-separated subset of geometric,rmfm,pearson,yates,mwsm "
            "to display (default: all; every method is computed regardless)"
        ),
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    parser.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOL,
        help="relative tolerance for rank decisions (default %(default)g)",
    )
    parser.add_argument(
        "--agreement-tol",
        type=float,
        default=DEFAULT_AGREEMENT_TOL,
        help="tolerance for cross-method agreement warnings (default %(default)g)",
    )
    sub = parser.add_subparsers(dest="command")
    verify = sub.add_parser(
        "verify", help="run the self-checking suites and print PASS/FAIL lines"
    )
    verify.add_argument("--seed", type=int, required=True, help="RNG seed")
    verify.add_argument(
        "--instances",
        type=int,
        default=200,
        help="random model instances for the equivalence suite (default %(default)s)",
    )
    verify.add_argument(
        "--draws",
        type=int,
        default=10000,
        help="Monte Carlo draws for the distribution suite (default %(default)s)",
    )
    verify.add_argument(
        "--corrupt",
        action="store_true",
        help=argparse.SUPPRESS,  # negative control: perturb one method and expect FAIL
    )
    return parser


def run_verify(args) -> int:
    results = run_all(
        args.seed, instances=args.instances, draws=args.draws, corrupt=args.corrupt
    )
    for result in results:
        print(result)
    if all(r.passed for r in results):
        print(f"all {len(results)} suites passed")
        return 0
    failed = sum(not r.passed for r in results)
    print(f"{failed} of {len(results)} suites FAILED")
    return 1


def run_table(args, parser: argparse.ArgumentParser) -> int:
    for required in ("input", "response", "factors"):
        if getattr(args, required) in (None, ""):
            parser.error(f"--{required} is required")
    factor_names = [part.strip() for part in args.factors.split(",")]
    if len(factor_names) != 2 or not all(factor_names):
        parser.error("--factors needs exactly two comma-separated column names")
    dataset = read_dataset(args.input, args.response, *factor_names)
    report = anova_report(
        dataset,
        effects=args.effects,
        methods=args.methods,
        tol=args.tol,
        agreement_tol=args.agreement_tol,
    )
    report["config"] = {
        "input": args.input,
        "response": args.response,
        "factors": factor_names,
        "effects": args.effects,
        "methods": args.methods,
        "format": args.format,
        "tol": args.tol,
        "agreement_tol": args.agreement_tol,
    }
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return run_verify(args)
        return run_table(args, parser)
    except (ParseError, EmptyCellError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
