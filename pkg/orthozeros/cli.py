"""
Command line front end.

    zeros --family chebyshev1 --degree 20 --verify-exact
    zeros --family jacobi --alpha 0.25 --beta 0.125 --degree 25 --format csv
    zeros --paper-tables --degree 20 --degree 25 --output tables/

Exit codes: 0 on success, 1 for bad parameters, 2 when a solve fails or does not
converge, 3 when a verification check fails.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import TYPE_CHECKING, NoReturn, override

import numpy as np
from pydantic import ValidationError

from orthozeros.constants import (
    ERROR_TABLE_PRESETS,
    EXACT_ERROR_BOUND,
    TABLE_DEGREES,
    ZERO_TABLE_PRESETS,
)
from orthozeros.equilibrium import Configuration
from orthozeros.errors import SolverError, ZerosError
from orthozeros.families import PRESETS, Family, FamilySpec
from orthozeros.records import OutputRecord
from orthozeros.settings import (
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_TOLERANCE,
    LOG_LEVELS,
    SolverSettings,
    configure_logging,
)
from orthozeros.solver import solve
from orthozeros.tables import error_table_csv, record_json, zero_table_csv, zeros_csv
from orthozeros.verify import (
    CHEBYSHEV_FIRST_KIND,
    chebyshev_exact_zeros,
    error_row,
    infinity_norm_diff,
    oracle_report,
    solve_preset,
)

if TYPE_CHECKING:
    from collections.abc import Sequence

    import numpy.typing as npt

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    PARAMETER_ERROR = 1
    NOT_CONVERGED = 2
    VERIFICATION_FAILED = 3


class UsageError(ZerosError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would exit with status 2, which is reserved for non-convergence.
    @override
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


FAMILY_CHOICES = (
    *(family.value for family in Family),
    *(name for name in PRESETS if name != Family.HERMITE.value),
)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="zeros",
        description="Zeros of the classical orthogonal polynomials, computed as the "
        "equilibrium of a logarithmic energy.",
    )
    parser.add_argument("--family", choices=FAMILY_CHOICES)
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--beta", type=float)
    parser.add_argument(
        "--degree",
        type=int,
        action="append",
        help="Polynomial degree; may be repeated with --paper-tables",
    )
    parser.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    parser.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITERATIONS)
    parser.add_argument(
        "--format", choices=("csv", "json"), help="Output format; default is csv"
    )
    parser.add_argument(
        "--output",
        type=Path,
        help="File to write (directory with --paper-tables); default is stdout",
    )
    parser.add_argument(
        "--verify-exact",
        action="store_true",
        help="Compare against the closed-form Chebyshev zeros",
    )
    parser.add_argument(
        "--verify",
        action="store_true",
        help="Check the zeros against the recurrence and the unified residual",
    )
    parser.add_argument(
        "--paper-tables",
        action="store_true",
        help="Write the zero and error-estimate tables for every preset family",
    )
    parser.add_argument(
        "--seed-config",
        type=Path,
        help="Starting configuration, one real per line",
    )
    parser.add_argument("--log-level", choices=LOG_LEVELS, default="WARNING")
    return parser


def resolve_family(
    name: str, alpha: float | None, beta: float | None
) -> tuple[str, FamilySpec]:
    """Map a --family choice and its parameters to a label and a family."""
    if name in PRESETS and name != Family.HERMITE.value:
        if alpha is not None or beta is not None:
            msg = f"--family {name} fixes its own parameters"
            raise UsageError(msg)
        preset = PRESETS[name]
        return preset.label, preset.spec

    spec = FamilySpec(Family(name), alpha, beta)
    return spec.describe(), spec


def read_seed(path: Path) -> npt.NDArray[np.float64]:
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
        values = [float(line) for line in lines if line.strip()]
    except (OSError, ValueError) as exc:
        msg = f"cannot read seed configuration {path}: {exc}"
        raise UsageError(msg) from exc
    return np.array(values, dtype=np.float64)


def _write(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8", newline="\n")


def _report_error(exc: BaseException) -> None:
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    for note in getattr(exc, "__notes__", ()):
        print(f"  {note}", file=sys.stderr)


def _single_degree(degrees: list[int] | None) -> int:
    if degrees is None or len(degrees) != 1:
        msg = "exactly one --degree is required"
        raise UsageError(msg)
    (degree,) = degrees
    if degree < 1:
        msg = f"--degree must be at least 1 (got {degree})"
        raise UsageError(msg)
    return degree


def run_single(args: argparse.Namespace, settings: SolverSettings) -> ExitCode:
    if args.family is None:
        msg = "--family is required unless --paper-tables is given"
        raise UsageError(msg)

    degree = _single_degree(args.degree)
    label, spec = resolve_family(args.family, args.alpha, args.beta)

    if args.verify_exact and spec != CHEBYSHEV_FIRST_KIND:
        msg = "--verify-exact needs the Chebyshev first-kind family"
        raise UsageError(msg)

    initial = None
    if args.seed_config is not None:
        seed = read_seed(args.seed_config)
        if seed.size != degree:
            msg = f"seed configuration has {seed.size} points, expected {degree}"
            raise UsageError(msg)
        initial = Configuration(spec, seed)

    try:
        report = solve(spec, degree, settings, initial)
    except SolverError as exc:
        _report_error(exc)
        return ExitCode.NOT_CONVERGED

    exact_error = None
    if args.verify_exact:
        exact_error = infinity_norm_diff(
            report.zeros.points, chebyshev_exact_zeros(degree)
        )

    record = OutputRecord.from_report(label, report, exact_error)
    if args.format == "json":
        _write(record_json(record), args.output)
    else:
        _write(zeros_csv(record), args.output)

    if not report.converged:
        print(
            f"error: NotConverged: {label}, n={degree} after {report.iterations} "
            f"iterations (step {report.final_step_norm:.3e})",
            file=sys.stderr,
        )
        return ExitCode.NOT_CONVERGED

    verified = True
    if exact_error is not None:
        ok = exact_error <= EXACT_ERROR_BOUND
        verified &= ok
        status = "ok" if ok else "FAILED"
        print(f"exact error {exact_error:.3e} {status}", file=sys.stderr)

    if args.verify:
        oracle = oracle_report(spec, degree, report)
        verified &= oracle.passed
        print(
            f"polish residual {oracle.polish_residual:.3e}, "
            f"unified residual {oracle.proposition_norm:.3e} "
            f"(bound {oracle.proposition_bound:.3e}), "
            f"definiteness {'ok' if oracle.audit.passed else 'FAILED'}",
            file=sys.stderr,
        )

    return ExitCode.OK if verified else ExitCode.VERIFICATION_FAILED


@dataclass(frozen=True)
class EmittedTables:
    paths: list[Path]
    all_converged: bool


def emit_paper_tables(
    degrees: Sequence[int],
    directory: Path,
    settings: SolverSettings | None = None,
) -> EmittedTables:
    """
    Write one zero table and one error-estimate table per degree.

    A family that fails to solve leaves empty cells and a logged diagnostic rather
    than aborting the run.
    """
    if not degrees:
        msg = "at least one degree is required"
        raise ValueError(msg)

    directory.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    all_converged = True
    for degree in degrees:
        # One solve per preset feeds both tables.
        outcomes = {
            name: solve_preset(name, degree, settings) for name in ERROR_TABLE_PRESETS
        }

        columns: dict[str, list[float] | None] = {}
        for name in ZERO_TABLE_PRESETS:
            outcome = outcomes[name]
            columns[PRESETS[name].label] = (
                None
                if isinstance(outcome, ZerosError)
                else outcome.zeros.points.tolist()
            )

        zero_path = directory / f"zeros_n{degree}.csv"
        zero_path.write_text(
            zero_table_csv(degree, columns), encoding="utf-8", newline="\n"
        )
        written.append(zero_path)

        rows = [error_row(name, degree, outcomes[name]) for name in ERROR_TABLE_PRESETS]
        error_path = directory / f"errors_n{degree}.csv"
        error_path.write_text(error_table_csv(rows), encoding="utf-8", newline="\n")
        written.append(error_path)

        converged = sum(row.converged for row in rows)
        logger.info("n=%d: %d of %d presets converged", degree, converged, len(rows))
        all_converged &= converged == len(rows)

    return EmittedTables(paths=written, all_converged=all_converged)


def _reject_single_options(args: argparse.Namespace) -> None:
    given = [
        flag
        for flag, value in (
            ("--family", args.family),
            ("--alpha", args.alpha),
            ("--beta", args.beta),
            ("--format", args.format),
            ("--seed-config", args.seed_config),
        )
        if value is not None
    ]
    if args.verify:
        given.append("--verify")
    if args.verify_exact:
        given.append("--verify-exact")
    if given:
        msg = f"--paper-tables does not take {', '.join(given)}"
        raise UsageError(msg)


def run_paper_tables(args: argparse.Namespace, settings: SolverSettings) -> ExitCode:
    _reject_single_options(args)
    degrees = TABLE_DEGREES if args.degree is None else tuple(args.degree)
    if any(degree < 1 for degree in degrees):
        msg = f"every --degree must be at least 1 (got {list(degrees)})"
        raise UsageError(msg)

    directory = Path() if args.output is None else args.output
    emitted = emit_paper_tables(degrees, directory, settings)
    for path in emitted.paths:
        print(f"wrote {path}", file=sys.stderr)

    return ExitCode.OK if emitted.all_converged else ExitCode.NOT_CONVERGED


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        configure_logging(args.log_level)
        settings = SolverSettings(tolerance=args.tol, max_iterations=args.max_iter)
        if args.paper_tables:
            return run_paper_tables(args, settings)
        return run_single(args, settings)
    except SolverError as exc:
        _report_error(exc)
        return ExitCode.NOT_CONVERGED
    except (ZerosError, ValidationError) as exc:
        _report_error(exc)
        return ExitCode.PARAMETER_ERROR


if __name__ == "__main__":
    sys.exit(main())
