"""
Independent checks on computed zeros.

None of these reuse the Newton machinery's notion of success: the Chebyshev zeros
are known in closed form, the recurrence evaluator never sees the equilibrium
equations, and the unified residual is written from the ODE coefficients alone.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from pydantic import BaseModel, ConfigDict

from orthozeros.constants import (
    ERROR_TABLE_PRESETS,
    POLISH_BOUND,
    PROPOSITION_BOUND,
)
from orthozeros.equilibrium import Configuration, hessian, proposition_residual
from orthozeros.errors import (
    DerivativeVanishes,
    FactorizationFailure,
    LengthMismatch,
    ZerosError,
)
from orthozeros.families import PRESETS, FamilySpec, evaluate_many, ode_coefficients
from orthozeros.solver import factorize, solve

if TYPE_CHECKING:
    from collections.abc import Iterable

    import numpy.typing as npt

    from orthozeros.settings import SolverSettings
    from orthozeros.solver import SolveReport

    type FloatArray = npt.NDArray[np.float64]

logger = logging.getLogger(__name__)

CHEBYSHEV_FIRST_KIND = PRESETS["chebyshev1"].spec


def chebyshev_exact_zeros(n: int) -> FloatArray:
    """cos((2k - 1) pi / 2n) for k = n down to 1, so in ascending order."""
    if n < 1:
        msg = f"degree must be at least 1 (got {n})"
        raise ValueError(msg)
    k = np.arange(n, 0, -1, dtype=np.float64)
    return np.cos((2.0 * k - 1.0) * np.pi / (2.0 * n))


def infinity_norm_diff(u: npt.ArrayLike, v: npt.ArrayLike) -> float:
    left = np.asarray(u, dtype=np.float64)
    right = np.asarray(v, dtype=np.float64)
    if left.shape != right.shape:
        msg = f"cannot compare vectors of shapes {left.shape} and {right.shape}"
        raise LengthMismatch(msg)
    if left.size == 0:
        return 0.0
    return float(np.max(np.abs(left - right)))


def polish_residual(spec: FamilySpec, n: int, zeros: npt.ArrayLike) -> float:
    """
    Largest scalar Newton correction |p_n(x_k) / p_n'(x_k)| under the recurrence.

    This bounds the forward error of each zero to first order.
    """
    config = Configuration(spec, np.asarray(zeros, dtype=np.float64))
    if config.n != n:
        msg = f"expected {n} zeros, got {config.n}"
        raise LengthMismatch(msg)

    values, derivatives = evaluate_many(spec, n, config.points)
    vanishing = np.abs(derivatives) < np.finfo(np.float64).tiny
    if np.any(vanishing):
        where = config.points[vanishing].tolist()
        msg = f"derivative of the degree {n} polynomial underflows at {where}"
        raise DerivativeVanishes(msg)

    return float(np.max(np.abs(values / derivatives)))


@dataclass(frozen=True)
class DefinitenessAudit:
    diagonally_dominant: bool
    negative_diagonal: bool
    factorization_succeeds: bool

    @property
    def passed(self) -> bool:
        return (
            self.diagonally_dominant
            and self.negative_diagonal
            and self.factorization_succeeds
        )


def definiteness_audit(config: Configuration) -> DefinitenessAudit:
    matrix = hessian(config)
    diagonal = np.diag(matrix)
    off_diagonal = np.abs(matrix).sum(axis=1) - np.abs(diagonal)

    try:
        factorize(matrix)
    except FactorizationFailure:
        factorization_succeeds = False
    else:
        factorization_succeeds = True

    return DefinitenessAudit(
        diagonally_dominant=bool(np.all(np.abs(diagonal) > off_diagonal)),
        negative_diagonal=bool(np.all(diagonal < 0)),
        factorization_succeeds=factorization_succeeds,
    )


def proposition_bound(config: Configuration) -> float:
    """Tolerance on the unified residual at a converged solution."""
    coeffs = ode_coefficients(config.spec, config.n)
    x = config.points
    q = coeffs.a * x * x + coeffs.b * x + coeffs.c
    return PROPOSITION_BOUND * (1.0 + float(np.max(np.abs(2.0 * q))))


@dataclass(frozen=True)
class OracleReport:
    polish_residual: float
    proposition_norm: float
    proposition_bound: float
    audit: DefinitenessAudit

    @property
    def passed(self) -> bool:
        return (
            self.polish_residual <= POLISH_BOUND
            and self.proposition_norm <= self.proposition_bound
            and self.audit.passed
        )


def oracle_report(spec: FamilySpec, n: int, report: SolveReport) -> OracleReport:
    config = report.zeros
    return OracleReport(
        polish_residual=polish_residual(spec, n, config.points),
        proposition_norm=float(np.max(np.abs(proposition_residual(config)))),
        proposition_bound=proposition_bound(config),
        audit=definiteness_audit(config),
    )


class ErrorRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    preset: str
    family_label: str
    degree: int
    error_estimate: float | None = None
    exact_error: float | None = None
    iterations: int = 0
    converged: bool = False
    failure: str | None = None


class ErrorTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: list[ErrorRow]

    def for_degree(self, degree: int) -> list[ErrorRow]:
        return [row for row in self.rows if row.degree == degree]


def solve_preset(
    preset: str, degree: int, settings: SolverSettings | None = None
) -> SolveReport | ZerosError:
    """Solve a named preset, returning the error instead of raising it."""
    entry = PRESETS[preset]
    try:
        return solve(entry.spec, degree, settings)
    except ZerosError as exc:
        logger.warning("%s, n=%d failed: %s", entry.label, degree, exc)
        return exc


def error_row(preset: str, degree: int, outcome: SolveReport | ZerosError) -> ErrorRow:
    entry = PRESETS[preset]
    if isinstance(outcome, ZerosError):
        return ErrorRow(
            preset=preset,
            family_label=entry.label,
            degree=degree,
            failure=f"{type(outcome).__name__}: {outcome}",
        )

    exact_error = None
    if entry.spec == CHEBYSHEV_FIRST_KIND:
        exact_error = infinity_norm_diff(
            outcome.zeros.points, chebyshev_exact_zeros(degree)
        )

    return ErrorRow(
        preset=preset,
        family_label=entry.label,
        degree=degree,
        error_estimate=outcome.final_step_norm,
        exact_error=exact_error,
        iterations=outcome.iterations,
        converged=outcome.converged,
    )


def build_error_table(
    degrees: Iterable[int], settings: SolverSettings | None = None
) -> ErrorTable:
    """Solve every preset at each degree, in error-table row order."""
    degree_list = list(degrees)
    if not degree_list:
        msg = "at least one degree is required"
        raise ValueError(msg)

    rows = [
        error_row(preset, degree, solve_preset(preset, degree, settings))
        for degree in degree_list
        for preset in ERROR_TABLE_PRESETS
    ]
    return ErrorTable(rows=rows)
