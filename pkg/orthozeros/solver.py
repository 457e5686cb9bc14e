"""
Damped Newton iteration for the equilibrium equations.

The Newton system is the gradient of ln f, whose Jacobian is the Hessian of a
strictly concave function.  Each step therefore solves against a Cholesky factor
of the negated Hessian, and a backtracking line search keeps every iterate ordered,
inside the domain and no lower in energy than its predecessor.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from orthozeros.equilibrium import (
    Configuration,
    energy_rounding_scale,
    gradient,
    hessian,
    log_energy,
)
from orthozeros.errors import FactorizationFailure, LineSearchStalled, SolverError
from orthozeros.families import Family, FamilySpec
from orthozeros.settings import ENERGY_ROUNDING_SLACK, SolverSettings

if TYPE_CHECKING:
    import numpy.typing as npt

    type FloatArray = npt.NDArray[np.float64]
    type CholeskyFactor = tuple[FloatArray, bool]

logger = logging.getLogger(__name__)


def initial_guess(spec: FamilySpec, n: int) -> Configuration:
    """
    Closed-form starting points.

    Chebyshev angles for Jacobi, a scaled Chebyshev second-kind grid for Hermite and
    a quadratically spaced grid on (0, 4n + 2 alpha + 2) for Laguerre.  Any ordered
    interior guess converges, so these only affect the iteration count.
    """
    if n < 1:
        msg = f"degree must be at least 1 (got {n})"
        raise ValueError(msg)

    k = np.arange(1, n + 1, dtype=np.float64)
    match spec.kind:
        case Family.JACOBI:
            points = np.cos(np.pi * (2.0 * (n - k) + 1.0) / (2.0 * n))
        case Family.HERMITE:
            radius = math.sqrt(2.0 * n + 1.0)
            points = radius * np.cos(np.pi * (n + 1.0 - k) / (n + 1.0))
        case Family.LAGUERRE:
            scale = 4.0 * n + 2.0 * spec.alpha_value + 2.0
            points = scale * ((2.0 * k - 1.0) / (2.0 * n)) ** 2

    return Configuration(spec, points)


def factorize(matrix: FloatArray) -> CholeskyFactor:
    """Cholesky-factorize the negation of a Hessian."""
    try:
        factor: CholeskyFactor = cho_factor(-matrix, lower=True)
    except (LinAlgError, ValueError) as exc:
        msg = f"negated Hessian is not positive definite: {exc}"
        raise FactorizationFailure(msg) from exc
    return factor


@dataclass(frozen=True, eq=False)
class StepOutcome:
    next: Configuration
    step_norm: float
    log_energy: float
    backtracks: int


def _take_step(
    config: Configuration, settings: SolverSettings, energy: float
) -> StepOutcome:
    factor = factorize(hessian(config))
    # H delta = -G, written against the factor of -H.
    delta = cho_solve(factor, gradient(config))

    # Near equilibrium the true gain is below the rounding of ln f.
    floor = energy - ENERGY_ROUNDING_SLACK * energy_rounding_scale(config, energy)

    for backtracks in range(settings.max_backtracks + 1):
        candidate = Configuration.maybe(config.spec, config.points + delta)
        if candidate is not None:
            candidate_energy = log_energy(candidate)
            if candidate_energy >= floor:
                return StepOutcome(
                    next=candidate,
                    step_norm=float(np.max(np.abs(delta))),
                    log_energy=candidate_energy,
                    backtracks=backtracks,
                )

        delta = delta * settings.backtracking_factor

    msg = (
        f"no admissible ascent step after {settings.max_backtracks} backtracks "
        f"from {config.spec.describe()} with n={config.n}"
    )
    raise LineSearchStalled(msg)


def newton_step(
    config: Configuration, settings: SolverSettings | None = None
) -> tuple[Configuration, float]:
    """Take one damped Newton step, returning the new configuration and step norm."""
    settings = SolverSettings() if settings is None else settings
    outcome = _take_step(config, settings, log_energy(config))
    return outcome.next, outcome.step_norm


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    log_energy: float
    step_norm: float
    gradient_norm: float
    backtracks: int


@dataclass(frozen=True, eq=False)
class SolveReport:
    zeros: Configuration
    iterations: int
    final_step_norm: float
    final_gradient_norm: float
    converged: bool
    trace: list[IterationRecord] = field(default_factory=list)


def step_tolerance(settings: SolverSettings, config: Configuration) -> float:
    """The step tolerance, scaled up to the magnitude of the largest point."""
    scale = max(1.0, float(np.max(np.abs(config.points))))
    return settings.tolerance * scale


def solve(
    spec: FamilySpec,
    n: int,
    settings: SolverSettings | None = None,
    initial: Configuration | None = None,
) -> SolveReport:
    settings = SolverSettings() if settings is None else settings
    config = initial_guess(spec, n) if initial is None else initial
    if config.spec != spec or config.n != n:
        msg = (
            f"starting configuration is for {config.spec.describe()} with "
            f"n={config.n}, not {spec.describe()} with n={n}"
        )
        raise ValueError(msg)

    energy = log_energy(config)
    trace: list[IterationRecord] = []
    step_norm = math.inf
    converged = False

    for iteration in range(1, settings.max_iterations + 1):
        try:
            outcome = _take_step(config, settings, energy)
        except SolverError as exc:
            budget = settings.max_iterations
            exc.add_note(f"during Newton iteration {iteration} of {budget}")
            raise

        config = outcome.next
        energy = outcome.log_energy
        step_norm = outcome.step_norm
        gradient_norm = float(np.max(np.abs(gradient(config))))
        trace.append(
            IterationRecord(
                iteration=iteration,
                log_energy=energy,
                step_norm=step_norm,
                gradient_norm=gradient_norm,
                backtracks=outcome.backtracks,
            )
        )
        logger.debug(
            "iteration %d: ln f=%.17g step=%.3e gradient=%.3e backtracks=%d",
            iteration,
            energy,
            step_norm,
            gradient_norm,
            outcome.backtracks,
        )

        if step_norm <= step_tolerance(settings, config):
            converged = True
            break

    if converged:
        logger.info(
            "%s, n=%d converged in %d iterations (step %.3e)",
            spec.describe(),
            n,
            len(trace),
            step_norm,
        )
    else:
        logger.warning(
            "%s, n=%d did not converge in %d iterations (step %.3e)",
            spec.describe(),
            n,
            settings.max_iterations,
            step_norm,
        )

    return SolveReport(
        zeros=config,
        iterations=len(trace),
        final_step_norm=step_norm,
        final_gradient_norm=float(np.max(np.abs(gradient(config)))),
        converged=converged,
        trace=trace,
    )
