"""
The log-energy of a configuration of charges, with its gradient and Hessian.

For each family, ln f is a sum of pairwise interaction terms ln(x_j - x_i) and an
external field term per charge.  The zeros of the degree-n polynomial are the
unique maximizer of ln f over the ordered configurations in the family's domain;
the gradient components are the equilibrium equations themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from orthozeros.errors import DomainViolation
from orthozeros.families import Family, FamilySpec, domain, ode_coefficients
from orthozeros.summation import CompensatedSum, compensated_total, row_sums

if TYPE_CHECKING:
    import numpy.typing as npt

    type FloatArray = npt.NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class Configuration:
    """Strictly increasing points inside the open domain of a family."""

    spec: FamilySpec
    points: FloatArray = field(repr=False)

    def __post_init__(self) -> None:
        points = np.array(self.points, dtype=np.float64).reshape(-1)
        points.flags.writeable = False
        object.__setattr__(self, "points", points)

        if points.size == 0:
            msg = "a configuration needs at least one point"
            raise DomainViolation(msg)

        if not np.all(np.diff(points) > 0):
            msg = f"points are not strictly increasing: {points.tolist()}"
            raise DomainViolation(msg)

        interval = domain(self.spec)
        if not interval.contains_all(points):
            msg = (
                f"points leave the open domain ({interval.lower}, {interval.upper}) "
                f"of {self.spec.describe()}: {points.tolist()}"
            )
            raise DomainViolation(msg)

    @property
    def n(self) -> int:
        return int(self.points.size)

    @classmethod
    def maybe(cls, spec: FamilySpec, points: FloatArray) -> Configuration | None:
        """Build a configuration, or return None if the points are not admissible."""
        try:
            return cls(spec, points)
        except DomainViolation:
            return None


@dataclass(frozen=True, eq=False)
class EnergyReport:
    log_energy: float
    gradient: FloatArray
    hessian: FloatArray


def _differences(points: FloatArray) -> FloatArray:
    """Matrix of x_k - x_j, with inf on the diagonal so reciprocals vanish there."""
    diff = points[:, np.newaxis] - points[np.newaxis, :]
    np.fill_diagonal(diff, np.inf)
    return diff


def _half(parameter: float) -> float:
    return (parameter + 1.0) / 2.0


def field_energy(config: Configuration) -> FloatArray:
    x = config.points
    spec = config.spec
    match spec.kind:
        case Family.JACOBI:
            return _half(spec.alpha_value) * np.log1p(-x) + _half(
                spec.beta_value
            ) * np.log1p(x)
        case Family.HERMITE:
            return -0.5 * x * x
        case Family.LAGUERRE:
            return _half(spec.alpha_value) * np.log(x) - 0.5 * x


def field_gradient(config: Configuration) -> FloatArray:
    x = config.points
    spec = config.spec
    match spec.kind:
        case Family.JACOBI:
            return _half(spec.alpha_value) / (x - 1.0) + _half(spec.beta_value) / (
                x + 1.0
            )
        case Family.HERMITE:
            return -x
        case Family.LAGUERRE:
            return _half(spec.alpha_value) / x - 0.5


def field_curvature(config: Configuration) -> FloatArray:
    """
    Minus the second derivative of each charge's field term.

    This is strictly positive, and it is exactly the margin by which each Hessian
    row is diagonally dominant.
    """
    x = config.points
    spec = config.spec
    match spec.kind:
        case Family.JACOBI:
            return _half(spec.alpha_value) / (x - 1.0) ** 2 + _half(
                spec.beta_value
            ) / (x + 1.0) ** 2
        case Family.HERMITE:
            return np.ones_like(x)
        case Family.LAGUERRE:
            return _half(spec.alpha_value) / (x * x)


def log_energy(config: Configuration) -> float:
    points = config.points
    n = config.n
    rows, cols = np.tril_indices(n, -1)
    # Row index above column index, so each difference is x_j - x_i > 0.
    pair_terms = np.log(points[rows] - points[cols])
    terms = np.concatenate([pair_terms, field_energy(config)])
    return compensated_total(terms)


def gradient(config: Configuration) -> FloatArray:
    interactions = 1.0 / _differences(config.points)
    accumulator = CompensatedSum(config.n)
    for column in interactions.T:
        accumulator.add(column)
    accumulator.add(field_gradient(config))
    return accumulator.result()


def hessian(config: Configuration) -> FloatArray:
    diff = _differences(config.points)
    # (x_k - x_j)^2 and (x_j - x_k)^2 round identically, so this is exactly symmetric.
    off_diagonal = 1.0 / (diff * diff)
    matrix = off_diagonal.copy()
    np.fill_diagonal(matrix, -row_sums(off_diagonal) - field_curvature(config))
    return matrix


def energy_report(config: Configuration) -> EnergyReport:
    return EnergyReport(
        log_energy=log_energy(config),
        gradient=gradient(config),
        hessian=hessian(config),
    )


def proposition_residual(config: Configuration) -> FloatArray:
    """
    The family-independent form of the equilibrium equations.

    Component k is 2 Q(x_k) sum_{j != k} 1 / (x_k - x_j) + nu + mu x_k, with Q, mu
    and nu read from the ODE coefficients rather than from the family.
    """
    coeffs = ode_coefficients(config.spec, config.n)
    x = config.points
    q = coeffs.a * x * x + coeffs.b * x + coeffs.c
    pair_sums = row_sums(1.0 / _differences(x))
    return 2.0 * q * pair_sums + coeffs.nu + coeffs.mu * x


def energy_rounding_scale(config: Configuration, value: float) -> float:
    """A rough bound on the rounding error in a computed ln f."""
    return float(config.n * config.n + abs(value)) * math.ulp(1.0)
