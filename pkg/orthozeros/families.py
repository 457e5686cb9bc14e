"""
The classical families: Jacobi, generalized Laguerre and Hermite.

Each family solves an ODE of the form

    (a x^2 + b x + c) y'' + (mu x + nu) y' + kappa y = 0

and this module owns the coefficient tuples, the parameter constraints and the
open domains.  It also evaluates the polynomials by their three-term recurrences;
that evaluator shares no code with the equilibrium solver and is used only to
check its answers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

import numpy as np

from orthozeros.errors import ParameterOutOfRange

if TYPE_CHECKING:
    import numpy.typing as npt

    type FloatArray = npt.NDArray[np.float64]


class Family(StrEnum):
    JACOBI = "jacobi"
    LAGUERRE = "laguerre"
    HERMITE = "hermite"


@dataclass(frozen=True)
class FamilySpec:
    kind: Family
    alpha: float | None = None
    beta: float | None = None

    def __post_init__(self) -> None:
        validate(self)

    @classmethod
    def jacobi(cls, alpha: float, beta: float) -> FamilySpec:
        return cls(Family.JACOBI, alpha, beta)

    @classmethod
    def laguerre(cls, alpha: float) -> FamilySpec:
        return cls(Family.LAGUERRE, alpha)

    @classmethod
    def hermite(cls) -> FamilySpec:
        return cls(Family.HERMITE)

    @property
    def alpha_value(self) -> float:
        """Alpha, for the families that carry it."""
        if self.alpha is None:
            msg = f"{self.kind} has no alpha parameter"
            raise AttributeError(msg)
        return self.alpha

    @property
    def beta_value(self) -> float:
        """Beta, for Jacobi."""
        if self.beta is None:
            msg = f"{self.kind} has no beta parameter"
            raise AttributeError(msg)
        return self.beta

    def describe(self) -> str:
        match self.kind:
            case Family.JACOBI:
                return f"Jacobi(alpha={self.alpha}, beta={self.beta})"
            case Family.LAGUERRE:
                return f"Laguerre(alpha={self.alpha})"
            case Family.HERMITE:
                return "Hermite"


def _require_above(parameter: str, value: float | None, bound: float) -> None:
    # isfinite also rules out NaN.
    if value is None or not math.isfinite(value) or value <= bound:
        raise ParameterOutOfRange(parameter, f"in ({bound:g}, inf)", value)


def _require_absent(parameter: str, value: float | None, kind: Family) -> None:
    if value is not None:
        raise ParameterOutOfRange(parameter, f"absent for {kind}", value)


def validate(spec: FamilySpec) -> None:
    """Check the parameter constraints of a family, strictly and without slack."""
    match spec.kind:
        case Family.JACOBI:
            _require_above("alpha", spec.alpha, -1.0)
            _require_above("beta", spec.beta, -1.0)
        case Family.LAGUERRE:
            _require_above("alpha", spec.alpha, -1.0)
            _require_absent("beta", spec.beta, spec.kind)
        case Family.HERMITE:
            _require_absent("alpha", spec.alpha, spec.kind)
            _require_absent("beta", spec.beta, spec.kind)


@dataclass(frozen=True)
class OdeCoefficients:
    a: float
    b: float
    c: float
    mu: float
    nu: float
    kappa: float


def ode_coefficients(spec: FamilySpec, n: int) -> OdeCoefficients:
    if n < 1:
        msg = f"degree must be at least 1 (got {n})"
        raise ValueError(msg)

    match spec.kind:
        case Family.JACOBI:
            alpha, beta = spec.alpha_value, spec.beta_value
            return OdeCoefficients(
                a=-1.0,
                b=0.0,
                c=1.0,
                mu=-(alpha + beta + 2.0),
                nu=beta - alpha,
                kappa=n * (n + alpha + beta + 1.0),
            )
        case Family.HERMITE:
            # y'' - 2x y' + 2n y = 0.
            return OdeCoefficients(a=0.0, b=0.0, c=1.0, mu=-2.0, nu=0.0, kappa=2.0 * n)
        case Family.LAGUERRE:
            return OdeCoefficients(
                a=0.0, b=1.0, c=0.0, mu=-1.0, nu=spec.alpha_value + 1.0, kappa=float(n)
            )


def q_at(spec: FamilySpec, x: float) -> float:
    """The leading ODE coefficient Q(x) = a x^2 + b x + c."""
    coeffs = ode_coefficients(spec, 1)
    return coeffs.a * x * x + coeffs.b * x + coeffs.c


def l_at(spec: FamilySpec, x: float) -> float:
    """The first-order ODE coefficient L(x) = mu x + nu."""
    coeffs = ode_coefficients(spec, 1)
    return coeffs.mu * x + coeffs.nu


@dataclass(frozen=True)
class DomainInterval:
    """An open interval, possibly unbounded."""

    lower: float
    upper: float

    def __post_init__(self) -> None:
        if not self.lower < self.upper:
            msg = f"empty interval ({self.lower}, {self.upper})"
            raise ValueError(msg)

    def contains(self, x: float) -> bool:
        return self.lower < x < self.upper

    def contains_all(self, points: FloatArray) -> bool:
        return bool(np.all((self.lower < points) & (points < self.upper)))


_DOMAINS = {
    Family.JACOBI: DomainInterval(-1.0, 1.0),
    Family.LAGUERRE: DomainInterval(0.0, math.inf),
    Family.HERMITE: DomainInterval(-math.inf, math.inf),
}


def domain(spec: FamilySpec) -> DomainInterval:
    return _DOMAINS[spec.kind]


def weight(spec: FamilySpec, x: float) -> float:
    """The orthogonality weight W(x), zero off the family's support."""
    # Negative exponents make the weight infinite at a finite endpoint.
    with np.errstate(divide="ignore"):
        match spec.kind:
            case Family.JACOBI:
                if abs(x) > 1.0:
                    return 0.0
                left = np.power(np.float64(1.0 - x), spec.alpha_value)
                right = np.power(np.float64(1.0 + x), spec.beta_value)
                return float(left * right)
            case Family.LAGUERRE:
                if x < 0.0:
                    return 0.0
                return float(np.power(np.float64(x), spec.alpha_value) * math.exp(-x))
            case Family.HERMITE:
                return math.exp(-x * x)


def _recurrence_coefficients(spec: FamilySpec, k: int) -> tuple[float, float, float]:
    """
    Coefficients (A, B, C) of p_{k+1} = (A x + B) p_k - C p_{k-1}.

    Standard normalizations: P_n^(alpha, beta)(1) = binom(n + alpha, n), physicists'
    Hermite H_n with leading coefficient 2^n, and L_n^(alpha)(0) = binom(n + alpha, n).
    """
    match spec.kind:
        case Family.HERMITE:
            return 2.0, 0.0, 2.0 * k
        case Family.LAGUERRE:
            alpha = spec.alpha_value
            return -1.0 / (k + 1), (2 * k + 1 + alpha) / (k + 1), (k + alpha) / (k + 1)
        case Family.JACOBI:
            alpha, beta = spec.alpha_value, spec.beta_value
            if k == 0:
                # The general formula divides by alpha + beta, which may vanish.
                return (alpha + beta + 2.0) / 2.0, (alpha - beta) / 2.0, 0.0
            s = 2 * k + alpha + beta
            denom = 2.0 * (k + 1) * (k + alpha + beta + 1.0) * s
            return (
                (s + 1.0) * (s + 2.0) * s / denom,
                (s + 1.0) * (alpha * alpha - beta * beta) / denom,
                2.0 * (k + alpha) * (k + beta) * (s + 2.0) / denom,
            )


def evaluate_many(
    spec: FamilySpec, n: int, xs: npt.ArrayLike
) -> tuple[FloatArray, FloatArray]:
    """
    Evaluate p_n and p_n' at many points by the three-term recurrence.

    The derivative comes from differentiating the recurrence term by term:
    p'_{k+1} = (A x + B) p'_k + A p_k - C p'_{k-1}.  No scaling is applied, so very
    large degrees or arguments overflow to inf.
    """
    if n < 0:
        msg = f"degree must be non-negative (got {n})"
        raise ValueError(msg)

    x = np.asarray(xs, dtype=np.float64)
    previous = np.zeros_like(x)
    current = np.ones_like(x)
    d_previous = np.zeros_like(x)
    d_current = np.zeros_like(x)

    for k in range(n):
        big_a, big_b, big_c = _recurrence_coefficients(spec, k)
        linear = big_a * x + big_b
        following = linear * current - big_c * previous
        d_following = linear * d_current + big_a * current - big_c * d_previous
        previous, current = current, following
        d_previous, d_current = d_current, d_following

    return current, d_current


def evaluate_with_derivative(spec: FamilySpec, n: int, x: float) -> tuple[float, float]:
    value, derivative = evaluate_many(spec, n, x)
    return float(value), float(derivative)


@dataclass(frozen=True)
class Preset:
    name: str
    label: str
    spec: FamilySpec


PRESETS = {
    preset.name: preset
    for preset in (
        Preset("legendre", "Legendre", FamilySpec.jacobi(0.0, 0.0)),
        Preset(
            "jacobi-paper",
            "General Jacobi alpha=1/4 beta=1/8",
            FamilySpec.jacobi(0.25, 0.125),
        ),
        Preset("gegenbauer-paper", "Gegenbauer", FamilySpec.jacobi(0.25, 0.25)),
        Preset("chebyshev1", "Chebyshev 1st Kind", FamilySpec.jacobi(-0.5, -0.5)),
        Preset("laguerre-classical", "Classical Laguerre", FamilySpec.laguerre(0.0)),
        Preset(
            "laguerre-general", "General Laguerre alpha=1", FamilySpec.laguerre(1.0)
        ),
        Preset("hermite", "Hermite", FamilySpec.hermite()),
    )
}
