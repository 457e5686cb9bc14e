from __future__ import annotations


class ZerosError(Exception):
    """Base class for every error raised by this package."""


class ParameterOutOfRange(ZerosError):
    def __init__(self, parameter: str, bound: str, value: float | None) -> None:
        self.parameter = parameter
        self.bound = bound
        self.value = value
        msg = f"{parameter} must satisfy {parameter} {bound} (got {value})"
        super().__init__(msg)


class DomainViolation(ZerosError):
    """A configuration is unordered or leaves the open domain."""


class SolverError(ZerosError):
    pass


class FactorizationFailure(SolverError):
    """The negated Hessian is not numerically positive definite."""


class LineSearchStalled(SolverError):
    """No acceptable step was found within the backtracking budget."""


class LengthMismatch(ZerosError):
    pass


class DerivativeVanishes(ZerosError):
    """The oracle derivative underflows at a computed zero."""
