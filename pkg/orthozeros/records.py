from __future__ import annotations

from itertools import pairwise
from typing import TYPE_CHECKING

from pydantic import BaseModel, ConfigDict, field_validator

if TYPE_CHECKING:
    from orthozeros.solver import SolveReport


class OutputRecord(BaseModel):
    """One solved family and degree, as emitted by the command line."""

    model_config = ConfigDict(frozen=True)

    family_label: str
    degree: int
    zeros: list[float]
    error_estimate: float
    iterations: int
    converged: bool
    exact_error: float | None = None

    @field_validator("zeros")
    @classmethod
    def strictly_increasing(cls, zeros: list[float]) -> list[float]:
        if any(left >= right for left, right in pairwise(zeros)):
            msg = "zeros must be strictly increasing"
            raise ValueError(msg)
        return zeros

    @classmethod
    def from_report(
        cls,
        family_label: str,
        report: SolveReport,
        exact_error: float | None = None,
    ) -> OutputRecord:
        return cls(
            family_label=family_label,
            degree=report.zeros.n,
            zeros=report.zeros.points.tolist(),
            error_estimate=report.final_step_norm,
            iterations=report.iterations,
            converged=report.converged,
            exact_error=exact_error,
        )
