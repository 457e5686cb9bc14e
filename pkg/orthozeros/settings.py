"""
Package-wide settings for orthozeros.

Solver defaults: thirty Newton iterations and a step tolerance of 1e-15 in the
infinity norm.
"""

from __future__ import annotations

import logging.config
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_TOLERANCE = 1e-15
DEFAULT_MAX_ITERATIONS = 30
DEFAULT_BACKTRACKING_FACTOR = 0.5
DEFAULT_MAX_BACKTRACKS = 60

# Allowance, in units of machine epsilon times (n^2 + |ln f|), for the rounding of
# the log-energy when the line search compares two configurations.
ENERGY_ROUNDING_SLACK = 8.0

# Seventeen significant digits round-trip every double.
CSV_FLOAT_FORMAT = ".16e"


class SolverSettings(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    tolerance: float = Field(default=DEFAULT_TOLERANCE, gt=0)
    max_iterations: int = Field(default=DEFAULT_MAX_ITERATIONS, ge=1)
    backtracking_factor: float = Field(default=DEFAULT_BACKTRACKING_FACTOR, gt=0, lt=1)
    max_backtracks: int = Field(default=DEFAULT_MAX_BACKTRACKS, ge=1)


LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def logging_config(level: str = "WARNING") -> dict[str, Any]:
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "plain": {"format": "%(levelname)s %(name)s: %(message)s"},
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "formatter": "plain",
                "stream": "ext://sys.stderr",
            }
        },
        "loggers": {
            "orthozeros": {
                "handlers": ["console"],
                "level": level,
            }
        },
    }


def configure_logging(level: str = "WARNING") -> None:
    logging.config.dictConfig(logging_config(level))
