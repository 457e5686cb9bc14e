"""Compensated summation built on the error-free two-sum transformation."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    import numpy.typing as npt

    type FloatArray = npt.NDArray[np.float64]


def two_sum(a: FloatArray, b: FloatArray) -> tuple[FloatArray, FloatArray]:
    """Return (s, e) with s = fl(a + b) and a + b = s + e exactly."""
    s = a + b
    z = s - a
    e = (a - (s - z)) + (b - z)
    return s, e


class CompensatedSum:
    """
    Lane-wise compensated accumulator.

    Each lane keeps a running sum and the accumulated rounding error of that sum, so
    that a whole vector of sums can be built up one term per lane at a time.
    """

    def __init__(self, lanes: int) -> None:
        self.total = np.zeros(lanes)
        self.carry = np.zeros(lanes)

    def add(self, values: FloatArray) -> None:
        self.total, error = two_sum(self.total, values)
        self.carry += error

    def result(self) -> FloatArray:
        return self.total + self.carry


def row_sums(matrix: FloatArray) -> FloatArray:
    """Sum each row of a square matrix, column by column in index order."""
    accumulator = CompensatedSum(matrix.shape[0])
    for column in matrix.T:
        accumulator.add(column)
    return accumulator.result()


def compensated_total(values: FloatArray) -> float:
    """Correctly rounded sum of a vector."""
    return math.fsum(values.tolist())
