"""Zeros of the classical orthogonal polynomials via electrostatic equilibrium."""

from __future__ import annotations

from orthozeros.families import Family, FamilySpec
from orthozeros.solver import SolveReport, solve

__all__ = ["Family", "FamilySpec", "SolveReport", "solve"]
