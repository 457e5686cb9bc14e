from __future__ import annotations

import logging
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from pydantic import ValidationError

from orthozeros.constants import ERROR_TABLE_PRESETS
from orthozeros.equilibrium import Configuration, energy_rounding_scale, log_energy
from orthozeros.errors import FactorizationFailure, LineSearchStalled
from orthozeros.families import PRESETS, FamilySpec
from orthozeros.settings import ENERGY_ROUNDING_SLACK, SolverSettings
from orthozeros.solver import (
    SolveReport,
    factorize,
    initial_guess,
    newton_step,
    solve,
    step_tolerance,
)

HERMITE = FamilySpec.hermite()
LAGUERRE = FamilySpec.laguerre(0.0)
LEGENDRE = FamilySpec.jacobi(0.0, 0.0)
CHEBYSHEV = FamilySpec.jacobi(-0.5, -0.5)


def test_settings_defaults() -> None:
    settings = SolverSettings()
    assert settings.tolerance == 1e-15
    assert settings.max_iterations == 30
    assert settings.backtracking_factor == 0.5
    assert settings.max_backtracks == 60


@pytest.mark.parametrize(
    "overrides",
    [
        {"tolerance": 0.0},
        {"max_iterations": 0},
        {"backtracking_factor": 1.0},
        {"max_backtracks": 0},
        {"damping": 0.5},
    ],
)
def test_settings_rejects(overrides: dict[str, float]) -> None:
    with pytest.raises(ValidationError):
        SolverSettings.model_validate(overrides)


@pytest.mark.parametrize("spec", [LEGENDRE, CHEBYSHEV, HERMITE, LAGUERRE])
def test_initial_guess_single_point(spec: FamilySpec) -> None:
    guess = initial_guess(spec, 1)
    assert guess.n == 1
    if spec != LAGUERRE:
        assert guess.points[0] == pytest.approx(0.0, abs=1e-15)


def test_initial_guess_chebyshev_points() -> None:
    expected = np.cos(np.pi / 8 * np.array([7.0, 5.0, 3.0, 1.0]))
    assert_allclose(initial_guess(CHEBYSHEV, 4).points, expected, rtol=1e-15)


def test_initial_guess_hermite_is_symmetric() -> None:
    points = initial_guess(HERMITE, 9).points
    assert_allclose(points + points[::-1], 0.0, atol=1e-14)


def test_initial_guess_degree() -> None:
    with pytest.raises(ValueError, match="degree"):
        initial_guess(HERMITE, 0)


def test_newton_step_full_step() -> None:
    after, step_norm = newton_step(Configuration(HERMITE, np.array([0.5])))
    assert after.points.tolist() == [0.0]
    assert step_norm == 0.5


def test_newton_step_backtracks_into_domain() -> None:
    after, step_norm = newton_step(Configuration(LAGUERRE, np.array([2.0])))
    assert after.points.tolist() == [1.0]
    assert step_norm == 1.0


def test_newton_step_at_equilibrium() -> None:
    zeros = np.array([-1.0, 1.0]) / math.sqrt(2)
    _, step_norm = newton_step(Configuration(HERMITE, zeros))
    assert step_norm <= 1e-15


def test_newton_step_stalls() -> None:
    # From x = 4 the full step and the first halving both leave (0, inf).
    settings = SolverSettings(max_backtracks=1)
    with pytest.raises(LineSearchStalled):
        newton_step(Configuration(LAGUERRE, np.array([4.0])), settings)


def test_solve_attaches_iteration_context() -> None:
    settings = SolverSettings(max_backtracks=1)
    start = Configuration(LAGUERRE, np.array([4.0]))
    with pytest.raises(LineSearchStalled) as excinfo:
        solve(LAGUERRE, 1, settings, initial=start)
    assert "during Newton iteration 1 of 30" in excinfo.value.__notes__


def test_factorize_rejects_indefinite() -> None:
    with pytest.raises(FactorizationFailure):
        factorize(np.array([[1.0, 0.0], [0.0, -1.0]]))


def test_solve_rejects_mismatched_start() -> None:
    with pytest.raises(ValueError, match="starting configuration"):
        solve(HERMITE, 2, initial=initial_guess(HERMITE, 3))


@pytest.mark.parametrize(
    ("spec", "n", "expected"),
    [
        (HERMITE, 1, [0.0]),
        (LEGENDRE, 2, [-1 / math.sqrt(3), 1 / math.sqrt(3)]),
        (HERMITE, 2, [-1 / math.sqrt(2), 1 / math.sqrt(2)]),
        (LAGUERRE, 1, [1.0]),
        (FamilySpec.laguerre(2.5), 1, [3.5]),
        (FamilySpec.jacobi(0.25, 0.125), 1, [(0.125 - 0.25) / (0.25 + 0.125 + 2.0)]),
        (CHEBYSHEV, 1, [0.0]),
    ],
)
def test_closed_form_zeros(spec: FamilySpec, n: int, expected: list[float]) -> None:
    report = solve(spec, n)
    assert report.converged
    assert_allclose(report.zeros.points, expected, rtol=0, atol=1e-14)


@pytest.mark.parametrize("n", [20, 25])
def test_chebyshev_exact(n: int) -> None:
    report = solve(CHEBYSHEV, n)
    k = np.arange(n, 0, -1)
    exact = np.cos((2 * k - 1) * np.pi / (2 * n))
    assert report.converged
    assert np.max(np.abs(report.zeros.points - exact)) <= 1e-15


def _assert_monotone(spec: FamilySpec, report: SolveReport) -> None:
    start = initial_guess(spec, report.zeros.n)
    energy = log_energy(start)
    for record in report.trace:
        allowance = ENERGY_ROUNDING_SLACK * energy_rounding_scale(start, energy)
        # Below the rounding of ln f a gain carries no sign information.
        assert record.log_energy - energy >= -allowance, record
        energy = record.log_energy
    if report.trace[0].step_norm > 1e-4:
        assert report.trace[-1].log_energy > log_energy(start)


@pytest.mark.parametrize("preset", ERROR_TABLE_PRESETS)
def test_every_preset_converges(preset: str) -> None:
    spec = PRESETS[preset].spec
    for n in range(1, 31):
        report = solve(spec, n)
        assert report.converged, (preset, n)
        assert report.iterations <= 30
        assert report.iterations == len(report.trace)
        assert report.final_step_norm <= step_tolerance(SolverSettings(), report.zeros)
        assert report.final_step_norm == report.trace[-1].step_norm
        _assert_monotone(spec, report)


@pytest.mark.parametrize(
    "preset", ["hermite", "legendre", "chebyshev1", "gegenbauer-paper"]
)
def test_symmetric_families(preset: str) -> None:
    zeros = solve(PRESETS[preset].spec, 25).zeros.points
    assert np.max(np.abs(zeros + zeros[::-1])) <= 1e-13


@pytest.mark.parametrize("preset", ERROR_TABLE_PRESETS)
def test_equilibrium_is_a_fixed_point(preset: str) -> None:
    spec = PRESETS[preset].spec
    settings = SolverSettings()
    first = solve(spec, 20, settings)
    again = solve(spec, 20, settings, initial=first.zeros)
    assert again.trace[0].step_norm <= 10 * step_tolerance(settings, first.zeros)


def test_chebyshev_zeros_are_a_fixed_point() -> None:
    k = np.arange(20, 0, -1)
    exact = Configuration(CHEBYSHEV, np.cos((2 * k - 1) * np.pi / 40))
    report = solve(CHEBYSHEV, 20, initial=exact)
    assert report.trace[0].step_norm <= 1e-14


def test_solve_reports_non_convergence(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.WARNING, logger="orthozeros"):
        report = solve(LAGUERRE, 20, SolverSettings(max_iterations=1))
    assert not report.converged
    assert report.iterations == 1
    assert "did not converge" in caplog.text


def test_solve_traces_every_iteration(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.DEBUG, logger="orthozeros"):
        report = solve(HERMITE, 6)
    iteration_lines = [r for r in caplog.records if r.levelno == logging.DEBUG]
    assert len(iteration_lines) == report.iterations
    assert "converged" in caplog.text
    assert report.final_gradient_norm < 1e-12
