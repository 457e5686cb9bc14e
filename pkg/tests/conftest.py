from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import pytest

from orthozeros.equilibrium import Configuration
from orthozeros.families import Family, FamilySpec

if TYPE_CHECKING:
    from collections.abc import Callable


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


def _random_spec(rng: np.random.Generator, kind: Family) -> FamilySpec:
    match kind:
        case Family.JACOBI:
            alpha, beta = rng.uniform(-0.5, 3.0, size=2)
            return FamilySpec.jacobi(float(alpha), float(beta))
        case Family.LAGUERRE:
            return FamilySpec.laguerre(float(rng.uniform(-0.5, 3.0)))
        case Family.HERMITE:
            return FamilySpec.hermite()


def _random_configuration(
    rng: np.random.Generator, spec: FamilySpec, n: int, min_gap: float = 0.1
) -> Configuration:
    """Ordered interior points, built from positive gaps so no two coincide."""
    match spec.kind:
        case Family.JACOBI:
            gaps = rng.uniform(min_gap, 1.0, size=n + 1)
            points = -1.0 + 2.0 * np.cumsum(gaps)[:-1] / gaps.sum()
        case Family.LAGUERRE:
            points = np.cumsum(rng.uniform(min_gap, 2.0, size=n))
        case Family.HERMITE:
            points = -0.75 * n + np.cumsum(rng.uniform(min_gap, 1.5, size=n))
    return Configuration(spec, points)


@pytest.fixture
def make_spec(rng: np.random.Generator) -> Callable[[Family], FamilySpec]:
    def factory(kind: Family) -> FamilySpec:
        return _random_spec(rng, kind)

    return factory


@pytest.fixture
def make_configuration(
    rng: np.random.Generator,
) -> Callable[..., Configuration]:
    def factory(spec: FamilySpec, n: int, min_gap: float = 0.1) -> Configuration:
        return _random_configuration(rng, spec, n, min_gap)

    return factory
