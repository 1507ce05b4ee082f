from __future__ import annotations

import pytest
from click.testing import CliRunner

from orlicz_kit.measure import SimpleFunction
from orlicz_kit.types import CampaignConfig, UGrid
from orlicz_kit.young import (
    FiniteB,
    LinfIndicator,
    PiecewiseLinear,
    Power,
    Slope,
)


@pytest.fixture
def two_atom() -> SimpleFunction:
    """Weights (1, 1), values (2, 1)."""
    return SimpleFunction.from_pairs([(1, 2), (1, 1)])


@pytest.fixture
def linear() -> Power:
    return Power(1)


@pytest.fixture
def quadratic() -> Power:
    return Power(2)


@pytest.fixture
def linf() -> LinfIndicator:
    return LinfIndicator()


@pytest.fixture
def pl_y1() -> PiecewiseLinear:
    """t on [0, 1], then slope 2."""
    return PiecewiseLinear(((0, 0), (1, 1)), Slope(2))


@pytest.fixture
def pl_y2() -> PiecewiseLinear:
    """t on [0, 1], then the pole 1 + (t - 1) / (2 - t)."""
    return PiecewiseLinear(((0, 0), (1, 1)), FiniteB(2))


@pytest.fixture
def pl_y3() -> PiecewiseLinear:
    """t on [0, 1], slope 2 up to Phi(2) = 3, infinite beyond."""
    return PiecewiseLinear(((0, 0), (1, 1)), FiniteB(2, 3))


@pytest.fixture
def small_grid() -> UGrid:
    return UGrid(1e-3, 1e3, 61)


@pytest.fixture
def small_campaign() -> CampaignConfig:
    return CampaignConfig(
        seed=1,
        cases=4,
        checks=("lattice", "fatou", "quasi-triangle"),
    )


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()
