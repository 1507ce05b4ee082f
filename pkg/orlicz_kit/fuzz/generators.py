"""
Seeded generators for campaign inputs.

Every generated Young function is valid by construction: slopes are drawn
and sorted before breakpoints are laid out, and tails continue from the
last breakpoint with a slope no smaller than the last one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..measure import MeasureSpace, SimpleFunction
from ..multipliers import Direction, estimate_constants
from ..types import CampaignConfig, UGrid, YoungClass
from ..young import (
    ArgScale,
    ExpPower,
    FiniteB,
    PiecewiseLinear,
    Power,
    PowerLog,
    Slope,
    YoungFunction,
)

SLOPE_EXPONENTS = (-8.0, 8.0)
WIDTH_EXPONENTS = (-2.0, 2.0)
VALUE_EXPONENTS = (-6.0, 6.0)
WEIGHT_EXPONENTS = (-4.0, 4.0)

FLAT_START_RATE = 0.25
JUMP_TAIL_RATE = 0.2
BOUNDARY_RATE = 0.5
SNAP_TO_B_RATE = 0.25
WITNESS_Y3_RATE = 0.25
TRIPLE_ATTEMPTS = 4


def log_uniform(
    rng: np.random.Generator, exponents: tuple[float, float]
) -> float:
    lo, hi = exponents
    return float(2.0 ** rng.uniform(lo, hi))


def draw_class(
    rng: np.random.Generator,
    class_mix: dict[YoungClass, float],
    allowed: Optional[tuple[YoungClass, ...]] = None,
) -> YoungClass:
    classes = [
        c
        for c in YoungClass
        if allowed is None or c in allowed
    ]
    weights = np.array(
        [max(class_mix.get(c, 0.0), 0.0) for c in classes]
    )
    if weights.sum() <= 0.0:
        weights = np.ones(len(classes))
    index = int(rng.choice(len(classes), p=weights / weights.sum()))
    return classes[index]


# =============================================================================
# YOUNG FUNCTIONS
# =============================================================================


def gen_young(
    rng: np.random.Generator,
    max_segments: int = 8,
    class_mix: Optional[dict[YoungClass, float]] = None,
    young_class: Optional[YoungClass] = None,
    flat_start: Optional[bool] = None,
) -> PiecewiseLinear:
    if young_class is None:
        young_class = draw_class(
            rng, class_mix or CampaignConfig().class_mix
        )
    if flat_start is None:
        flat_start = bool(rng.random() < FLAT_START_RATE)

    k = int(rng.integers(1, max_segments + 1))
    slopes = sorted(
        log_uniform(rng, SLOPE_EXPONENTS) for _ in range(k)
    )
    if flat_start:
        slopes[0] = 0.0

    points = [(0.0, 0.0)]
    t, y = 0.0, 0.0
    for s in slopes:
        width = log_uniform(rng, WIDTH_EXPONENTS)
        t, y = t + width, y + s * width
        points.append((t, y))

    last = slopes[-1]
    steeper = (
        last * float(2.0 ** rng.uniform(0.0, 2.0))
        if last > 0.0
        else log_uniform(rng, SLOPE_EXPONENTS)
    )

    if young_class is YoungClass.Y1:
        tail = Slope(steeper)
    elif young_class is YoungClass.Y2:
        tail = FiniteB(t + log_uniform(rng, WIDTH_EXPONENTS))
    elif y > 0.0 and rng.random() < JUMP_TAIL_RATE:
        # finite at b, infinite right after
        tail = FiniteB(t, y)
    else:
        width = log_uniform(rng, WIDTH_EXPONENTS)
        tail = FiniteB(t + width, y + steeper * width)

    return PiecewiseLinear(tuple(points), tail)


# =============================================================================
# SIMPLE FUNCTIONS
# =============================================================================


def gen_space(
    rng: np.random.Generator,
    max_atoms: int = 6,
    min_atoms: int = 1,
) -> MeasureSpace:
    n = int(rng.integers(min_atoms, max_atoms + 1))
    return MeasureSpace(
        tuple(log_uniform(rng, WEIGHT_EXPONENTS) for _ in range(n))
    )


def gen_simple(
    rng: np.random.Generator,
    space: MeasureSpace,
    phi: Optional[YoungFunction] = None,
) -> SimpleFunction:
    """
    Positive values, log-uniform. When phi has finite b the values are
    rescaled half the time so that max|f| lands in [b/4, 2b], sometimes
    exactly on b.
    """
    values = [
        log_uniform(rng, VALUE_EXPONENTS) for _ in range(len(space))
    ]
    if (
        phi is not None
        and math.isfinite(phi.b)
        and rng.random() < BOUNDARY_RATE
    ):
        b = phi.b
        target = (
            b
            if rng.random() < SNAP_TO_B_RATE
            else b * float(2.0 ** rng.uniform(-2.0, 1.0))
        )
        top = max(values)
        i = values.index(top)
        values = [v * (target / top) for v in values]
        values[i] = target
    return SimpleFunction(space, tuple(values))


def is_boundary_case(
    phi: YoungFunction, f: SimpleFunction
) -> bool:
    b = phi.b
    return math.isfinite(b) and b / 4.0 <= f.max_value <= 2.0 * b


# =============================================================================
# TRIPLES
# =============================================================================


@dataclass(frozen=True)
class GeneratedTriple:
    phi1: YoungFunction
    phi2: YoungFunction
    phi3: YoungFunction
    constant: float
    construction: str


def power_triple(
    rng: np.random.Generator,
) -> tuple[Power, Power, Power]:
    """1/p2 = 1/p1 + 1/p3 with every exponent at least 1."""
    p2 = float(rng.uniform(1.0, 3.0))
    theta = float(rng.uniform(0.1, 0.9))
    return Power(p2 / theta), Power(p2), Power(p2 / (1.0 - theta))


def power_log_triple(
    rng: np.random.Generator,
) -> tuple[PowerLog, PowerLog, PowerLog]:
    """Power triple with q2 / p2 = q1 / p1 + q3 / p3."""
    p2 = float(rng.uniform(1.0, 2.0))
    theta = float(rng.uniform(0.2, 0.8))
    q1 = float(rng.uniform(1.0, 2.0))
    q3 = float(rng.uniform(1.0, 2.0))
    q2 = theta * q1 + (1.0 - theta) * q3
    return (
        PowerLog(p2 / theta, q1),
        PowerLog(p2, q2),
        PowerLog(p2 / (1.0 - theta), q3),
    )


def exp_power_triple(
    rng: np.random.Generator,
) -> tuple[ExpPower, ExpPower, ExpPower]:
    p2 = float(rng.uniform(1.0, 3.0))
    theta = float(rng.uniform(0.1, 0.9))
    return (
        ExpPower(p2 / theta),
        ExpPower(p2),
        ExpPower(p2 / (1.0 - theta)),
    )


def _finite_b(
    rng: np.random.Generator, config: CampaignConfig
) -> PiecewiseLinear:
    young_class = draw_class(
        rng, config.class_mix, (YoungClass.Y2, YoungClass.Y3)
    )
    return gen_young(rng, config.max_segments, young_class=young_class)


def _holder_candidate(
    rng: np.random.Generator, config: CampaignConfig
) -> tuple[str, tuple[YoungFunction, ...]]:
    construction = int(rng.integers(0, 4))
    c = log_uniform(rng, WIDTH_EXPONENTS)

    if construction == 0:
        phi1 = gen_young(rng, config.max_segments, config.class_mix)
        phi3 = _finite_b(rng, config)
        return "scaled-phi1", (phi1, ArgScale(phi1, c), phi3)
    if construction == 1:
        phi1 = _finite_b(rng, config)
        phi3 = gen_young(rng, config.max_segments, config.class_mix)
        return "scaled-phi3", (phi1, ArgScale(phi3, c), phi3)
    if construction == 2:
        return "power", power_triple(rng)

    phi1 = gen_young(
        rng, config.max_segments, config.class_mix, flat_start=False
    )
    phi2 = gen_young(
        rng,
        config.max_segments,
        young_class=YoungClass.Y1,
        flat_start=False,
    )
    phi3 = _finite_b(rng, config)
    return "bounded-phi3", (phi1, phi2, phi3)


def _witness_candidate(
    rng: np.random.Generator, config: CampaignConfig
) -> tuple[str, tuple[YoungFunction, ...]]:
    phi1 = gen_young(
        rng, config.max_segments, config.class_mix, flat_start=True
    )
    y12 = (YoungClass.Y1, YoungClass.Y2)
    phi3 = gen_young(
        rng,
        config.max_segments,
        young_class=draw_class(rng, config.class_mix, y12),
    )
    both_bounded = math.isfinite(phi1.b) and math.isfinite(phi3.b)
    phi2_class = (
        YoungClass.Y2
        if both_bounded
        else draw_class(rng, config.class_mix, y12)
    )
    phi2 = gen_young(
        rng,
        config.max_segments,
        young_class=phi2_class,
        flat_start=False,
    )

    if rng.random() >= WITNESS_Y3_RATE:
        return "witness", (phi1, phi2, phi3)

    # same shapes with one finite tail swapped for a finite value at b
    if math.isfinite(phi3.b) and rng.random() < 0.5:
        return "witness-y3-phi3", (phi1, phi2, _as_y3(phi3))
    if math.isfinite(phi2.b):
        return "witness-y3-phi2", (phi1, _as_y3(phi2), phi3)
    phi2 = gen_young(
        rng,
        config.max_segments,
        young_class=YoungClass.Y3,
        flat_start=False,
    )
    return "witness-y3-phi2", (phi1, phi2, phi3)


def _as_y3(phi: PiecewiseLinear) -> PiecewiseLinear:
    """The Y2 pole tail replaced by a linear piece to a finite value at b."""
    t_k, y_k = phi.breakpoints[-1]
    b = phi.tail.b
    slope = max(phi.last_slope, 1.0) * 2.0
    return PiecewiseLinear(
        phi.breakpoints, FiniteB(b, y_k + slope * (b - t_k))
    )


def _bounded_triple(
    rng: np.random.Generator,
    config: CampaignConfig,
    candidate: Callable[
        [np.random.Generator, CampaignConfig],
        tuple[str, tuple[YoungFunction, ...]],
    ],
    direction: Direction,
    grid: UGrid,
) -> GeneratedTriple:
    for _ in range(TRIPLE_ATTEMPTS):
        construction, (phi1, phi2, phi3) = candidate(rng, config)
        constants = estimate_constants(phi1, phi2, phi3, grid)
        value = (
            constants.c_upper
            if direction is Direction.UPPER
            else constants.c_lower
        )
        if math.isfinite(value):
            return GeneratedTriple(
                phi1, phi2, phi3, value, construction
            )

    phi1, phi2, phi3 = power_triple(rng)
    constants = estimate_constants(phi1, phi2, phi3, grid)
    value = (
        constants.c_upper
        if direction is Direction.UPPER
        else constants.c_lower
    )
    return GeneratedTriple(phi1, phi2, phi3, value, "power-fallback")


def holder_triple(
    rng: np.random.Generator, config: CampaignConfig
) -> GeneratedTriple:
    """A triple whose upper constant is finite on the campaign grid."""
    return _bounded_triple(
        rng, config, _holder_candidate, Direction.UPPER, config.u_grid
    )


def witness_triple(
    rng: np.random.Generator, config: CampaignConfig
) -> GeneratedTriple:
    """A triple whose lower constant is finite; Phi1 has a flat start."""
    return _bounded_triple(
        rng, config, _witness_candidate, Direction.LOWER, config.u_grid
    )


def sandwich_triple(
    rng: np.random.Generator,
) -> tuple[str, tuple[YoungFunction, YoungFunction, YoungFunction]]:
    family = int(rng.integers(0, 3))
    if family == 0:
        return "power", power_triple(rng)
    if family == 1:
        return "power_log", power_log_triple(rng)
    return "exp_power", exp_power_triple(rng)
