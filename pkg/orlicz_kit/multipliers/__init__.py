"""Pointwise multipliers between weak Orlicz spaces."""

from __future__ import annotations

from .asymptotics import (
    EXAMPLE_GRID,
    asymptotics_table,
    example_asymptotics_audit,
    surrogate_for,
)
from .classical import classical_identity_audit
from .constants import (
    Direction,
    Triple,
    TripleConstant,
    estimate_constants,
    ratio_table,
    validate_constant,
)
from .holder import holder_levels, holder_verify, lux_holder_verify
from .pwm import MAX_ATOMS, PwmEstimate, pwm_bruteforce, pwm_search
from .sandwich import sandwich_audit
from .witness import (
    WitnessFunction,
    WitnessReport,
    converse_witness,
    witness,
    witness_function,
    witness_levels,
    witness_y3,
)

__all__ = [
    "Direction",
    "EXAMPLE_GRID",
    "MAX_ATOMS",
    "PwmEstimate",
    "Triple",
    "TripleConstant",
    "WitnessFunction",
    "WitnessReport",
    "asymptotics_table",
    "classical_identity_audit",
    "converse_witness",
    "estimate_constants",
    "example_asymptotics_audit",
    "holder_levels",
    "holder_verify",
    "lux_holder_verify",
    "pwm_bruteforce",
    "pwm_search",
    "ratio_table",
    "sandwich_audit",
    "surrogate_for",
    "validate_constant",
    "witness",
    "witness_function",
    "witness_levels",
    "witness_y3",
]
