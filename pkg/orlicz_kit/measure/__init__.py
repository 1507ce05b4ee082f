"""Finite atomic measure spaces and finitely simple functions."""

from __future__ import annotations

from .audits import (
    lattice_pairs,
    monotone_limit_audit,
    truncation_stages,
)
from .layers import LayerForm, canonicalize, distribution
from .space import MeasureSpace, SimpleFunction

__all__ = [
    "LayerForm",
    "MeasureSpace",
    "SimpleFunction",
    "canonicalize",
    "distribution",
    "lattice_pairs",
    "monotone_limit_audit",
    "truncation_stages",
]
