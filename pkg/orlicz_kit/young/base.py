from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar

from ..types import (
    DEFAULT_PRECISION,
    Precision,
    YoungClass,
)
from .inversion import bisect_inverse


@dataclass(frozen=True)
class YoungFunction(ABC):
    """
    An increasing convex Phi: [0, inf] -> [0, inf] with Phi(0) = 0.

    Subclasses implement ``_evaluate_finite`` (finite t >= 0) and
    ``_compute_endpoints``; everything else is derived. Values are plain
    floats in [0, inf].
    """

    family: ClassVar[str] = "abstract"

    @abstractmethod
    def _evaluate_finite(self, t: float) -> float: ...

    @abstractmethod
    def _compute_endpoints(
        self,
    ) -> tuple[float, float]: ...

    def evaluate(self, t: float) -> float:
        if math.isinf(t):
            return math.inf
        return self._evaluate_finite(t)

    __call__ = evaluate

    @cached_property
    def _endpoints(self) -> tuple[float, float]:
        return self._compute_endpoints()

    def endpoints(self) -> tuple[float, float]:
        """(a, b): last zero and first infinity."""
        return self._endpoints

    @property
    def a(self) -> float:
        return self._endpoints[0]

    @property
    def b(self) -> float:
        return self._endpoints[1]

    def classify(self) -> YoungClass:
        b = self.b
        if math.isinf(b):
            return YoungClass.Y1
        if math.isinf(self.evaluate(b)):
            return YoungClass.Y2
        return YoungClass.Y3

    def left_limit(self, t: float) -> float:
        """Phi(t-), using left-continuity on [0, b]."""
        if t <= self.b:
            return self.evaluate(t)
        return math.inf

    # =========================================================================
    # GENERALIZED INVERSE
    # =========================================================================

    def inverse(
        self,
        u: float,
        precision: Precision = DEFAULT_PRECISION,
    ) -> float:
        """inf{t >= 0 : Phi(t) > u}, with inverse(inf) = inf."""
        if math.isinf(u):
            return math.inf
        if u <= 0.0:
            return self.a
        return self._inverse_finite(u, precision)

    def inverse_alt(
        self,
        u: float,
        precision: Precision = DEFAULT_PRECISION,
    ) -> float:
        """Same as ``inverse`` except inverse_alt(inf) = lim inverse(u)."""
        if math.isinf(u):
            return self.b
        return self.inverse(u, precision)

    def _inverse_finite(
        self, u: float, precision: Precision
    ) -> float:
        return bisect_inverse(self, u, precision)
