from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from ..exceptions import InvalidDescriptorError, InvalidValueError


@dataclass(frozen=True)
class MeasureSpace:
    """Finitely many atoms with finite positive weights."""

    weights: tuple[float, ...]

    def __post_init__(self):
        weights = tuple(float(w) for w in self.weights)
        if not weights:
            raise InvalidDescriptorError(
                "atoms", "at least one atom is required"
            )
        for k, w in enumerate(weights):
            if not (math.isfinite(w) and w > 0.0):
                raise InvalidDescriptorError(
                    f"atoms[{k}].weight",
                    f"must be a finite positive real, got {w!r}",
                )
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return len(self.weights)

    @cached_property
    def total(self) -> float:
        return math.fsum(self.weights)


@dataclass(frozen=True)
class SimpleFunction:
    """
    One finite value per atom, stored as |value|.

    Arithmetic helpers return new functions on the same space.
    """

    space: MeasureSpace
    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(abs(float(v)) for v in self.values)
        if len(values) != len(self.space):
            raise InvalidDescriptorError(
                "atoms",
                f"{len(values)} values for {len(self.space)} atoms",
            )
        for k, v in enumerate(values):
            if not math.isfinite(v):
                raise InvalidDescriptorError(
                    f"atoms[{k}].value",
                    f"must be finite, got {v!r}",
                )
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[Sequence[float]]
    ) -> SimpleFunction:
        """Build from (weight, value) rows."""
        rows = [tuple(row) for row in pairs]
        space = MeasureSpace(tuple(w for w, _ in rows))
        return cls(space, tuple(v for _, v in rows))

    @classmethod
    def zeros(cls, space: MeasureSpace) -> SimpleFunction:
        return cls(space, (0.0,) * len(space))

    @property
    def weights(self) -> tuple[float, ...]:
        return self.space.weights

    @cached_property
    def max_value(self) -> float:
        return max(self.values)

    def is_zero(self) -> bool:
        return self.max_value == 0.0

    def scale(self, c: float) -> SimpleFunction:
        if not (math.isfinite(c) and c >= 0.0):
            raise InvalidValueError(
                f"scale factor must be finite and nonnegative, got {c!r}"
            )
        return SimpleFunction(
            self.space, tuple(c * v for v in self.values)
        )

    def divide(self, lam: float) -> SimpleFunction:
        if not (0.0 < lam < math.inf):
            raise InvalidValueError(
                f"divisor must be finite and positive, got {lam!r}"
            )
        return SimpleFunction(
            self.space, tuple(v / lam for v in self.values)
        )

    def _same_space(self, other: SimpleFunction):
        if other.space != self.space:
            raise InvalidValueError(
                "functions live on different measure spaces"
            )

    def multiply(
        self, other: SimpleFunction
    ) -> SimpleFunction:
        self._same_space(other)
        return SimpleFunction(
            self.space,
            tuple(
                x * y
                for x, y in zip(self.values, other.values)
            ),
        )

    def add(self, other: SimpleFunction) -> SimpleFunction:
        self._same_space(other)
        return SimpleFunction(
            self.space,
            tuple(
                x + y
                for x, y in zip(self.values, other.values)
            ),
        )

    def truncate(self, level: float) -> SimpleFunction:
        """min(f, level)."""
        return SimpleFunction(
            self.space,
            tuple(min(v, level) for v in self.values),
        )

    def with_values(
        self, values: Iterable[float]
    ) -> SimpleFunction:
        return SimpleFunction(self.space, tuple(values))
