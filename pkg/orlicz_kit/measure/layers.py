from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable

from ..exceptions import ZeroFunctionError
from ..xreal import ExtReal
from .space import MeasureSpace, SimpleFunction


@dataclass(frozen=True)
class LayerForm:
    """
    Distinct positive levels c_1 < ... < c_N with merged masses.

    tails[j] is the measure of {f >= levels[j]}, strictly decreasing.
    """

    levels: tuple[float, ...]
    masses: tuple[float, ...]
    tails: tuple[float, ...]

    @classmethod
    def from_atoms(
        cls, atoms: Iterable[tuple[float, float]]
    ) -> LayerForm:
        """
        Group (level, weight) atoms by level.

        Masses and tails are exactly rounded sums of the raw atom
        weights, so they do not depend on how atoms were merged.
        """
        grouped: dict[float, list[float]] = {}
        for level, weight in atoms:
            grouped.setdefault(level, []).append(weight)
        levels = tuple(sorted(grouped))
        masses = tuple(math.fsum(grouped[c]) for c in levels)
        above: list[float] = []
        tails: list[float] = []
        for level in reversed(levels):
            above.extend(grouped[level])
            tails.append(math.fsum(above))
        return cls(levels, masses, tuple(reversed(tails)))

    def __len__(self) -> int:
        return len(self.levels)

    def tail_above(self, t: float) -> float:
        """Measure of {f > t}."""
        j = bisect_right(self.levels, t)
        return self.tails[j] if j < len(self.levels) else 0.0

    def to_simple(self) -> SimpleFunction:
        """One atom per level carrying its merged mass."""
        return SimpleFunction(
            MeasureSpace(self.masses), self.levels
        )


def canonicalize(f: SimpleFunction) -> LayerForm:
    atoms = [
        (value, weight)
        for weight, value in zip(f.weights, f.values)
        if value > 0.0
    ]
    if not atoms:
        raise ZeroFunctionError()
    return LayerForm.from_atoms(atoms)


def distribution(f: SimpleFunction, t: float) -> ExtReal:
    """mu(f, t) = measure of {|f| > t}, strict inequality."""
    if math.isinf(t) or f.is_zero():
        return ExtReal(0.0)
    return ExtReal(canonicalize(f).tail_above(t))
