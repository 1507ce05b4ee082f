"""
Brute-force lower estimate of the multiplier norm

    sup_{f != 0} ||fg||_{Phi2} / ||f||_{Phi1}

on spaces with at most MAX_ATOMS atoms. Starts from the indicator of every
nonempty atom subset plus any caller seeds, then runs a multiplicative
pattern search with seeded random restarts until the budget of ratio
evaluations is spent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

import numpy as np

from ..exceptions import InvalidValueError
from ..measure import SimpleFunction
from ..norms import norm_of
from ..types import DEFAULT_PRECISION, NormKind, Precision
from ..xreal import ExtReal
from ..young import YoungFunction

MAX_ATOMS = 4
MIN_STEP = 1.0 / 64.0
RESTART_SPAN = 6.0


@dataclass(frozen=True)
class PwmEstimate:
    value: float
    argmax: Optional[SimpleFunction]
    evaluations: int


class _RatioSearch:
    def __init__(
        self,
        phi1: YoungFunction,
        phi2: YoungFunction,
        g: SimpleFunction,
        kind: NormKind,
        budget: int,
        precision: Precision,
    ):
        self._phi1 = phi1
        self._phi2 = phi2
        self._g = g
        self._kind = kind
        self._precision = precision
        self.remaining = budget
        self.evaluations = 0
        self.best = 0.0
        self.best_values: Optional[tuple[float, ...]] = None

    def ratio(self, values: Sequence[float]) -> float:
        self.remaining -= 1
        self.evaluations += 1
        f = self._g.with_values(values)
        if f.is_zero():
            return 0.0
        denominator = float(
            norm_of(
                self._kind, self._phi1, f, self._precision
            ).value
        )
        if denominator == 0.0:
            return 0.0
        numerator = float(
            norm_of(
                self._kind,
                self._phi2,
                f.multiply(self._g),
                self._precision,
            ).value
        )
        value = numerator / denominator
        if value > self.best:
            self.best = value
            self.best_values = tuple(values)
        return value

    def climb(self, start: Sequence[float]):
        values = list(start)
        current = self.ratio(values)
        step = 1.0
        while step >= MIN_STEP and self.remaining > 0:
            improved = False
            for k in range(len(values)):
                for candidate in self._moves(values, k, step):
                    if self.remaining <= 0:
                        return
                    score = self.ratio(candidate)
                    if score > current:
                        values, current = candidate, score
                        improved = True
            if not improved:
                step *= 0.5

    @staticmethod
    def _moves(
        values: list[float], k: int, step: float
    ) -> list[list[float]]:
        moves = []
        if values[k] == 0.0:
            revived = list(values)
            revived[k] = max(values)
            moves.append(revived)
            return moves
        for sign in (1.0, -1.0):
            moved = list(values)
            moved[k] = values[k] * 2.0 ** (sign * step)
            moves.append(moved)
        if sum(v > 0.0 for v in values) > 1:
            zeroed = list(values)
            zeroed[k] = 0.0
            moves.append(zeroed)
        return moves


def _indicator_seeds(n: int) -> list[tuple[float, ...]]:
    return [
        tuple(float(bit) for bit in mask)
        for mask in product((0, 1), repeat=n)
        if any(mask)
    ]


def pwm_search(
    phi1: YoungFunction,
    phi2: YoungFunction,
    g: SimpleFunction,
    budget: int = 2000,
    seed: int = 0,
    kind: NormKind = NormKind.WEAK,
    extra_seeds: Iterable[SimpleFunction] = (),
    precision: Precision = DEFAULT_PRECISION,
) -> PwmEstimate:
    n = len(g.values)
    if n > MAX_ATOMS:
        raise InvalidValueError(
            f"brute force is limited to {MAX_ATOMS} atoms, got {n}"
        )
    if g.is_zero():
        return PwmEstimate(0.0, None, 0)

    search = _RatioSearch(
        phi1, phi2, g, NormKind(kind), budget, precision
    )
    seeds = _indicator_seeds(n) + [
        tuple(s.values) for s in extra_seeds
    ]
    for values in seeds:
        search.ratio(values)

    rng = np.random.Generator(np.random.Philox(seed))
    start = search.best_values
    while search.remaining > 0:
        if start is None:
            start = tuple(
                (2.0 ** rng.uniform(-RESTART_SPAN, RESTART_SPAN, n)).tolist()
            )
        search.climb(start)
        start = None

    argmax = (
        g.with_values(search.best_values)
        if search.best_values is not None
        else None
    )
    return PwmEstimate(
        value=search.best,
        argmax=argmax,
        evaluations=search.evaluations,
    )


def pwm_bruteforce(
    phi1: YoungFunction,
    phi2: YoungFunction,
    g: SimpleFunction,
    budget: int = 2000,
    seed: int = 0,
    kind: NormKind = NormKind.WEAK,
    extra_seeds: Iterable[SimpleFunction] = (),
    precision: Precision = DEFAULT_PRECISION,
) -> ExtReal:
    return ExtReal(
        pwm_search(
            phi1,
            phi2,
            g,
            budget=budget,
            seed=seed,
            kind=kind,
            extra_seeds=extra_seeds,
            precision=precision,
        ).value
    )
