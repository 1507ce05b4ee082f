"""
The three suprema that define the weak quasi-norm.

    form1  sup_t Phi(t) mu(f, t)
    form2  sup_u u mu(f, inverse(u))
    form3  sup_u u mu(Phi(|f|), u)

All three are exact finite maxima on simple functions. form2 is computed
through the inverse, not through form1: u -> mu(f, inverse(u)) is a step
function whose jumps can only sit at the left limits Phi(c_j-), so it is
sampled once inside every piece between consecutive jumps.
"""

from __future__ import annotations

import math
from typing import Iterable

from ..measure import SimpleFunction, canonicalize
from ..measure.layers import LayerForm
from ..types import DEFAULT_PRECISION, Precision
from ..xreal import ExtReal, safe_product
from ..young import YoungFunction


def layer_form1(
    phi: YoungFunction, layers: LayerForm, lam: float = 1.0
) -> float:
    """max_j Phi((c_j / lam)-) * T_j."""
    best = 0.0
    for level, tail in zip(layers.levels, layers.tails):
        value = safe_product(phi.left_limit(level / lam), tail)
        if value > best:
            best = value
            if math.isinf(best):
                break
    return best


def weak_sup_form1(
    phi: YoungFunction, f: SimpleFunction
) -> ExtReal:
    if f.is_zero():
        return ExtReal(0.0)
    return ExtReal(layer_form1(phi, canonicalize(f)))


def _piece_samples(bounds: list[float]) -> list[float]:
    """One u strictly inside each piece (0, B1), (B1, B2), ..., (Bm, inf)."""
    if not bounds:
        return [1.0]
    samples = [0.5 * bounds[0]]
    for left, right in zip(bounds, bounds[1:]):
        mid = math.sqrt(left) * math.sqrt(right)
        if not (left < mid < right):
            mid = 0.5 * (left + right)
        if not (left < mid < right):
            # no float strictly inside; the piece is closed on the left
            mid = left
        samples.append(mid)
    last = 2.0 * bounds[-1]
    samples.append(last if math.isfinite(last) else bounds[-1])
    return samples


def weak_sup_form2(
    phi: YoungFunction,
    f: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
) -> ExtReal:
    if f.is_zero():
        return ExtReal(0.0)
    layers = canonicalize(f)
    bounds = sorted(
        {
            jump
            for jump in (
                phi.left_limit(c) for c in layers.levels
            )
            if 0.0 < jump < math.inf
        }
    )
    samples = _piece_samples(bounds)
    right_ends = bounds + [math.inf]

    best = 0.0
    for u, right in zip(samples, right_ends):
        mass = layers.tail_above(phi.inverse(u, precision))
        best = max(best, safe_product(right, mass))
        if math.isinf(best):
            break
    return ExtReal(best)


def weak_sup_form3(
    phi: YoungFunction, f: SimpleFunction
) -> ExtReal:
    atoms: list[tuple[float, float]] = []
    for weight, value in zip(f.weights, f.values):
        image = phi.evaluate(value)
        if math.isinf(image):
            # a positive-mass atom at inf lies in every superlevel set
            return ExtReal(math.inf)
        if image > 0.0:
            atoms.append((image, weight))
    if not atoms:
        return ExtReal(0.0)
    layers = LayerForm.from_atoms(atoms)
    return ExtReal(
        max(
            level * tail
            for level, tail in zip(layers.levels, layers.tails)
        )
    )


def form2_grid_lower_bound(
    phi: YoungFunction,
    f: SimpleFunction,
    points: Iterable[float],
    precision: Precision = DEFAULT_PRECISION,
) -> ExtReal:
    """max of u mu(f, inverse(u)) over the given u; never above form2."""
    if f.is_zero():
        return ExtReal(0.0)
    layers = canonicalize(f)
    best = 0.0
    for u in points:
        if not (0.0 < u < math.inf):
            continue
        mass = layers.tail_above(phi.inverse(u, precision))
        best = max(best, safe_product(u, mass))
    return ExtReal(best)
