from __future__ import annotations

import math

from ..exceptions import InvalidValueError
from ..measure import SimpleFunction, canonicalize
from ..measure.layers import LayerForm
from ..xreal import ExtReal, safe_product
from ..young import YoungFunction


def layer_modular(
    phi: YoungFunction, layers: LayerForm, lam: float
) -> float:
    total = 0.0
    for level, mass in zip(layers.levels, layers.masses):
        total += safe_product(phi.evaluate(level / lam), mass)
        if math.isinf(total):
            break
    return total


def lux_modular(
    phi: YoungFunction, f: SimpleFunction, lam: float
) -> ExtReal:
    """Sum of Phi(|f| / lambda) over the atoms, weighted."""
    if not (0.0 < lam < math.inf):
        raise InvalidValueError(
            f"lambda must be finite and positive, got {lam!r}"
        )
    if f.is_zero():
        return ExtReal(0.0)
    return ExtReal(layer_modular(phi, canonicalize(f), lam))
