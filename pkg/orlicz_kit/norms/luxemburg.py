from __future__ import annotations

import math

from ..logging import get_logger
from ..measure import SimpleFunction, canonicalize
from ..types import (
    DEFAULT_PRECISION,
    NormKind,
    NormMethod,
    Precision,
)
from ..young import YoungFunction
from .bisection import (
    bisect_predicate,
    expand_lower,
    expand_upper,
)
from .modular import layer_modular
from .result import NormResult

logger = get_logger("norms.luxemburg")


def lux_norm(
    phi: YoungFunction,
    f: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
) -> NormResult:
    """inf{lambda > 0 : sum Phi(|f| / lambda) mu <= 1}."""
    if f.is_zero():
        return NormResult.zero(NormKind.LUX)

    layers = canonicalize(f)
    top = layers.levels[-1]

    def below_one(lam: float) -> bool:
        return layer_modular(phi, layers, lam) <= 1.0

    b = phi.b
    if math.isfinite(b):
        # below top / b the modular is infinite
        floor = top / b
        for lam in (floor, math.nextafter(floor, math.inf)):
            if below_one(lam):
                logger.norm_computed(
                    NormKind.LUX.value,
                    lam,
                    NormMethod.CLOSED_FORM.value,
                )
                return NormResult(
                    value=lam,
                    method=NormMethod.CLOSED_FORM,
                    kind=NormKind.LUX,
                )

    seed = top / phi.inverse(
        1.0 / sum(layers.masses), precision
    )
    _, hi = expand_upper(below_one, seed)
    lo, _ = expand_lower(below_one, hi * 0.5)
    value = bisect_predicate(
        below_one, lo, hi, precision.max_iterations
    )
    logger.norm_computed(
        NormKind.LUX.value,
        value,
        NormMethod.PREDICATE_BISECTION.value,
    )
    return NormResult(
        value=value,
        method=NormMethod.PREDICATE_BISECTION,
        kind=NormKind.LUX,
    )
