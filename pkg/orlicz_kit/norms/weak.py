from __future__ import annotations

import math
from typing import Optional

from ..exceptions import YoungClassError
from ..logging import get_logger
from ..measure import SimpleFunction, canonicalize
from ..measure.layers import LayerForm
from ..types import (
    DEFAULT_PRECISION,
    NormKind,
    NormMethod,
    Precision,
    YoungClass,
)
from ..young import YoungFunction
from .bisection import (
    bisect_predicate,
    expand_lower,
    expand_upper,
)
from .result import NormResult
from .sup_forms import layer_form1

logger = get_logger("norms.weak")

_BRACKET_RTOL = 1e-9


def closed_form_weak_norm(
    phi: YoungFunction,
    layers: LayerForm,
    precision: Precision = DEFAULT_PRECISION,
) -> float:
    """max_j c_j / inverse(1 / T_j)."""
    return max(
        level / phi.inverse(1.0 / tail, precision)
        for level, tail in zip(layers.levels, layers.tails)
    )


def _certify(predicate, candidate: float) -> bool:
    """True when candidate is the smallest float the predicate accepts."""
    return predicate(candidate) and not predicate(
        math.nextafter(candidate, 0.0)
    )


def weak_norm(
    phi: YoungFunction,
    f: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
    solver: Optional[NormMethod] = None,
) -> NormResult:
    """
    inf{lambda > 0 : sup_t Phi(t) mu(f / lambda, t) <= 1}.

    The closed-form candidate seeds the bracket and is returned as is when
    it is already the float infimum. For Y1 and Y2 the residual of the
    root equation is attached.
    """
    if f.is_zero():
        return NormResult.zero(NormKind.WEAK)

    young_class = phi.classify()
    if (
        solver is NormMethod.ROOT_EQUATION
        and young_class is YoungClass.Y3
    ):
        raise YoungClassError(
            young_class,
            "Y1 or Y2",
            hint="the root equation need not hold for Y3",
        )

    layers = canonicalize(f)

    def below_one(lam: float) -> bool:
        return layer_form1(phi, layers, lam) <= 1.0

    candidate = closed_form_weak_norm(phi, layers, precision)

    if solver is None and _certify(below_one, candidate):
        value, method = candidate, NormMethod.CLOSED_FORM
    else:
        lo, hi = _bracket(below_one, candidate)
        value = bisect_predicate(
            below_one, lo, hi, precision.max_iterations
        )
        method = solver or NormMethod.PREDICATE_BISECTION
        if solver is NormMethod.ROOT_EQUATION:
            value = _closest_root(phi, layers, lo, value)

    residual = root = None
    if young_class is not YoungClass.Y3:
        residual = abs(layer_form1(phi, layers, value) - 1.0)
        root = candidate

    logger.norm_computed(
        NormKind.WEAK.value, value, method.value, residual
    )
    return NormResult(
        value=value,
        method=method,
        kind=NormKind.WEAK,
        residual=residual,
        root=root,
    )


def _bracket(predicate, candidate: float) -> tuple[float, float]:
    _, hi = expand_upper(
        predicate, candidate * (1.0 + _BRACKET_RTOL)
    )
    lo, _ = expand_lower(
        predicate, min(hi, candidate) * (1.0 - _BRACKET_RTOL)
    )
    return lo, hi


def _closest_root(
    phi: YoungFunction,
    layers: LayerForm,
    below: float,
    above: float,
) -> float:
    """Of the two float neighbours around the switch, the one nearer I = 1."""
    lo = math.nextafter(above, 0.0)
    if lo <= below:
        lo = below
    gap_lo = abs(layer_form1(phi, layers, lo) - 1.0)
    gap_hi = abs(layer_form1(phi, layers, above) - 1.0)
    return lo if gap_lo < gap_hi else above
