from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from ..exceptions import InvalidValueError
from ..types import AuditReport
from .layers import canonicalize, distribution
from .space import SimpleFunction


def truncation_stages(
    f: SimpleFunction, stages: int
) -> list[SimpleFunction]:
    """f_j = min(f, j * max(f) / J) for j = 1..J; the last stage is f."""
    if stages < 1:
        raise InvalidValueError(
            f"stages must be >= 1, got {stages!r}"
        )
    top = f.max_value
    result = [
        f.truncate(top * j / stages)
        for j in range(1, stages)
    ]
    result.append(f)
    return result


def monotone_limit_audit(
    f: SimpleFunction, stages: int
) -> AuditReport:
    """mu(f_j, t) increases to mu(f, t) at every level of f and at 0."""
    sequence = truncation_stages(f, stages)
    levels = [0.0]
    if not f.is_zero():
        levels += list(canonicalize(f).levels)

    margins: list[tuple[bool, float]] = []
    trajectories: list[dict] = []
    failures: list[str] = []
    for t in levels:
        values = [
            float(distribution(f_j, t)) for f_j in sequence
        ]
        trajectories.append({"t": t, "mu": values})
        for j, (earlier, later) in enumerate(zip(values, values[1:])):
            if later < earlier:
                failures.append(
                    f"mu(f_{j + 2}, {t!r}) = {later!r} drops below"
                    f" mu(f_{j + 1}, {t!r}) = {earlier!r}"
                )
                margins.append((False, later - earlier))
        limit = float(distribution(f, t))
        if values[-1] != limit:
            failures.append(
                f"mu(f_J, {t!r}) = {values[-1]!r} but mu(f, {t!r})"
                f" = {limit!r}"
            )
            margins.append((False, -abs(values[-1] - limit)))
        else:
            margins.append((True, 0.0))

    return AuditReport.from_margins(
        "monotone-limit",
        margins,
        reasoning="; ".join(failures[:3]) or None,
        stages=stages,
        trajectories=trajectories,
    )


def lattice_pairs(
    f: SimpleFunction,
    rng_seed: int,
    factors: Optional[Sequence[float]] = None,
) -> tuple[SimpleFunction, SimpleFunction]:
    """(h, f) with h = factor * f atomwise, factors in [0, 1]."""
    if factors is None:
        rng = np.random.Generator(np.random.Philox(rng_seed))
        factors = rng.random(len(f.values)).tolist()
    if len(factors) != len(f.values):
        raise InvalidValueError(
            "one factor per atom is required"
        )
    if any(not (0.0 <= c <= 1.0) for c in factors):
        raise InvalidValueError("factors must lie in [0, 1]")
    h = f.with_values(
        c * v for c, v in zip(factors, f.values)
    )
    return h, f
