from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..types import NormKind, NormMethod
from ..xreal import ExtReal


@dataclass(frozen=True)
class NormResult:
    """
    A computed norm.

    For the weak norm with Phi in Y1 or Y2, residual is
    |sup_t Phi(t) mu(f / value, t) - 1| and root is the closed-form lambda
    at which that supremum equals one.
    """

    value: float
    method: NormMethod
    kind: NormKind = NormKind.WEAK
    residual: Optional[float] = None
    root: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "value", ExtReal(self.value))
        if self.residual is not None and self.residual < 0:
            raise ValueError("residual must be nonnegative")

    @classmethod
    def zero(cls, kind: NormKind) -> NormResult:
        return cls(
            value=0.0,
            method=NormMethod.CLOSED_FORM,
            kind=kind,
        )
