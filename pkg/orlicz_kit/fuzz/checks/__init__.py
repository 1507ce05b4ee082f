from __future__ import annotations

from ...exceptions import InvalidDescriptorError
from ...types import ALL_CHECKS
from .base_check import BaseCheck, Case
from .embedding_check import EmbeddingCheck
from .fatou_check import FatouCheck
from .holder_check import HolderCheck
from .holder_lux_check import HolderLuxCheck
from .homogeneity_check import HomogeneityCheck
from .inverse_laws_check import InverseLawsCheck
from .lattice_check import LatticeCheck
from .le1_check import Le1Check
from .lux_triangle_check import LuxTriangleCheck
from .monotone_limit_check import MonotoneLimitCheck
from .normalization_check import NormalizationCheck
from .norms_equivalence_check import NormsEquivalenceCheck
from .quasi_triangle_check import QuasiTriangleCheck
from .sandwich_check import SandwichCheck
from .witness_check import WitnessCheck


class CheckRegistry:
    def __init__(self):
        self._checks: dict[str, BaseCheck] = {
            check.name: check
            for check in (
                HolderCheck(),
                WitnessCheck(),
                SandwichCheck(),
                NormsEquivalenceCheck(),
                LatticeCheck(),
                FatouCheck(),
                QuasiTriangleCheck(),
                NormalizationCheck(),
                Le1Check(),
                EmbeddingCheck(),
                HomogeneityCheck(),
                LuxTriangleCheck(),
                MonotoneLimitCheck(),
                HolderLuxCheck(),
                InverseLawsCheck(),
            )
        }

    def names(self) -> list[str]:
        return sorted(self._checks)

    def get(self, name: str) -> BaseCheck:
        check = self._checks.get(name)
        if check is None:
            raise InvalidDescriptorError(
                "checks", f"unknown check {name!r}"
            )
        return check

    @staticmethod
    def index_of(name: str) -> int:
        """Stable stream index of a check, independent of the selection."""
        return ALL_CHECKS.index(name)


__all__ = [
    "BaseCheck",
    "Case",
    "CheckRegistry",
    "EmbeddingCheck",
    "FatouCheck",
    "HolderCheck",
    "HolderLuxCheck",
    "HomogeneityCheck",
    "InverseLawsCheck",
    "LatticeCheck",
    "Le1Check",
    "LuxTriangleCheck",
    "MonotoneLimitCheck",
    "NormalizationCheck",
    "NormsEquivalenceCheck",
    "QuasiTriangleCheck",
    "SandwichCheck",
    "WitnessCheck",
]
