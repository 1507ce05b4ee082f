from __future__ import annotations

import numpy as np

from ...multipliers import (
    Direction,
    holder_levels,
    lux_holder_verify,
    validate_constant,
)
from ...types import AuditReport, CampaignConfig, NormKind, Precision
from ..generators import holder_triple
from .base_check import BaseCheck, Case


class HolderLuxCheck(BaseCheck):
    """||fg||_{L Phi2} <= 2 C ||f||_{L Phi1} ||g||_{L Phi3}."""

    name = "holder-lux"

    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case:
        triple = holder_triple(rng, config)
        f, g = self.pair(rng, config, triple.phi1, triple.phi3)
        return {
            "phi1": triple.phi1,
            "phi2": triple.phi2,
            "phi3": triple.phi3,
            "f": f,
            "g": g,
            "c_upper": triple.constant,
            "construction": triple.construction,
        }

    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport:
        phi1, phi2, phi3 = case["phi1"], case["phi2"], case["phi3"]
        f, g = case["f"], case["g"]
        constant = validate_constant(
            phi1,
            phi2,
            phi3,
            Direction.UPPER,
            case["c_upper"],
            holder_levels(
                phi1, phi3, f, g, precision, kind=NormKind.LUX
            ),
            precision,
        )
        return lux_holder_verify(
            phi1, phi2, phi3, f, g, constant, precision
        )
