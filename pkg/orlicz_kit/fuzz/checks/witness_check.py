from __future__ import annotations

import numpy as np

from ...multipliers import converse_witness
from ...types import AuditReport, CampaignConfig, Precision
from ..generators import gen_simple, gen_space, witness_triple
from .base_check import BaseCheck, Case


class WitnessCheck(BaseCheck):
    """||h||_{w Phi1} = 1 and ||hg||_{w Phi2} >= ||g||_{w Phi3} / C."""

    name = "witness"

    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case:
        triple = witness_triple(rng, config)
        g = gen_simple(
            rng, gen_space(rng, config.max_atoms), triple.phi3
        )
        return {
            "phi1": triple.phi1,
            "phi2": triple.phi2,
            "phi3": triple.phi3,
            "g": g,
            "c_lower": triple.constant,
            "construction": triple.construction,
        }

    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport:
        return converse_witness(
            case["phi1"],
            case["phi2"],
            case["phi3"],
            case["g"],
            case["c_lower"],
            config.delta,
            precision,
        ).to_audit()
