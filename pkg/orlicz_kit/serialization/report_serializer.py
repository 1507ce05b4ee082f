from __future__ import annotations

import math
from enum import Enum
from typing import TYPE_CHECKING, Any, Optional

from ..measure import SimpleFunction
from ..multipliers import TripleConstant, WitnessReport
from ..norms import NormResult
from ..types import (
    AuditReport,
    CampaignConfig,
    NormKind,
    NormMethod,
    UGrid,
)
from ..young import YoungFunction
from .json_output import INF_TOKEN, decode_extreal
from .measure_serializer import MeasureSerializer
from .young_serializer import YoungSerializer

if TYPE_CHECKING:
    from ..fuzz import CampaignReport, CounterexampleRecord


class ReportSerializer:
    def __init__(self):
        self._young = YoungSerializer()
        self._measure = MeasureSerializer()

    # =========================================================================
    # NORMS AND CONSTANTS
    # =========================================================================

    def serialize_norm(self, result: NormResult) -> dict[str, Any]:
        data: dict[str, Any] = {
            "kind": result.kind.value,
            "value": self.encode(result.value),
            "method": result.method.value,
        }
        if result.residual is not None:
            data["residual"] = self.encode(result.residual)
        if result.root is not None:
            data["root"] = self.encode(result.root)
        return data

    def deserialize_norm(self, data: dict[str, Any]) -> NormResult:
        return NormResult(
            value=decode_extreal(data["value"], "value"),
            method=NormMethod(data["method"]),
            kind=NormKind(data.get("kind", NormKind.WEAK.value)),
            residual=self._optional_number(data, "residual"),
            root=self._optional_number(data, "root"),
        )

    def serialize_constants(
        self, constants: TripleConstant
    ) -> dict[str, Any]:
        data: dict[str, Any] = {
            "c_upper": self.encode(constants.c_upper),
            "c_lower": self.encode(constants.c_lower),
            "upper_bounded": constants.upper_bounded,
            "lower_bounded": constants.lower_bounded,
            "u_grid": self.serialize_grid(constants.u_grid),
        }
        if constants.argmax_upper is not None:
            data["argmax_upper"] = constants.argmax_upper
        if constants.argmax_lower is not None:
            data["argmax_lower"] = constants.argmax_lower
        return data

    @staticmethod
    def serialize_grid(grid: UGrid) -> dict[str, Any]:
        return {
            "u_min": grid.u_min,
            "u_max": grid.u_max,
            "count": int(grid.count),
        }

    def serialize_witness(
        self, report: WitnessReport
    ) -> dict[str, Any]:
        data: dict[str, Any] = {
            "passed": report.passed,
            "h": self._measure.serialize(report.h),
            "norm_h": self.encode(report.norm_h),
            "norm_hg": self.encode(report.norm_hg),
            "lower_bound": self.encode(report.lower_bound),
            "target": self.encode(report.target),
            "norm_g": self.encode(report.norm_g),
            "constant": self.encode(report.constant),
            "slack": self.encode(report.slack),
            "pointwise_ok": report.pointwise_ok,
            "levels": [self.encode(u) for u in report.levels],
        }
        if report.delta is not None:
            data["delta"] = report.delta
        return data

    # =========================================================================
    # AUDITS
    # =========================================================================

    def serialize_audit(self, report: AuditReport) -> dict[str, Any]:
        data: dict[str, Any] = {
            "check": report.check,
            "passed": report.passed,
            "worst_slack": self.encode(report.worst_slack),
            "details": self.encode(report.details),
        }
        if report.reasoning is not None:
            data["reasoning"] = report.reasoning
        return data

    def deserialize_audit(self, data: dict[str, Any]) -> AuditReport:
        return AuditReport(
            check=data["check"],
            passed=bool(data["passed"]),
            worst_slack=self._signed(data.get("worst_slack", INF_TOKEN)),
            details=dict(data.get("details", {})),
            reasoning=data.get("reasoning"),
        )

    # =========================================================================
    # CAMPAIGNS
    # =========================================================================

    def serialize_config(
        self, config: CampaignConfig
    ) -> dict[str, Any]:
        data: dict[str, Any] = {
            "seed": config.seed,
            "cases": config.cases,
            "max_atoms": config.max_atoms,
            "max_segments": config.max_segments,
            "class_mix": {
                c.value: p for c, p in config.class_mix.items()
            },
            "u_grid": self.serialize_grid(config.u_grid),
            "checks": sorted(set(config.checks)),
            "delta": config.delta,
            "pwm_budget": config.pwm_budget,
        }
        return data

    def serialize_case(self, case: dict[str, Any]) -> dict[str, Any]:
        return {key: self.encode(value) for key, value in case.items()}

    def serialize_counterexample(
        self, record: CounterexampleRecord
    ) -> dict[str, Any]:
        return {
            "check": record.check,
            "seed": record.seed,
            "case": record.case_index,
            "inputs": record.inputs,
            "first_slack": self.encode(record.first_slack),
            "report": self.serialize_audit(record.report),
        }

    def serialize_campaign(
        self, report: CampaignReport
    ) -> dict[str, Any]:
        return {
            "algorithm": report.algorithm,
            "config": self.serialize_config(report.config),
            "passed": report.passed,
            "failures": report.failures,
            "checks": [
                {
                    "check": o.check,
                    "cases": o.cases,
                    "passed": o.passed,
                    "failed": o.failed,
                    "rechecked": o.rechecked,
                    "boundary_cases": o.boundary_cases,
                    "worst_slack": self.encode(o.worst_slack),
                    "worst_case": o.worst_case,
                }
                for o in report.outcomes
            ],
            "counterexamples": [
                self.serialize_counterexample(record)
                for record in report.counterexamples
            ],
        }

    # =========================================================================
    # VALUES
    # =========================================================================

    def encode(self, value: Any) -> Any:
        """Any report value as JSON-ready data."""
        if value is None or isinstance(value, (bool, str)):
            return value
        if isinstance(value, Enum):
            return value.value
        if isinstance(value, int):
            return value
        if isinstance(value, float):
            return self._encode_float(value)
        if isinstance(value, YoungFunction):
            return self._young.serialize(value)
        if isinstance(value, SimpleFunction):
            return self._measure.serialize(value)
        if isinstance(value, UGrid):
            return self.serialize_grid(value)
        if isinstance(value, AuditReport):
            return self.serialize_audit(value)
        if isinstance(value, dict):
            return {str(k): self.encode(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [self.encode(v) for v in value]
        if hasattr(value, "item"):
            return self.encode(value.item())
        raise TypeError(f"cannot encode {type(value).__name__}")

    @staticmethod
    def _encode_float(value: float) -> Any:
        if math.isnan(value):
            return None
        if math.isinf(value):
            return INF_TOKEN if value > 0 else f"-{INF_TOKEN}"
        return float(value)

    @staticmethod
    def _signed(value: Any) -> float:
        if value == f"-{INF_TOKEN}":
            return -math.inf
        if value == INF_TOKEN:
            return math.inf
        return float(value)

    @staticmethod
    def _optional_number(
        data: dict[str, Any], key: str
    ) -> Optional[float]:
        if data.get(key) is None:
            return None
        return decode_extreal(data[key], key)
