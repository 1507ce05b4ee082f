from __future__ import annotations

import math
from pathlib import Path
from typing import Any

import yaml

from ..types import ALL_CHECKS, YoungClass

CONFIG_FIELDS = frozenset(
    {
        "seed",
        "cases",
        "max_atoms",
        "max_segments",
        "class_mix",
        "u_grid",
        "checks",
        "delta",
        "pwm_budget",
        "threads",
    }
)

MIX_RTOL = 1e-9


class CampaignConfigValidator:
    """Structural checks on a raw campaign config mapping."""

    def __init__(self) -> None:
        self._valid_checks: frozenset[str] = frozenset(ALL_CHECKS)
        self._valid_classes: frozenset[str] = frozenset(
            c.value for c in YoungClass
        )

    def validate_file(self, path: Path | str) -> list[str]:
        try:
            with open(path) as file_handle:
                data: Any = yaml.safe_load(file_handle)
        except (OSError, yaml.YAMLError) as e:
            return [f"config: cannot read {path}: {e}"]
        return self.validate_data(data)

    def validate_data(self, data: Any) -> list[str]:
        return [
            f"{field}: {message}"
            for field, message in self.problems(data)
        ]

    def problems(self, data: Any) -> list[tuple[str, str]]:
        errors: list[tuple[str, str]] = []
        if not isinstance(data, dict):
            errors.append(("config", "root must be a mapping"))
            return errors

        for key in sorted(set(data) - CONFIG_FIELDS):
            errors.append((key, "unknown field"))

        if "seed" in data:
            self._validate_seed(data["seed"], errors)
        for key, minimum in (
            ("cases", 1),
            ("max_atoms", 1),
            ("max_segments", 1),
            ("pwm_budget", 1),
        ):
            if key in data:
                self._validate_count(key, data[key], minimum, errors)
        if data.get("threads") is not None:
            self._validate_count(
                "threads", data["threads"], 1, errors
            )
        if "delta" in data:
            self._validate_delta(data["delta"], errors)
        if "class_mix" in data:
            self._validate_class_mix(data["class_mix"], errors)
        if "u_grid" in data:
            self._validate_u_grid(data["u_grid"], errors)
        if "checks" in data:
            self._validate_checks(data["checks"], errors)
        return errors

    @staticmethod
    def _is_int(value: Any) -> bool:
        return isinstance(value, int) and not isinstance(value, bool)

    @staticmethod
    def _is_number(value: Any) -> bool:
        return isinstance(value, (int, float)) and not isinstance(
            value, bool
        )

    def _validate_seed(
        self, value: Any, errors: list[tuple[str, str]]
    ) -> None:
        if not self._is_int(value) or not 0 <= value < (1 << 64):
            errors.append(
                ("seed", "must be an unsigned 64-bit integer")
            )

    def _validate_count(
        self,
        key: str,
        value: Any,
        minimum: int,
        errors: list[tuple[str, str]],
    ) -> None:
        if not self._is_int(value) or value < minimum:
            errors.append(
                (key, f"must be an integer >= {minimum}")
            )

    def _validate_delta(
        self, value: Any, errors: list[tuple[str, str]]
    ) -> None:
        if not self._is_number(value) or not 0.0 < value < 1.0:
            errors.append(("delta", "must lie strictly in (0, 1)"))

    def _validate_class_mix(
        self, value: Any, errors: list[tuple[str, str]]
    ) -> None:
        if not isinstance(value, dict) or not value:
            errors.append(
                ("class_mix", "must map Y1/Y2/Y3 to probabilities")
            )
            return
        total = 0.0
        for key, probability in value.items():
            field = f"class_mix.{key}"
            if key not in self._valid_classes:
                errors.append((field, "unknown class"))
                continue
            if not self._is_number(probability) or not (
                0.0 <= probability <= 1.0
            ):
                errors.append((field, "must lie in [0, 1]"))
                continue
            total += probability
        if not math.isclose(total, 1.0, rel_tol=MIX_RTOL):
            errors.append(
                ("class_mix", f"probabilities sum to {total!r}, not 1")
            )

    def _validate_u_grid(
        self, value: Any, errors: list[tuple[str, str]]
    ) -> None:
        if not isinstance(value, dict):
            errors.append(
                ("u_grid", "must have u_min, u_max and count")
            )
            return
        u_min, u_max = value.get("u_min"), value.get("u_max")
        for key, item in (("u_min", u_min), ("u_max", u_max)):
            if item is not None and not (
                self._is_number(item) and 0.0 < item < math.inf
            ):
                errors.append(
                    (f"u_grid.{key}", "must be a finite positive real")
                )
        if (
            self._is_number(u_min)
            and self._is_number(u_max)
            and u_min >= u_max
        ):
            errors.append(("u_grid.u_max", "must exceed u_min"))
        count = value.get("count")
        if count is not None and (
            not self._is_int(count) or count < 2
        ):
            errors.append(("u_grid.count", "must be an integer >= 2"))

    def _validate_checks(
        self, value: Any, errors: list[tuple[str, str]]
    ) -> None:
        if isinstance(value, str):
            value = [c for c in value.split(",") if c.strip()]
        if not isinstance(value, list):
            errors.append(("checks", "must be a list of check names"))
            return
        for index, name in enumerate(value):
            if str(name).strip() not in self._valid_checks:
                errors.append(
                    (f"checks[{index}]", f"unknown check {name!r}")
                )
