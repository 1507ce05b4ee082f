"""
Campaign configs from YAML or JSON.

    seed: 1
    cases: 1000
    checks: [holder, witness, norms-equivalence]
    class_mix: {Y1: 0.4, Y2: 0.3, Y3: 0.3}
    u_grid: {u_min: 1.0e-6, u_max: 1.0e6, count: 121}

Missing fields take the CampaignConfig defaults.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml

from ..exceptions import InvalidDescriptorError
from ..types import CampaignConfig, UGrid, YoungClass
from .config_validator import CampaignConfigValidator

# PyYAML reads 1e-6 (no dot) as a string
_FLOAT_FIELDS = ("delta",)
_GRID_FLOAT_FIELDS = ("u_min", "u_max")


def _coerce_float(value: Any) -> Any:
    if isinstance(value, str):
        try:
            return float(value)
        except ValueError:
            return value
    return value


class CampaignConfigLoader:

    def __init__(self) -> None:
        self._validator = CampaignConfigValidator()

    def load_from_file(self, path: Path | str) -> CampaignConfig:
        resolved_path = Path(path)
        try:
            with open(resolved_path) as file_handle:
                data = yaml.safe_load(file_handle)
        except yaml.YAMLError as e:
            raise InvalidDescriptorError(
                "config", f"cannot parse {resolved_path}: {e}"
            ) from e
        return self.load_from_data(data or {})

    def load_from_text(self, text: str) -> CampaignConfig:
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise InvalidDescriptorError(
                "config", f"cannot parse: {e}"
            ) from e
        return self.load_from_data(data or {})

    def load_from_data(self, data: Any) -> CampaignConfig:
        data = self._normalize(data)
        problems = self._validator.problems(data)
        if problems:
            field, message = problems[0]
            raise InvalidDescriptorError(field, message)

        config = CampaignConfig()
        for key in (
            "seed",
            "cases",
            "max_atoms",
            "max_segments",
            "delta",
            "pwm_budget",
            "threads",
        ):
            if key in data:
                setattr(config, key, data[key])
        if "class_mix" in data:
            config.class_mix = {
                c: float(data["class_mix"].get(c.value, 0.0))
                for c in YoungClass
            }
        if "u_grid" in data:
            default = config.u_grid
            grid = data["u_grid"]
            config.u_grid = UGrid(
                u_min=float(grid.get("u_min", default.u_min)),
                u_max=float(grid.get("u_max", default.u_max)),
                count=int(grid.get("count", default.count)),
            )
        if "checks" in data:
            config.checks = parse_checks(data["checks"])
        return config

    @staticmethod
    def _normalize(data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        for key in _FLOAT_FIELDS:
            if key in data:
                data[key] = _coerce_float(data[key])
        if isinstance(data.get("u_grid"), dict):
            grid = dict(data["u_grid"])
            for key in _GRID_FLOAT_FIELDS:
                if key in grid:
                    grid[key] = _coerce_float(grid[key])
            data["u_grid"] = grid
        return data


def parse_checks(value: Any) -> tuple[str, ...]:
    """Check names from a list or a comma-separated string, deduplicated."""
    if isinstance(value, str):
        value = value.split(",")
    names = [str(name).strip() for name in value]
    return tuple(dict.fromkeys(n for n in names if n))
