from __future__ import annotations

import math
from typing import Any, Optional

VERDICT_STYLE_MAP = {
    True: "[green]PASS[/green]",
    False: "[red]FAIL[/red]",
}


def format_value(value: Optional[Any], digits: int = 12) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (int, float)):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "∞" if value > 0 else "-∞"
        return f"{value:.{digits}g}"
    return str(value)


def format_slack(slack: float) -> str:
    text = format_value(slack, digits=3)
    return f"[red]{text}[/red]" if slack < 0 else text
