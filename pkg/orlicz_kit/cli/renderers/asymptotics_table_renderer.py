from __future__ import annotations

from rich import box
from rich.console import Console
from rich.table import Table

from ...types import AuditReport
from .values import VERDICT_STYLE_MAP, format_value


class AsymptoticsTableRenderer:
    """K for each example family, with its value on the widened grid."""

    def __init__(self, console: Console):
        self._console = console

    def render(self, rows: list[tuple[str, AuditReport]]):
        table = Table(
            title="[bold]Inverse vs surrogate[/bold]",
            box=box.ROUNDED,
            show_header=True,
            header_style="bold cyan",
        )
        table.add_column("Young function", style="white")
        table.add_column("K", justify="right", style="bold")
        table.add_column("K widened", justify="right")
        table.add_column("Change", justify="right", style="dim")
        table.add_column("Stable", justify="center")

        for label, report in rows:
            details = report.details
            table.add_row(
                label,
                format_value(details.get("k"), digits=6),
                format_value(details.get("k_extended"), digits=6),
                f"{details.get('change', 0.0):.2%}",
                VERDICT_STYLE_MAP[report.passed],
            )

        self._console.print(table)
