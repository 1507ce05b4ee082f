from __future__ import annotations

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ...types import AuditReport
from .values import VERDICT_STYLE_MAP, format_slack, format_value


class AuditTableRenderer:
    def __init__(self, console: Console):
        self._console = console

    def render(self, report: AuditReport, title: str = ""):
        table = Table(
            title=f"[bold]{title or report.check}[/bold]",
            box=box.ROUNDED,
            show_header=True,
            header_style="bold cyan",
        )
        table.add_column("Quantity", style="white")
        table.add_column("Value", justify="right")

        table.add_row("verdict", VERDICT_STYLE_MAP[report.passed])
        table.add_row("worst slack", format_slack(report.worst_slack))
        for key, value in report.details.items():
            if isinstance(value, (dict, list, tuple)):
                continue
            table.add_row(key.replace("_", " "), format_value(value))

        self._console.print(table)
        if report.reasoning:
            self._console.print(
                Panel(
                    report.reasoning,
                    title="[red]Violation[/red]"
                    if not report.passed
                    else "[dim]Note[/dim]",
                    border_style="red" if not report.passed else "dim",
                )
            )
