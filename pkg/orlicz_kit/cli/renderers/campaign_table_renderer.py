from __future__ import annotations

from rich import box
from rich.console import Console
from rich.table import Table

from ...fuzz import CampaignReport
from .values import format_slack


class CampaignTableRenderer:
    def __init__(self, console: Console):
        self._console = console

    def render(self, report: CampaignReport):
        config = report.config
        table = Table(
            title=(
                f"[bold]Campaign[/bold] [dim]seed {config.seed},"
                f" {config.cases} cases per check[/dim]"
            ),
            caption=f"{report.algorithm}, {report.wall_time_s:.2f}s",
            box=box.ROUNDED,
            show_header=True,
            header_style="bold cyan",
        )
        table.add_column("Check", style="white")
        table.add_column("Passed", justify="right", style="green")
        table.add_column("Failed", justify="right")
        table.add_column("Rechecked", justify="right", style="dim")
        table.add_column("Boundary", justify="right", style="dim")
        table.add_column("Worst slack", justify="right")
        table.add_column("Worst case", justify="right", style="dim")

        for outcome in report.outcomes:
            failed = (
                f"[red]{outcome.failed}[/red]"
                if outcome.failed
                else "0"
            )
            table.add_row(
                outcome.check,
                str(outcome.passed),
                failed,
                str(outcome.rechecked),
                str(outcome.boundary_cases),
                format_slack(outcome.worst_slack),
                "-"
                if outcome.worst_case is None
                else str(outcome.worst_case),
            )

        self._console.print(table)
