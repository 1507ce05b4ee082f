from __future__ import annotations

from rich import box
from rich.console import Console
from rich.table import Table

from ...norms import NormResult
from .values import format_value


class NormTableRenderer:
    def __init__(self, console: Console):
        self._console = console

    def render(self, results: list[NormResult], family: str = ""):
        table = Table(
            title=f"[bold]Norms[/bold] [dim]{family}[/dim]",
            box=box.ROUNDED,
            show_header=True,
            header_style="bold cyan",
        )
        table.add_column("Kind", style="white")
        table.add_column("Value", justify="right", style="bold")
        table.add_column("Method", style="magenta")
        table.add_column("Residual", justify="right", style="dim")

        for result in results:
            table.add_row(
                result.kind.value,
                format_value(result.value, digits=17),
                result.method.value,
                format_value(result.residual, digits=3),
            )

        self._console.print(table)
