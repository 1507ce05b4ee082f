from __future__ import annotations

from rich import box
from rich.console import Console
from rich.table import Table

from ...young import YoungFunction
from .values import format_value


class InverseTableRenderer:
    def __init__(self, console: Console):
        self._console = console

    def render(
        self,
        phi: YoungFunction,
        rows: list[tuple[float, float]],
        alt: bool = False,
    ):
        a, b = phi.endpoints()
        table = Table(
            title=(
                f"[bold]{'Alternative inverse' if alt else 'Inverse'}"
                f"[/bold] [dim]{phi.family}[/dim]"
            ),
            caption=(
                f"class {phi.classify().value},"
                f" a = {format_value(a)}, b = {format_value(b)}"
            ),
            box=box.ROUNDED,
            show_header=True,
            header_style="bold cyan",
        )
        table.add_column("u", justify="right", style="white")
        table.add_column("Φ⁻¹(u)", justify="right", style="bold")
        for u, value in rows:
            table.add_row(format_value(u), format_value(value, digits=17))
        self._console.print(table)
