from __future__ import annotations

from rich import box
from rich.console import Console
from rich.table import Table

from ...multipliers import TripleConstant
from .values import format_value


class ConstantsTableRenderer:
    def __init__(self, console: Console):
        self._console = console

    def render(self, constants: TripleConstant):
        grid = constants.u_grid
        table = Table(
            title="[bold]Triple constants[/bold]",
            caption=(
                f"u in [{grid.u_min:g}, {grid.u_max:g}],"
                f" {int(grid.count)} points"
            ),
            box=box.ROUNDED,
            show_header=True,
            header_style="bold cyan",
        )
        table.add_column("Direction", style="white")
        table.add_column("Constant", justify="right", style="bold")
        table.add_column("Attained at u", justify="right", style="dim")
        table.add_column("Bounded", justify="center")

        rows = (
            (
                "upper  Φ1⁻¹Φ3⁻¹ ≤ C Φ2⁻¹",
                constants.c_upper,
                constants.argmax_upper,
                constants.upper_bounded,
            ),
            (
                "lower  Φ2⁻¹ ≤ C Φ1⁻¹Φ3⁻¹",
                constants.c_lower,
                constants.argmax_lower,
                constants.lower_bounded,
            ),
        )
        for label, value, argmax, bounded in rows:
            table.add_row(
                label,
                format_value(value),
                format_value(argmax, digits=6),
                "[green]✓[/green]" if bounded else "[red]✗[/red]",
            )

        self._console.print(table)
