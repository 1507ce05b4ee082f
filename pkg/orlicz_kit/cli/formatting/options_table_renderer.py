from __future__ import annotations

import math

import click
from rich import box
from rich.console import Console
from rich.table import Table

from ..renderers.values import format_value

# options that read a descriptor rather than a plain value
INPUT_OPTIONS = {
    "young_spec": "Φ",
    "phi1": "Φ1",
    "phi2": "Φ2",
    "phi3": "Φ3",
    "data_spec": "f",
    "f_spec": "f",
    "g_spec": "g",
}


class OptionsTableRenderer:
    """Option table with value ranges and defaults in their own columns."""

    def __init__(self, console: Console):
        self._console = console

    def render(self, params):
        opts = [
            p
            for p in params
            if isinstance(p, click.Option) and not p.hidden
        ]
        if not opts:
            return

        table = Table(
            box=box.SIMPLE,
            show_header=True,
            header_style="bold",
            padding=(0, 2),
            show_edge=False,
        )
        table.add_column("Option", style="cyan", no_wrap=True)
        table.add_column("Takes", style="dim")
        table.add_column("Default", style="dim")
        table.add_column("Description", style="white")

        for opt in opts:
            table.add_row(
                self._name(opt),
                self._takes(opt),
                self._default(opt),
                opt.help or "",
            )

        self._console.print(table)
        self._console.print()

    @staticmethod
    def _name(opt: click.Option) -> str:
        name = ", ".join(opt.opts)
        if opt.required:
            name += " [red]*[/red]"
        return name

    @staticmethod
    def _takes(opt: click.Option) -> str:
        if opt.is_flag:
            return ""
        if opt.name in INPUT_OPTIONS:
            return f"{INPUT_OPTIONS[opt.name]} (JSON or file)"
        if isinstance(opt.type, click.Choice):
            return "|".join(opt.type.choices)
        if isinstance(opt.type, click.FloatRange):
            lo = "(" if opt.type.min_open else "["
            hi = ")" if opt.type.max_open else "]"
            return (
                f"{lo}{format_value(_or(opt.type.min, -math.inf))}, "
                f"{format_value(_or(opt.type.max, math.inf))}{hi}"
            )
        takes = opt.type.name.upper()
        if opt.nargs > 1:
            takes = " ".join([takes] * opt.nargs)
        if opt.multiple:
            takes += ", repeatable"
        return takes

    @staticmethod
    def _default(opt: click.Option) -> str:
        default = opt.default
        if opt.is_flag or default is None or default == ():
            return ""
        if isinstance(default, float):
            return format_value(default, digits=6)
        return str(default)


def _or(bound, unbounded: float) -> float:
    return unbounded if bound is None else bound
