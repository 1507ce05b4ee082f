from __future__ import annotations

import click
from rich.console import Console
from rich.markup import escape

from ..branding import LOGO_MINI
from .options_table_renderer import INPUT_OPTIONS, OptionsTableRenderer

PROG_NAME = "orlicz-kit"

INPUT_FORMATS_NOTE = (
    "Φ, f and g accept inline JSON or a path ending in"
    " .json, .yaml, .yml (and .csv for simple functions)"
)


class RichCommand(click.Command):
    """Command help: summary, usage, options, input formats, examples."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._console = None
        self._options_renderer = None

    def _ensure_initialized(self, console: Console):
        if self._console is None:
            self._console = console
            self._options_renderer = OptionsTableRenderer(console)

    def format_help(self, ctx, formatter):
        from ... import __version__
        from .. import console

        self._ensure_initialized(console)

        self._console.print(LOGO_MINI.format(version=__version__))
        self._console.print()
        summary, details, examples = self._split_help()
        self._console.print(
            f"  [bold cyan]{ctx.info_name}[/bold cyan]"
            + (f": {summary}" if summary else "")
        )
        for line in details:
            self._console.print(
                f"  [dim]{escape(line)}[/dim]", highlight=False
            )
        self._console.print()

        self._console.print(
            f"  [bold]Usage:[/bold]"
            f" [green]{PROG_NAME} {ctx.info_name}[/green]"
            f" {' '.join(self.collect_usage_pieces(ctx))}"
        )
        self._console.print()
        self._options_renderer.render(self.params)

        if any(p.name in INPUT_OPTIONS for p in self.params):
            self._console.print(f"  [dim]{INPUT_FORMATS_NOTE}[/dim]")
            self._console.print()

        if examples:
            self._console.print("  [bold]Examples[/bold]")
            for line in examples:
                # examples carry JSON; keep brackets literal
                self._console.print(
                    f"  {line}", style="dim", markup=False
                )
            self._console.print()

    def _split_help(self) -> tuple[str, list[str], list[str]]:
        if not self.help:
            return "", [], []
        body, _, tail = self.help.strip().partition("Examples:")
        lines = [line.strip() for line in body.split("\n")]
        summary = lines[0]
        details = [line for line in lines[1:] if line]
        examples = [line.strip() for line in tail.split("\n") if line.strip()]
        return summary, details, examples
