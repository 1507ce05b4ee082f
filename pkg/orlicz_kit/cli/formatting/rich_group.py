from __future__ import annotations

import click
from rich import box
from rich.console import Console
from rich.table import Table

from ..branding import BannerRenderer
from .rich_command import PROG_NAME

COMMAND_SECTIONS = (
    ("Norms", ("norm", "inverse", "equiv-check")),
    (
        "Multipliers",
        (
            "constants",
            "holder-check",
            "witness-check",
            "pwm-bound",
            "examples",
        ),
    ),
    ("Campaigns", ("fuzz",)),
)

EXIT_CODE_ROWS = (
    ("0", "success"),
    ("1", "a mathematical check failed"),
    ("2", "malformed input or usage error"),
)

ENVIRONMENT_ROWS = (
    ("ORLICZ_KIT_THREADS", "cap on campaign worker threads"),
)


class RichGroup(click.Group):
    """Help grouped by subject, followed by exit codes and environment."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._console = None
        self._banner = None

    def _ensure_initialized(self, console: Console, version: str):
        if self._console is None:
            self._console = console
            self._banner = BannerRenderer(console, version)

    def format_help(self, ctx, formatter):
        from ... import __version__
        from .. import console

        self._ensure_initialized(console, __version__)
        self._banner.render("small")

        if self.help:
            self._console.print(f"  {self.help}")
            self._console.print()

        self._console.print(self._commands_table())
        self._console.print()
        self._render_rows("Exit codes", EXIT_CODE_ROWS)
        self._render_rows("Environment", ENVIRONMENT_ROWS)

        self._console.print(
            f"  [dim]Run[/dim] [cyan]{PROG_NAME} <command> --help[/cyan]"
            " [dim]for options and examples[/dim]"
        )
        self._console.print()

    def _sections(self) -> list[tuple[str, list[click.Command]]]:
        visible = {
            name: cmd
            for name, cmd in self.commands.items()
            if not cmd.hidden
        }
        sections = []
        for title, names in COMMAND_SECTIONS:
            members = [visible.pop(n) for n in names if n in visible]
            if members:
                sections.append((title, members))
        if visible:
            sections.append(
                ("Other", [visible[n] for n in sorted(visible)])
            )
        return sections

    def _commands_table(self) -> Table:
        table = Table(
            box=box.ROUNDED,
            show_header=False,
            border_style="dim",
            padding=(0, 2),
        )
        table.add_column("Command", style="green", no_wrap=True)
        table.add_column("Description", style="white")

        for i, (title, members) in enumerate(self._sections()):
            if i:
                table.add_section()
            table.add_row(f"[bold cyan]{title}[/bold cyan]", "")
            for cmd in members:
                table.add_row(
                    f"  {cmd.name}", cmd.get_short_help_str(limit=60)
                )
        return table

    def _render_rows(self, title: str, rows: tuple[tuple[str, str], ...]):
        self._console.print(f"  [bold]{title}[/bold]")
        for key, meaning in rows:
            self._console.print(f"    [cyan]{key}[/cyan]  {meaning}")
        self._console.print()
