from __future__ import annotations

from rich.console import Console

from .assets import BANNER_STYLE_MAP


class BannerRenderer:
    """Banner above human-readable output; suppressed under --json."""

    def __init__(self, console: Console, version: str):
        self._console = console
        self._version = version

    def render(self, style: str = "mini", quiet: bool = False):
        if quiet:
            return
        self._console.print(
            BANNER_STYLE_MAP[style].format(version=self._version)
        )
        self._console.print()
