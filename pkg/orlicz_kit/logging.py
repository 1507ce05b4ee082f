"""
Orlicz Kit Logging Module

Rich logging for the norm engines, multiplier checks and fuzz campaigns:
- Colored output keyed to check outcomes
- Plain structured format for pipes and log files
- Semantic methods so call sites read as what happened

Usage:
    from orlicz_kit.logging import setup_logging, get_logger

    logger = setup_logging(level="DEBUG")
    logger.norm_computed("weak", 2.0, "closed-form")
"""

from __future__ import annotations

import logging
import sys
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler
from rich.text import Text
from rich.theme import Theme

# =============================================================================
# CUSTOM THEME
# =============================================================================

ORLICZ_THEME = Theme(
    {
        "info": "cyan",
        "warning": "yellow",
        "error": "bold red",
        "debug": "dim",
        "check.name": "bold white",
        "check.pass": "bold green",
        "check.fail": "bold red",
        "value": "bold cyan",
        "method": "magenta",
        "timing": "dim cyan",
        "campaign": "bold cyan",
    }
)

_PLAIN_FORMAT = (
    "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
)
_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


# =============================================================================
# CUSTOM LOG HANDLER
# =============================================================================


class OrliczRichHandler(RichHandler):
    """Rich handler with level icons."""

    _ICONS = {
        "DEBUG": "🔍",
        "INFO": "ℹ️ ",
        "WARNING": "⚠️ ",
        "ERROR": "❌",
        "CRITICAL": "🚨",
    }
    _STYLES = {
        "DEBUG": "dim",
        "INFO": "cyan",
        "WARNING": "yellow",
        "ERROR": "red",
        "CRITICAL": "bold red",
    }

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("show_time", True)
        kwargs.setdefault("show_path", False)
        kwargs.setdefault("rich_tracebacks", True)
        super().__init__(*args, **kwargs)

    def get_level_text(
        self, record: logging.LogRecord
    ) -> Text:
        level_name = record.levelname
        icon = self._ICONS.get(level_name, "•")
        style = self._STYLES.get(level_name, "white")
        return Text(
            f"{icon} {level_name:<8}", style=style
        )


# =============================================================================
# ORLICZ LOGGER
# =============================================================================


def _fmt(value: float) -> str:
    return "∞" if value == float("inf") else f"{value:.6g}"


class OrliczLogger:
    """
    High-level logging interface for the kit.

    Example:
        logger = OrliczLogger("norms")
        logger.norm_computed("lux", 3.0, "predicate-bisection")
    """

    def __init__(
        self, name: str, level: Optional[str] = None
    ):
        self.name = name
        self._logger = logging.getLogger(
            f"orlicz_kit.{name}"
        )
        if level is not None:
            self._logger.setLevel(
                getattr(logging, level.upper())
            )

    def _log(self, level: int, message: str, **kwargs):
        extra = {"markup": True, **kwargs}
        self._logger.log(level, message, extra=extra)

    def is_debug(self) -> bool:
        return self._logger.isEnabledFor(logging.DEBUG)

    # =========================================================================
    # SEMANTIC LOGGING METHODS
    # =========================================================================

    def norm_computed(
        self,
        kind: str,
        value: float,
        method: str,
        residual: Optional[float] = None,
    ):
        residual_str = (
            f" [dim]residual={residual:.3g}[/dim]"
            if residual is not None
            else ""
        )
        self._log(
            logging.DEBUG,
            f"{kind} norm = [value]{_fmt(value)}[/value] "
            f"via [method]{method}[/method]{residual_str}",
        )

    def bracket_expanded(
        self, side: str, bound: float, steps: int
    ):
        self._log(
            logging.DEBUG,
            f"[dim]bracket {side} expanded to {_fmt(bound)} after {steps} steps[/dim]",
        )

    def constants_estimated(
        self,
        c_upper: float,
        c_lower: float,
        points: int,
    ):
        self._log(
            logging.INFO,
            f"constants c_upper=[value]{_fmt(c_upper)}[/value] "
            f"c_lower=[value]{_fmt(c_lower)}[/value] "
            f"[dim]({points} grid points)[/dim]",
        )

    def check_finished(
        self,
        check: str,
        passed: bool,
        worst_slack: float,
    ):
        verdict = (
            "[check.pass]PASS[/check.pass]"
            if passed
            else "[check.fail]FAIL[/check.fail]"
        )
        self._log(
            logging.DEBUG if passed else logging.WARNING,
            f"[check.name]{check}[/check.name] → {verdict} "
            f"[dim]slack={_fmt(worst_slack)}[/dim]",
        )

    def counterexample_recorded(
        self, check: str, case_index: int, path: str
    ):
        self._log(
            logging.WARNING,
            f"[check.fail]counterexample[/check.fail] "
            f"[check.name]{check}[/check.name] case {case_index} → {path}",
        )

    def campaign_started(
        self,
        seed: int,
        cases: int,
        checks: list[str],
        threads: int,
    ):
        self._log(
            logging.INFO,
            f"[campaign]Campaign started[/campaign] seed={seed} cases={cases} "
            f"threads={threads} checks: {', '.join(checks)}",
        )

    def campaign_finished(
        self, failures: int, elapsed_s: float
    ):
        level = (
            logging.WARNING if failures else logging.INFO
        )
        self._log(
            level,
            f"[campaign]Campaign finished[/campaign] with {failures} failures "
            f"[timing]({elapsed_s:.2f}s)[/timing]",
        )

    def error(
        self, message: str, exc_info: bool = False
    ):
        self._logger.error(message, exc_info=exc_info)

    def warning(self, message: str):
        self._log(
            logging.WARNING,
            f"[warning]{message}[/warning]",
        )

    def info(self, message: str):
        self._log(logging.INFO, message)

    def debug(self, message: str):
        self._log(
            logging.DEBUG, f"[dim]{message}[/dim]"
        )


# =============================================================================
# SETUP FUNCTION
# =============================================================================


def setup_logging(
    level: str = "INFO",
    rich_output: bool = True,
    log_file: Optional[str] = None,
) -> OrliczLogger:
    """
    Configure the ``orlicz_kit`` logger tree.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR)
        rich_output: Rich console output on stderr; plain lines otherwise
        log_file: Optional file path for log output

    Returns:
        OrliczLogger instance
    """
    root_logger = logging.getLogger("orlicz_kit")
    root_logger.setLevel(
        getattr(logging, level.upper())
    )
    root_logger.handlers.clear()

    if rich_output:
        console = Console(
            theme=ORLICZ_THEME, stderr=True
        )
        handler: logging.Handler = OrliczRichHandler(
            console=console
        )
        handler.setFormatter(
            logging.Formatter("%(message)s")
        )
    else:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(
            logging.Formatter(
                _PLAIN_FORMAT, datefmt=_DATE_FORMAT
            )
        )
    root_logger.addHandler(handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(
            logging.Formatter(
                _PLAIN_FORMAT, datefmt=_DATE_FORMAT
            )
        )
        root_logger.addHandler(file_handler)

    return OrliczLogger("main")


# =============================================================================
# CONVENIENCE FUNCTIONS
# =============================================================================


def get_logger(name: str) -> OrliczLogger:
    return OrliczLogger(name)
