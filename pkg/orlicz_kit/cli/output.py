"""Exit codes, JSON emission and the error-to-exit-code mapping."""

from __future__ import annotations

import csv
import math
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterable, Iterator, Sequence

import click

from ..exceptions import (
    InvalidDescriptorError,
    InvalidValueError,
    NoChecksSelectedError,
    UnboundedOnGridError,
    YoungClassError,
    ZeroFunctionError,
)
from ..serialization import dumps_json
from .branding import StatusPrinter

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2


def emit_json(payload: dict[str, Any]):
    click.echo(dumps_json(payload), nl=False)


def fail(
    message: str,
    code: int,
    status: StatusPrinter,
    json_mode: bool = False,
):
    if json_mode:
        click.echo(f"error: {message}", err=True)
    else:
        status.print(message, "error")
    sys.exit(code)


@contextmanager
def input_guard(
    status: StatusPrinter, json_mode: bool = False
) -> Iterator[None]:
    """Malformed input exits 2; a constant unbounded on the grid exits 1."""
    try:
        yield
    except InvalidDescriptorError as e:
        fail(
            f"invalid input: {e.field}: {e.message}",
            EXIT_INPUT,
            status,
            json_mode,
        )
    except NoChecksSelectedError as e:
        fail(str(e), EXIT_INPUT, status, json_mode)
    except (
        YoungClassError,
        ZeroFunctionError,
        InvalidValueError,
    ) as e:
        fail(f"invalid input: {e}", EXIT_INPUT, status, json_mode)
    except UnboundedOnGridError as e:
        fail(str(e), EXIT_FAILURE, status, json_mode)


def write_csv(
    path: str,
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
) -> Path:
    """Plot-ready CSV; inf as "inf", a missing ratio as an empty cell."""
    resolved = Path(path)
    resolved.parent.mkdir(parents=True, exist_ok=True)
    with open(resolved, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if v is None else _cell(v) for v in row])
    return resolved


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return "inf" if math.isinf(value) else repr(value)
    return str(value)
