from __future__ import annotations

import sys
from itertools import product
from typing import Optional

import click

from ... import __version__
from ...logging import setup_logging
from ...multipliers import (
    EXAMPLE_GRID,
    asymptotics_table,
    example_asymptotics_audit,
)
from ...serialization import ReportSerializer
from ...types import UGrid
from ...young import ExpPower, Power, PowerLog, YoungFunction
from .. import cli, console
from ..branding import BannerRenderer, StatusPrinter
from ..formatting import RichCommand
from ..output import EXIT_FAILURE, emit_json, input_guard, write_csv
from ..renderers import AsymptoticsTableRenderer
from .options import grid_options, json_option

_banner = BannerRenderer(console, __version__)
_status = StatusPrinter(console)
_serializer = ReportSerializer()
_asymptotics_renderer = AsymptoticsTableRenderer(console)

EXPONENTS = (1.0, 2.0, 3.0)


def example_functions() -> list[tuple[str, YoungFunction]]:
    functions: list[tuple[str, YoungFunction]] = [
        (f"power(p={p:g})", Power(p)) for p in EXPONENTS
    ]
    functions += [
        (f"power_log(p={p:g}, q={q:g})", PowerLog(p, q))
        for p, q in product(EXPONENTS, EXPONENTS)
    ]
    functions += [
        (f"exp_power(p={p:g})", ExpPower(p)) for p in EXPONENTS
    ]
    return functions


@cli.command(cls=RichCommand)
@grid_options(EXAMPLE_GRID)
@click.option(
    "--csv",
    "csv_path",
    default=None,
    help="Also write label,u,ratio rows to this file",
)
@json_option
def examples(
    u_min: float,
    u_max: float,
    u_count: int,
    csv_path: Optional[str],
    json_mode: bool,
):
    """
    Compare exact inverses of the example families with their surrogates.

    K is the largest of ratio and 1/ratio on the grid; it must be finite
    and move by under 5% when the grid widens two decades each way.

    Examples:
      orlicz-kit examples
      orlicz-kit examples --u-max 1e9 --csv ratios.csv
    """
    setup_logging(level="ERROR" if json_mode else "WARNING")
    _banner.render("mini", quiet=json_mode)

    with input_guard(_status, json_mode):
        grid = UGrid(u_min, u_max, u_count)
        functions = example_functions()
        rows = [
            (label, example_asymptotics_audit(phi, grid))
            for label, phi in functions
        ]
        if csv_path:
            written = write_csv(
                csv_path,
                ("label", "u", "ratio"),
                (
                    (label, u, ratio)
                    for label, phi in functions
                    for u, ratio in asymptotics_table(phi, grid)
                ),
            )

    passed = all(report.passed for _, report in rows)
    if json_mode:
        emit_json(
            {
                "u_grid": _serializer.serialize_grid(grid),
                "passed": passed,
                "examples": [
                    {
                        "label": label,
                        "young": _serializer.encode(phi),
                        "audit": _serializer.serialize_audit(report),
                    }
                    for (label, phi), (_, report) in zip(functions, rows)
                ],
            }
        )
    else:
        _asymptotics_renderer.render(rows)
        if csv_path:
            _status.print(
                f"Ratios written to [cyan]{written}[/cyan]", "success"
            )
    if not passed:
        sys.exit(EXIT_FAILURE)
