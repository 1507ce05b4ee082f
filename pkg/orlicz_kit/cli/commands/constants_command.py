from __future__ import annotations

from typing import Optional

import click

from ... import __version__
from ...logging import setup_logging
from ...multipliers import estimate_constants, ratio_table
from ...serialization import ReportSerializer
from ...types import UGrid
from .. import cli, console
from ..branding import BannerRenderer, StatusPrinter
from ..formatting import RichCommand
from ..loaders import InputLoaderRegistry
from ..output import emit_json, input_guard, write_csv
from ..renderers import ConstantsTableRenderer
from .options import grid_options, json_option, triple_options

_banner = BannerRenderer(console, __version__)
_status = StatusPrinter(console)
_loader_registry = InputLoaderRegistry()
_serializer = ReportSerializer()
_constants_renderer = ConstantsTableRenderer(console)


@cli.command(cls=RichCommand)
@triple_options
@grid_options()
@click.option(
    "--no-refine",
    is_flag=True,
    help="Skip local refinement around each argmax",
)
@click.option(
    "--csv",
    "csv_path",
    default=None,
    help="Also write u,upper,lower ratio rows to this file",
)
@json_option
def constants(
    phi1: str,
    phi2: str,
    phi3: str,
    u_min: float,
    u_max: float,
    u_count: int,
    no_refine: bool,
    csv_path: Optional[str],
    json_mode: bool,
):
    """
    Estimate the constants relating Phi1^-1 Phi3^-1 to Phi2^-1 on a grid.

    Examples:
      orlicz-kit constants --phi1 '{"family":"power","p":2}' --phi2 '{"family":"power","p":1}' --phi3 '{"family":"power","p":2}'
      orlicz-kit constants --phi1 a.json --phi2 b.json --phi3 c.json --u-count 401 --csv ratios.csv
    """
    setup_logging(level="ERROR" if json_mode else "WARNING")
    _banner.render("mini", quiet=json_mode)

    with input_guard(_status, json_mode):
        grid = UGrid(u_min, u_max, u_count)
        triple = [
            _loader_registry.load_young(spec, field)
            for spec, field in (
                (phi1, "phi1"),
                (phi2, "phi2"),
                (phi3, "phi3"),
            )
        ]
        result = estimate_constants(*triple, grid, refine=not no_refine)
        if csv_path:
            written = write_csv(
                csv_path,
                ("u", "upper", "lower"),
                ratio_table(*triple, grid),
            )

    if json_mode:
        emit_json(_serializer.serialize_constants(result))
        return

    _constants_renderer.render(result)
    if csv_path:
        _status.print(f"Ratios written to [cyan]{written}[/cyan]", "success")
