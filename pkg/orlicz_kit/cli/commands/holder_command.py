from __future__ import annotations

import sys
from typing import Optional

import click

from ... import __version__
from ...logging import setup_logging
from ...multipliers import (
    Direction,
    estimate_constants,
    holder_levels,
    holder_verify,
    lux_holder_verify,
    validate_constant,
)
from ...serialization import ReportSerializer
from ...types import NormKind, UGrid
from .. import cli, console
from ..branding import BannerRenderer, StatusPrinter
from ..formatting import RichCommand
from ..loaders import InputLoaderRegistry
from ..output import EXIT_FAILURE, emit_json, input_guard
from ..renderers import AuditTableRenderer
from .options import (
    data_help,
    grid_options,
    json_option,
    triple_options,
)

_banner = BannerRenderer(console, __version__)
_status = StatusPrinter(console)
_loader_registry = InputLoaderRegistry()
_serializer = ReportSerializer()
_audit_renderer = AuditTableRenderer(console)


@cli.command(name="holder-check", cls=RichCommand)
@triple_options
@click.option("--f", "f_spec", required=True, help=data_help)
@click.option("--g", "g_spec", required=True, help=data_help)
@click.option(
    "--constant",
    type=float,
    default=None,
    help="Upper constant C; estimated on the grid when omitted",
)
@click.option(
    "--lux",
    is_flag=True,
    help="Check the Luxemburg form with factor 2C instead",
)
@grid_options()
@json_option
def holder_check(
    phi1: str,
    phi2: str,
    phi3: str,
    f_spec: str,
    g_spec: str,
    constant: Optional[float],
    lux: bool,
    u_min: float,
    u_max: float,
    u_count: int,
    json_mode: bool,
):
    """
    Check ||fg|| <= 4C ||f|| ||g|| in the weak Orlicz norms.

    Without --constant, C is the grid estimate raised to cover every
    level the pair f, g reaches.

    Examples:
      orlicz-kit holder-check --phi1 p2.json --phi2 p1.json --phi3 p2.json --f f.csv --g g.csv
      orlicz-kit holder-check --phi1 p2.json --phi2 p1.json --phi3 p2.json --f f.csv --g g.csv --lux
    """
    setup_logging(level="ERROR" if json_mode else "WARNING")
    _banner.render("mini", quiet=json_mode)

    with input_guard(_status, json_mode):
        phi1_, phi2_, phi3_ = (
            _loader_registry.load_young(phi1, "phi1"),
            _loader_registry.load_young(phi2, "phi2"),
            _loader_registry.load_young(phi3, "phi3"),
        )
        f = _loader_registry.load_measure(f_spec, "f")
        g = _loader_registry.load_measure(g_spec, "g")
        kind = NormKind.LUX if lux else NormKind.WEAK

        if constant is None:
            estimated = estimate_constants(
                phi1_, phi2_, phi3_, UGrid(u_min, u_max, u_count)
            ).require_bounded(Direction.UPPER)
            constant = validate_constant(
                phi1_,
                phi2_,
                phi3_,
                Direction.UPPER,
                estimated,
                holder_levels(phi1_, phi3_, f, g, kind=kind),
            )

        verify = lux_holder_verify if lux else holder_verify
        report = verify(phi1_, phi2_, phi3_, f, g, constant)

    if json_mode:
        emit_json(_serializer.serialize_audit(report))
    else:
        _audit_renderer.render(report, title="Hölder inequality")
    if not report.passed:
        sys.exit(EXIT_FAILURE)
