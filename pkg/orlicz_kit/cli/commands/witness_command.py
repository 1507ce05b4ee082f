from __future__ import annotations

import sys
from typing import Optional

import click

from ... import __version__
from ...logging import setup_logging
from ...multipliers import (
    Direction,
    converse_witness,
    estimate_constants,
)
from ...serialization import ReportSerializer
from ...types import UGrid
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


@cli.command(name="witness-check", cls=RichCommand)
@triple_options
@click.option("--g", "g_spec", required=True, help=data_help)
@click.option(
    "--constant",
    type=float,
    default=None,
    help="Lower constant C; estimated on the grid when omitted",
)
@click.option(
    "--delta",
    type=click.FloatRange(0.0, 1.0, min_open=True, max_open=True),
    default=0.9,
    help="Envelope parameter when Phi2 or Phi3 is Y3",
)
@grid_options()
@json_option
def witness_check(
    phi1: str,
    phi2: str,
    phi3: str,
    g_spec: str,
    constant: Optional[float],
    delta: float,
    u_min: float,
    u_max: float,
    u_count: int,
    json_mode: bool,
):
    """
    Build the extremal h for g and check ||hg|| >= ||g|| / C.

    Examples:
      orlicz-kit witness-check --phi1 p2.json --phi2 p1.json --phi3 p2.json --g '[[4,1]]'
      orlicz-kit witness-check --phi1 a.json --phi2 linf.json --phi3 a.json --g g.csv --delta 0.95
    """
    setup_logging(level="ERROR" if json_mode else "WARNING")
    _banner.render("mini", quiet=json_mode)

    with input_guard(_status, json_mode):
        phi1_, phi2_, phi3_ = (
            _loader_registry.load_young(phi1, "phi1"),
            _loader_registry.load_young(phi2, "phi2"),
            _loader_registry.load_young(phi3, "phi3"),
        )
        g = _loader_registry.load_measure(g_spec, "g")
        if constant is None:
            constant = estimate_constants(
                phi1_, phi2_, phi3_, UGrid(u_min, u_max, u_count)
            ).require_bounded(Direction.LOWER)
        report = converse_witness(
            phi1_, phi2_, phi3_, g, constant, delta
        )

    if json_mode:
        emit_json(_serializer.serialize_witness(report))
    else:
        _audit_renderer.render(report.to_audit(), title="Witness")
    if not report.passed:
        sys.exit(EXIT_FAILURE)
