from __future__ import annotations

import sys

import click

from ... import __version__
from ...logging import setup_logging
from ...norms import sup_forms_audit
from ...serialization import ReportSerializer
from ...types import UGrid
from .. import cli, console
from ..branding import BannerRenderer, StatusPrinter
from ..formatting import RichCommand
from ..loaders import InputLoaderRegistry
from ..output import EXIT_FAILURE, emit_json, input_guard
from ..renderers import AuditTableRenderer
from .options import data_help, grid_options, json_option, young_help

_banner = BannerRenderer(console, __version__)
_status = StatusPrinter(console)
_loader_registry = InputLoaderRegistry()
_serializer = ReportSerializer()
_audit_renderer = AuditTableRenderer(console)


@cli.command(name="equiv-check", cls=RichCommand)
@click.option("--young", "young_spec", required=True, help=young_help)
@click.option("--data", "data_spec", required=True, help=data_help)
@grid_options(UGrid(1e-9, 1e9, 121))
@json_option
def equiv_check(
    young_spec: str,
    data_spec: str,
    u_min: float,
    u_max: float,
    u_count: int,
    json_mode: bool,
):
    """
    Compare the three suprema that define the weak quasi-norm.

    sup Phi(t) mu(f, t), sup u mu(f, Phi^-1(u)) and sup u mu(Phi(|f|), u)
    must agree; the grid bound on the second may only fall short.

    Examples:
      orlicz-kit equiv-check --young '{"family":"power","p":1}' --data '[[1,2],[1,1]]'
      orlicz-kit equiv-check --young phi.yaml --data f.csv --json
    """
    setup_logging(level="ERROR" if json_mode else "WARNING")
    _banner.render("mini", quiet=json_mode)

    with input_guard(_status, json_mode):
        phi = _loader_registry.load_young(young_spec)
        f = _loader_registry.load_measure(data_spec)
        report = sup_forms_audit(
            phi, f, grid=UGrid(u_min, u_max, u_count).points()
        )

    if json_mode:
        emit_json(_serializer.serialize_audit(report))
    else:
        _audit_renderer.render(report, title="Sup forms")
    if not report.passed:
        sys.exit(EXIT_FAILURE)
