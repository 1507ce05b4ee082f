from __future__ import annotations

import sys
from typing import Optional

import click

from ... import __version__
from ...logging import setup_logging
from ...multipliers import (
    classical_identity_audit,
    pwm_search,
    sandwich_audit,
)
from ...serialization import ReportSerializer
from ...types import AuditReport, NormKind, UGrid
from .. import cli, console
from ..branding import BannerRenderer, StatusPrinter
from ..formatting import RichCommand
from ..loaders import InputLoaderRegistry
from ..output import EXIT_FAILURE, emit_json, input_guard
from ..renderers import AuditTableRenderer, format_value
from .options import data_help, grid_options, json_option, young_help

_banner = BannerRenderer(console, __version__)
_status = StatusPrinter(console)
_loader_registry = InputLoaderRegistry()
_serializer = ReportSerializer()
_audit_renderer = AuditTableRenderer(console)


@cli.command(name="pwm-bound", cls=RichCommand)
@click.option("--phi1", default=None, help=young_help)
@click.option("--phi2", default=None, help=young_help)
@click.option(
    "--phi3",
    default=None,
    help="Also run the sandwich audit against this Young function",
)
@click.option("--g", "g_spec", required=True, help=data_help)
@click.option(
    "--classical",
    nargs=2,
    type=float,
    default=None,
    help="P1 P2: compare with the Lebesgue identity instead",
)
@click.option(
    "--kind",
    type=click.Choice(["weak", "lux"]),
    default="weak",
    help="Norm on both sides of the multiplier",
)
@click.option("--budget", type=int, default=2000, help="Ratio evaluations")
@click.option("--seed", type=int, default=0, help="Search seed")
@grid_options()
@json_option
def pwm_bound(
    phi1: Optional[str],
    phi2: Optional[str],
    phi3: Optional[str],
    g_spec: str,
    classical: Optional[tuple[float, float]],
    kind: str,
    budget: int,
    seed: int,
    u_min: float,
    u_max: float,
    u_count: int,
    json_mode: bool,
):
    """
    Lower-estimate the pointwise multiplier norm of g by search.

    Examples:
      orlicz-kit pwm-bound --phi1 p1.json --phi2 p1.json --g '[[1,3],[2,3]]'
      orlicz-kit pwm-bound --phi1 p2.json --phi2 p1.json --phi3 p2.json --g g.json
      orlicz-kit pwm-bound --classical 4 2 --g '[[1,1],[1,2]]'
    """
    if classical is None and (phi1 is None or phi2 is None):
        raise click.UsageError("--phi1 and --phi2 are required")

    setup_logging(level="ERROR" if json_mode else "WARNING")
    _banner.render("mini", quiet=json_mode)

    report: Optional[AuditReport] = None
    with input_guard(_status, json_mode):
        g = _loader_registry.load_measure(g_spec, "g")
        if classical is not None:
            p1, p2 = classical
            report = classical_identity_audit(
                p1, p2, g, budget=budget, seed=seed
            )
        else:
            phi1_ = _loader_registry.load_young(phi1, "phi1")
            phi2_ = _loader_registry.load_young(phi2, "phi2")
            if phi3 is not None:
                report = sandwich_audit(
                    phi1_,
                    phi2_,
                    _loader_registry.load_young(phi3, "phi3"),
                    g,
                    grid=UGrid(u_min, u_max, u_count),
                    budget=budget,
                    seed=seed,
                )
            else:
                estimate = pwm_search(
                    phi1_,
                    phi2_,
                    g,
                    budget=budget,
                    seed=seed,
                    kind=NormKind(kind),
                )

    if report is None:
        if json_mode:
            emit_json(
                {
                    "kind": kind,
                    "estimate": _serializer.encode(estimate.value),
                    "evaluations": estimate.evaluations,
                    "argmax": _serializer.encode(estimate.argmax),
                }
            )
        else:
            _status.print(
                f"Multiplier norm ≥ [bold]{format_value(estimate.value)}"
                f"[/bold] [dim]({estimate.evaluations} evaluations)[/dim]",
                "success",
            )
        return

    if json_mode:
        emit_json(_serializer.serialize_audit(report))
    else:
        _audit_renderer.render(report)
    if not report.passed:
        sys.exit(EXIT_FAILURE)
