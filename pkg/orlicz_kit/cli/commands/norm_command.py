from __future__ import annotations

import click

from ... import __version__
from ...logging import setup_logging
from ...norms import lux_norm, weak_norm
from ...serialization import ReportSerializer
from ...types import NormMethod
from .. import cli, console
from ..branding import BannerRenderer, StatusPrinter
from ..formatting import RichCommand
from ..loaders import InputLoaderRegistry
from ..output import emit_json, input_guard
from ..renderers import NormTableRenderer
from .options import data_help, json_option, young_help

_banner = BannerRenderer(console, __version__)
_status = StatusPrinter(console)
_loader_registry = InputLoaderRegistry()
_serializer = ReportSerializer()
_norm_renderer = NormTableRenderer(console)

SOLVERS = {
    "auto": None,
    "bisection": NormMethod.PREDICATE_BISECTION,
    "root": NormMethod.ROOT_EQUATION,
}


@cli.command(cls=RichCommand)
@click.option("--young", "young_spec", required=True, help=young_help)
@click.option("--data", "data_spec", required=True, help=data_help)
@click.option(
    "--kind",
    type=click.Choice(["weak", "lux", "both"]),
    default="weak",
    help="Weak quasi-norm, Luxemburg norm or both",
)
@click.option(
    "--solver",
    type=click.Choice(sorted(SOLVERS)),
    default="auto",
    help="Weak norm solver; auto certifies the closed form",
)
@json_option
def norm(
    young_spec: str,
    data_spec: str,
    kind: str,
    solver: str,
    json_mode: bool,
):
    """
    Compute the weak Orlicz quasi-norm or the Luxemburg norm.

    Examples:
      orlicz-kit norm --young '{"family":"power","p":1}' --data '[[1,2],[1,1]]'
      orlicz-kit norm --young phi.yaml --data f.csv --kind both
      orlicz-kit norm --young phi.json --data f.json --solver root --json
    """
    setup_logging(level="ERROR" if json_mode else "WARNING")
    _banner.render("mini", quiet=json_mode)

    with input_guard(_status, json_mode):
        phi = _loader_registry.load_young(young_spec)
        f = _loader_registry.load_measure(data_spec)
        results = []
        if kind in ("weak", "both"):
            results.append(weak_norm(phi, f, solver=SOLVERS[solver]))
        if kind in ("lux", "both"):
            results.append(lux_norm(phi, f))

    if json_mode:
        emit_json(
            {
                "young": _serializer.encode(phi),
                "norms": [_serializer.serialize_norm(r) for r in results],
            }
        )
        return

    _status.print(
        f"{len(f)} atoms, Φ of class [cyan]{phi.classify().value}[/cyan]"
    )
    console.print()
    _norm_renderer.render(results, family=phi.family)
