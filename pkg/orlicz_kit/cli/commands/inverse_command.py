from __future__ import annotations

import click

from ... import __version__
from ...exceptions import InvalidDescriptorError
from ...logging import setup_logging
from ...serialization import (
    ReportSerializer,
    decode_extreal,
    encode_extreal,
)
from .. import cli, console
from ..branding import BannerRenderer, StatusPrinter
from ..formatting import RichCommand
from ..loaders import InputLoaderRegistry
from ..output import emit_json, input_guard
from ..renderers import InverseTableRenderer
from .options import json_option, young_help

_banner = BannerRenderer(console, __version__)
_status = StatusPrinter(console)
_loader_registry = InputLoaderRegistry()
_serializer = ReportSerializer()
_inverse_renderer = InverseTableRenderer(console)


def parse_level(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise InvalidDescriptorError(
            "u", f"expected a number or \"inf\", got {text!r}"
        ) from None
    return decode_extreal(value, "u")


@cli.command(cls=RichCommand)
@click.option("--young", "young_spec", required=True, help=young_help)
@click.option(
    "--u",
    "levels",
    multiple=True,
    required=True,
    help="Level u >= 0 or inf; repeat for several",
)
@click.option(
    "--alt",
    is_flag=True,
    help="Map u = inf to b(Phi) instead of inf",
)
@json_option
def inverse(
    young_spec: str,
    levels: tuple[str, ...],
    alt: bool,
    json_mode: bool,
):
    """
    Evaluate the generalized inverse of a Young function.

    Examples:
      orlicz-kit inverse --young '{"family":"power","p":2}' --u 4
      orlicz-kit inverse --young phi.json --u 0 --u 1 --u inf --alt
    """
    setup_logging(level="ERROR" if json_mode else "WARNING")
    _banner.render("mini", quiet=json_mode)

    with input_guard(_status, json_mode):
        phi = _loader_registry.load_young(young_spec)
        us = [parse_level(text) for text in levels]
        inverse_of = phi.inverse_alt if alt else phi.inverse
        rows = [(u, inverse_of(u)) for u in us]

    if json_mode:
        a, b = phi.endpoints()
        emit_json(
            {
                "young": _serializer.encode(phi),
                "class": phi.classify().value,
                "a": encode_extreal(a),
                "b": encode_extreal(b),
                "alt": alt,
                "inverses": [
                    {"u": encode_extreal(u), "value": encode_extreal(v)}
                    for u, v in rows
                ],
            }
        )
        return

    _inverse_renderer.render(phi, rows, alt=alt)
