"""Option groups shared by several commands."""

from __future__ import annotations

from typing import Callable

import click

from ...types import UGrid

_DEFAULT_GRID = UGrid()

young_help = "Young function: inline JSON or a .json/.yaml file"
data_help = "Simple function: inline JSON or a .json/.yaml/.csv file"


def grid_options(default: UGrid = _DEFAULT_GRID) -> Callable:
    """--u-min/--u-max/--u-count for the constant estimation grid."""

    def decorate(command: Callable) -> Callable:
        command = click.option(
            "--u-count",
            type=int,
            default=int(default.count),
            help="Grid points",
        )(command)
        command = click.option(
            "--u-max",
            type=float,
            default=default.u_max,
            help="Largest u on the grid",
        )(command)
        command = click.option(
            "--u-min",
            type=float,
            default=default.u_min,
            help="Smallest u on the grid",
        )(command)
        return command

    return decorate


def json_option(command: Callable) -> Callable:
    return click.option(
        "--json",
        "json_mode",
        is_flag=True,
        help="Print the result as JSON (schema 1)",
    )(command)


def triple_options(command: Callable) -> Callable:
    for name in ("--phi3", "--phi2", "--phi1"):
        command = click.option(
            name, required=True, help=young_help
        )(command)
    return command
