from __future__ import annotations

import sys
from dataclasses import replace
from typing import Optional

import click

from ... import __version__
from ...fuzz import (
    CampaignConfigLoader,
    parse_checks,
    render_report,
    run_campaign,
)
from ...logging import setup_logging
from ...types import ALL_CHECKS, CampaignConfig
from .. import cli, console
from ..branding import BannerRenderer, StatusPrinter
from ..formatting import RichCommand
from ..output import EXIT_FAILURE, input_guard
from ..renderers import CampaignTableRenderer
from .options import json_option

_banner = BannerRenderer(console, __version__)
_status = StatusPrinter(console)
_config_loader = CampaignConfigLoader()
_campaign_renderer = CampaignTableRenderer(console)


@cli.command(cls=RichCommand)
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Campaign config (.yaml or .json); flags override it",
)
@click.option("--seed", type=int, default=None, help="64-bit seed")
@click.option("--cases", type=int, default=None, help="Cases per check")
@click.option(
    "--checks",
    default=None,
    help=f"Comma-separated subset of: {', '.join(ALL_CHECKS)}",
)
@click.option(
    "--threads",
    type=int,
    default=None,
    help="Worker threads, capped by ORLICZ_KIT_THREADS",
)
@click.option(
    "--out",
    "report_path",
    default=None,
    help="Write the campaign report JSON here",
)
@click.option(
    "--corpus",
    "corpus_dir",
    default=None,
    help="Write one JSON file per counterexample here",
)
@json_option
def fuzz(
    config_path: Optional[str],
    seed: Optional[int],
    cases: Optional[int],
    checks: Optional[str],
    threads: Optional[int],
    report_path: Optional[str],
    corpus_dir: Optional[str],
    json_mode: bool,
):
    """
    Run a seeded campaign of checks over generated cases.

    The report is byte-identical for a fixed config, whatever the
    thread count. Failing cases are re-verified at a tighter tolerance
    before they count.

    Examples:
      orlicz-kit fuzz --seed 1 --cases 100
      orlicz-kit fuzz --seed 7 --cases 1000 --checks holder,witness --corpus corpus/
      orlicz-kit fuzz --config campaign.yaml --out report.json --threads 4
    """
    setup_logging(level="ERROR" if json_mode else "WARNING")
    _banner.render("mini", quiet=json_mode)

    with input_guard(_status, json_mode):
        config = (
            _config_loader.load_from_file(config_path)
            if config_path
            else CampaignConfig()
        )
        overrides = {
            key: value
            for key, value in (
                ("seed", seed),
                ("cases", cases),
                ("threads", threads),
            )
            if value is not None
        }
        if checks is not None:
            overrides["checks"] = parse_checks(checks)
        config = replace(config, **overrides)

        if not json_mode:
            _status.print(
                f"Running {len(set(config.checks))} checks,"
                f" {config.cases} cases each",
                "loading",
            )
        report = run_campaign(
            config, report_path=report_path, corpus_dir=corpus_dir
        )

    if json_mode:
        click.echo(render_report(report), nl=False)
    else:
        console.print()
        _campaign_renderer.render(report)
        if report_path:
            _status.print(
                f"Report written to [cyan]{report_path}[/cyan]",
                "success",
            )
        if report.counterexamples and corpus_dir:
            _status.print(
                f"{len(report.counterexamples)} counterexamples in"
                f" [cyan]{corpus_dir}[/cyan]",
                "warning",
            )
        _status.verdict(
            report.passed,
            "All checks passed",
            f"{report.failures} failing cases",
        )
    if not report.passed:
        sys.exit(EXIT_FAILURE)
