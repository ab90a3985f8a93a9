# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Run the identity suites."""

import click

from src.verify import SUITES, IdentityResult, run_suite


def _report(result: IdentityResult) -> None:
    click.echo(result.summary())


@click.command()
@click.option(
    "--suite",
    type=click.Choice([*SUITES, "all"]),
    default="all",
    show_default=True,
)
@click.option(
    "--max-weight",
    "max_weight",
    type=click.IntRange(min=0),
    default=3,
    show_default=True,
    help="Suite weight; must not exceed the group-level --max-weight guard.",
)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for random inputs.")
def verify(suite: str, max_weight: int, seed: int) -> None:
    """Check algebraic identities up to a weight; exit 1 on the first counterexample."""
    for name in SUITES if suite == "all" else (suite,):
        run_suite(name, max_weight, seed, report=_report)
