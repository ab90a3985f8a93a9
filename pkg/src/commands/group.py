# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Top-level command group: guard flags and error-to-exit-code mapping."""

import logging

import click

from src.errors import PackedHopfError, VerificationFailure
from src.extensions import GUARD_FLAGS, guards

logger = logging.getLogger(__name__)

GUARD_HELP = {
    "max_weight": "Largest weight for packed-matrix shells.",
    "black_max_weight": "Largest weight for ▲ splittings and the antipode.",
    "qsym_delta_max_degree": "Largest degree for δ on QSym.",
    "theta_max_length": "Longest composition for θ and q_n.",
    "kxy_max_part": "Largest part accepted by K_{x,y}.",
    "delta_max_dim": "Largest row or column count accepted by δ on H_Pack.",
}


class PackedHopfGroup(click.Group):
    """Click group that turns engine errors into exit codes."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except PackedHopfError as exc:
            logger.debug("command failed", exc_info=exc)
            if isinstance(exc, VerificationFailure):
                click.echo(exc.counterexample.model_dump_json(indent=2))
            click.echo(f"error: {exc}", err=True)
            raise click.exceptions.Exit(exc.exit_code) from exc


def guard_options() -> list[click.Option]:
    return [
        click.Option(
            [flag, name],
            type=click.IntRange(min=0),
            default=None,
            help=GUARD_HELP[name],
        )
        for name, flag in GUARD_FLAGS.items()
    ]


def apply_guards(**limits: int | None) -> None:
    """Group callback: push flag values into the guards."""
    for name, value in limits.items():
        if value is not None:
            guards.set_limit(name, value)


def build_group(commands: list[click.Command]) -> PackedHopfGroup:
    group = PackedHopfGroup(
        name="pmh",
        help="Exact computations in the Hopf algebra of packed matrices.",
        params=guard_options(),
        callback=apply_guards,
    )
    for command in commands:
        group.add_command(command)
    return group
