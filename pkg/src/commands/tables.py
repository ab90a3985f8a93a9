# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Counting tables and shell enumeration."""

import click
from pydantic import BaseModel

from src.algebra.counts import (
    IntSeries,
    count_pack,
    count_qn,
    enumerate_pack,
    generator_counts,
    primitive_dims,
)
from src.commands.output import json_option


class SeriesDocument(BaseModel):
    seq: str
    start: int
    values: list[int]


class ShellDocument(BaseModel):
    weight: int
    matrices: list[list[list[int]]]


def _qn_series(upto: int) -> IntSeries:
    return IntSeries(1, tuple(count_qn(n) for n in range(1, upto + 1)))


SEQUENCES = {
    "pack": count_pack,
    "prim": primitive_dims,
    "gen": generator_counts,
    "qn": _qn_series,
}


@click.command()
@click.option("--seq", type=click.Choice(list(SEQUENCES)), required=True)
@click.option("--upto", type=click.IntRange(min=0), required=True)
@json_option
def count(seq: str, upto: int, as_json: bool) -> None:
    """Print a counting sequence as "n<TAB>value" lines."""
    series = SEQUENCES[seq](upto)
    if as_json:
        click.echo(
            SeriesDocument(seq=seq, start=series.start, values=list(series.values)).model_dump_json()
        )
    elif series.values:
        click.echo(series.to_tsv())


@click.command("enum")
@click.option("--weight", type=click.IntRange(min=0), required=True)
@json_option
def enum(weight: int, as_json: bool) -> None:
    """List the packed matrices of a weight in canonical order."""
    shell = enumerate_pack(weight)
    if as_json:
        matrices = [m.to_json() for m in shell]
        click.echo(ShellDocument(weight=weight, matrices=matrices).model_dump_json())
        return
    for matrix in shell:
        click.echo(str(matrix))
