# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Products, coproducts, antipode and pairing on H_Pack."""

import click

from src.algebra.hopfpack import (
    antipode,
    coproduct_black,
    coproduct_black_res,
    deconcat,
    quasi_shuffle,
    searrow,
    second_coproduct,
    shuffle,
)
from src.commands.output import emit, json_option
from src.commands.parsing import parse_any_key, parse_lincomb
from src.models.exactlin import pairing

PRODUCTS = {"searrow": searrow, "qsh": quasi_shuffle, "shuffle": shuffle}
COPRODUCTS = {
    "black": coproduct_black,
    "black-res": coproduct_black_res,
    "deconcat": deconcat,
    "delta": second_coproduct,
}


@click.command()
@click.option("--op", type=click.Choice(list(PRODUCTS)), default="qsh", show_default=True)
@click.argument("left")
@click.argument("right")
@json_option
def mul(op: str, left: str, right: str, as_json: bool) -> None:
    """Multiply two elements of H_Pack."""
    emit(PRODUCTS[op](parse_lincomb(left), parse_lincomb(right)), as_json)


@click.command()
@click.option("--op", type=click.Choice(list(COPRODUCTS)), default="black", show_default=True)
@click.argument("element")
@json_option
def cop(op: str, element: str, as_json: bool) -> None:
    """Apply a coproduct."""
    emit(parse_lincomb(element).apply(COPRODUCTS[op]), as_json)


@click.command("antipode")
@click.argument("element")
@json_option
def antipode_command(element: str, as_json: bool) -> None:
    """Antipode of (H_Pack, ↘, ▲)."""
    emit(antipode(parse_lincomb(element)), as_json)


@click.command()
@click.argument("left")
@click.argument("right")
@json_option
def pair(left: str, right: str, as_json: bool) -> None:
    """Delta pairing of two elements written on the same basis."""
    emit(pairing(parse_lincomb(left, parse_any_key), parse_lincomb(right, parse_any_key)), as_json)
