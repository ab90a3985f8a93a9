# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Morphisms out of H_Pack, NSym and QSym, and grid signatures."""

from pathlib import Path

import click
from pydantic import ValidationError

from src.algebra.morphisms import (
    K_xy,
    RationalPair,
    Theta,
    kappa_xy,
    phi_hpack,
    theta_q,
    transpose_morphism,
    upsilon,
)
from src.algebra.realization import GridDocument, evaluate_lincomb
from src.commands.output import emit, json_option
from src.commands.parsing import parse_composition, parse_lincomb, parse_packed, parse_rational
from src.errors import ParseError, UsageError

# name -> (map, input key parser, needs a point)
MORPHISMS = {
    "theta-big": (Theta, parse_packed, False),
    "theta": (theta_q, parse_composition, False),
    "kappa-xy": (kappa_xy, parse_packed, True),
    "k-xy": (K_xy, parse_composition, True),
    "upsilon": (upsilon, parse_packed, False),
    "phi": (phi_hpack, parse_packed, False),
    "transpose": (transpose_morphism, parse_packed, False),
}


@click.command()
@click.option("--name", type=click.Choice(list(MORPHISMS)), required=True)
@click.option("--x", "x", default=None, help="Rational parameter x, e.g. 1/2.")
@click.option("--y", "y", default=None, help="Rational parameter y.")
@click.argument("element")
@json_option
def morph(name: str, x: str | None, y: str | None, element: str, as_json: bool) -> None:
    """Apply a named morphism."""
    fn, parse_key, needs_point = MORPHISMS[name]
    value = parse_lincomb(element, parse_key)
    if needs_point:
        if x is None or y is None:
            raise UsageError(f"{name} needs both --x and --y")
        emit(fn(RationalPair(parse_rational(x), parse_rational(y)), value), as_json)
        return
    if x is not None or y is not None:
        raise UsageError(f"{name} takes no --x/--y parameters")
    emit(fn(value), as_json)


@click.command()
@click.option("--matrix", "matrix", required=True, help="Element of H_Pack, e.g. \"[1 1]\".")
@click.option(
    "--grid",
    "grid_file",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="JSON grid file.",
)
@json_option
def sig(matrix: str, grid_file: Path, as_json: bool) -> None:
    """Evaluate the realization of an element on a rational grid."""
    try:
        text = grid_file.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"grid file {grid_file} is not UTF-8 text", token=str(grid_file)) from exc
    try:
        document = GridDocument.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ParseError(
            f"invalid grid file {grid_file}: {first['msg']}",
            token=str(first.get("loc", "")),
        ) from exc
    emit(evaluate_lincomb(parse_lincomb(matrix), document.to_grid()), as_json)
