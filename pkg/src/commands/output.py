# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Text and JSON rendering of command results."""

import json
from fractions import Fraction
from typing import Any

import click
from pydantic import BaseModel
from sympy import Poly

from src.models.exactlin import LinComb, LinCombDocument, format_rational, to_text
from src.models.polynomials import coefficients, format_polynomial

json_option = click.option("--json", "as_json", is_flag=True, help="Print JSON instead of text.")


class ScalarDocument(BaseModel):
    value: str


class PolynomialDocument(BaseModel):
    """Coefficients indexed by degree, as "p/q" strings."""

    coefficients: list[str]
    text: str


def render(value: Any, as_json: bool = False) -> str:
    if isinstance(value, LinComb):
        if as_json:
            return LinCombDocument.from_lincomb(value).model_dump_json()
        return to_text(value)
    if isinstance(value, Poly):
        if as_json:
            return PolynomialDocument(
                coefficients=[format_rational(c) for c in coefficients(value)],
                text=format_polynomial(value),
            ).model_dump_json()
        return format_polynomial(value)
    if isinstance(value, (Fraction, int)):
        if as_json:
            return ScalarDocument(value=format_rational(Fraction(value))).model_dump_json()
        return format_rational(Fraction(value))
    if isinstance(value, BaseModel):
        return value.model_dump_json()
    return json.dumps(value) if as_json else str(value)


def emit(value: Any, as_json: bool = False) -> None:
    click.echo(render(value, as_json))
