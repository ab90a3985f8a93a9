# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Univariate rational polynomials in X, backed by sympy."""

from fractions import Fraction

import sympy
from sympy import Poly, QQ

X = sympy.Symbol("X")

Polynomial1 = Poly


def to_sympy(value: int | Fraction) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def constant(value: int | Fraction) -> Poly:
    return Poly(to_sympy(value), X, domain=QQ)


def zero() -> Poly:
    return constant(0)


def coefficients(poly: Poly) -> list[Fraction]:
    """Coefficients indexed by degree."""
    return [from_sympy(c) for c in reversed(poly.all_coeffs())]


def format_polynomial(poly: Poly) -> str:
    """Text form such as "1/2*X^2 - 1/2*X"."""
    terms = [(deg, from_sympy(c)) for (deg,), c in poly.terms() if c != 0]
    if not terms:
        return "0"
    parts = []
    for index, (deg, coeff) in enumerate(terms):
        magnitude = abs(coeff)
        monomial = "" if deg == 0 else ("X" if deg == 1 else f"X^{deg}")
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if index == 0:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"{'-' if coeff < 0 else '+'} {body}")
    return " ".join(parts)


def scaled(poly: Poly, coeff: int | Fraction) -> Poly:
    return poly * constant(coeff)
