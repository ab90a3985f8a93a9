# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Text parsers for matrices, compositions, permutations and linear combinations."""

import re
from collections.abc import Callable
from fractions import Fraction
from typing import Any

from src.errors import MatrixShapeError, ParseError
from src.models.exactlin import Accumulator, LinComb
from src.models.matrices import EMPTY, Composition, Matrix, PackedMatrix
from src.models.surjections import Permutation

INTEGER = re.compile(r"-?\d+")
RATIONAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")
TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+(?:/\d+)?)\s*\*\s*)?(?P<key>\[[^\]]*\]|\([^)]*\))\s*"
)


def parse_rational(text: str) -> Fraction:
    """"p/q" or an integer."""
    match = RATIONAL.fullmatch(text)
    if not match:
        raise ParseError(f"invalid rational {text!r}", token=text, position=0)
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise ParseError(f"zero denominator in {text!r}", token=text, position=match.start(2))
    return Fraction(int(numerator), int(denominator or 1))


def parse_matrix(text: str, offset: int = 0) -> Matrix:
    """"[a b;c d]" or "[]"; returns a PackedMatrix when no row or column is zero."""
    body = text.strip()
    start = offset + text.find(body[:1]) if body else offset
    if not body.startswith("[") or not body.endswith("]"):
        raise ParseError(f"matrix must be written [a b;c d], got {text!r}", token=text, position=start)
    inner = body[1:-1]
    if not inner.strip():
        return EMPTY
    rows = []
    position = start + 1
    for r, chunk in enumerate(inner.split(";"), start=1):
        row = []
        for match in re.finditer(r"\S+", chunk):
            token = match.group()
            where = position + match.start()
            if not INTEGER.fullmatch(token):
                raise ParseError(f"invalid entry {token!r} at row {r}", token=token, position=where)
            if token.startswith("-"):
                raise ParseError(f"negative entry {token} at row {r}", token=token, position=where)
            row.append(int(token))
        if not row:
            raise ParseError(f"empty row at row {r}", token=chunk, position=position)
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"ragged row at row {r}", token=chunk.strip(), position=position)
        rows.append(tuple(row))
        position += len(chunk) + 1
    matrix = Matrix(rows)
    if matrix.is_packed():
        return PackedMatrix._trusted(matrix.entries)
    return matrix


def parse_packed(text: str, offset: int = 0) -> PackedMatrix:
    matrix = parse_matrix(text, offset)
    if not isinstance(matrix, PackedMatrix):
        raise ParseError(f"{matrix} has a zero row or column", token=text.strip(), position=offset)
    return matrix


def _parse_word(text: str, offset: int, what: str) -> tuple[int, ...]:
    body = text.strip()
    if not body.startswith("(") or not body.endswith(")"):
        raise ParseError(f"{what} must be written (a,b,c), got {text!r}", token=text, position=offset)
    inner = body[1:-1].strip()
    if not inner:
        return ()
    parts = []
    for token in inner.split(","):
        token = token.strip()
        if not INTEGER.fullmatch(token):
            raise ParseError(f"invalid {what} part {token!r}", token=token, position=offset)
        parts.append(int(token))
    return tuple(parts)


def parse_composition(text: str, offset: int = 0) -> Composition:
    """"(a,b,c)" with positive parts; "()" is the empty composition."""
    try:
        return Composition(_parse_word(text, offset, "composition"))
    except MatrixShapeError as exc:
        raise ParseError(str(exc), token=text.strip(), position=offset) from exc


def parse_permutation(text: str, offset: int = 0) -> Permutation:
    """One-line word "(3,1,2)"."""
    try:
        return Permutation(_parse_word(text, offset, "permutation"))
    except MatrixShapeError as exc:
        raise ParseError(str(exc), token=text.strip(), position=offset) from exc


def parse_lincomb(text: str, parse_key: Callable[[str, int], Any] = parse_packed) -> LinComb:
    """Sums such as "2*[1 0;0 1] - 1/2*[2]"; "0" is the zero element."""
    if text.strip() == "0":
        return LinComb.zero()
    acc = Accumulator()
    terms = 0
    position = 0
    while position < len(text):
        match = TERM.match(text, position)
        if not match or match.end() == position:
            token = text[position:].split()[0] if text[position:].split() else text[position:]
            raise ParseError(f"unexpected {token!r} at position {position}", token=token, position=position)
        if terms and match.group("sign") is None:
            raise ParseError(
                f"missing + or - before {match.group('key')!r}",
                token=match.group("key"),
                position=match.start("key"),
            )
        try:
            coeff = Fraction(match.group("coeff") or 1)
        except (ValueError, ZeroDivisionError) as exc:
            token = match.group("coeff")
            raise ParseError(
                f"invalid coefficient {token!r}", token=token, position=match.start("coeff")
            ) from exc
        if match.group("sign") == "-":
            coeff = -coeff
        acc.add_key(parse_key(match.group("key"), match.start("key")), coeff)
        terms += 1
        position = match.end()
    if not terms:
        raise ParseError("empty input", token=text, position=0)
    return acc.result()


def parse_any_key(text: str, offset: int = 0) -> Any:
    """A packed matrix for "[...]", a composition for "(...)"."""
    if text.strip().startswith("("):
        return parse_composition(text, offset)
    return parse_packed(text, offset)
