# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Tests for the text parsers."""

from fractions import Fraction

import pytest

from src.algebra.counts import enumerate_pack
from src.commands.parsing import (
    parse_any_key,
    parse_composition,
    parse_lincomb,
    parse_matrix,
    parse_packed,
    parse_permutation,
    parse_rational,
)
from src.errors import ParseError
from src.models.exactlin import LinComb, to_text
from src.models.matrices import EMPTY, Composition, Matrix, PackedMatrix
from src.models.surjections import Permutation


def test_parse_rational():
    """Test integers and fractions."""
    assert parse_rational("3") == 3
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational(" 4/6 ") == Fraction(2, 3)
    with pytest.raises(ParseError, match="zero denominator"):
        parse_rational("1/0")
    with pytest.raises(ParseError):
        parse_rational("x")


def test_parse_matrix():
    """Test packed, unpacked and empty matrices."""
    assert parse_matrix("[1 0;0 2]") == PackedMatrix([[1, 0], [0, 2]])
    assert isinstance(parse_matrix("[1 0;0 2]"), PackedMatrix)
    assert type(parse_matrix("[1 0]")) is Matrix
    assert parse_matrix("[]") == EMPTY
    assert parse_packed(" [ 1  2 ] ") == PackedMatrix([[1, 2]])


@pytest.mark.parametrize(
    "text, message",
    [
        ("[1 0;2]", "ragged row at row 2"),
        ("[1 a]", "invalid entry 'a' at row 1"),
        ("[1 -1]", "negative entry -1 at row 1"),
        ("[;1]", "empty row at row 1"),
        ("1 2", "must be written"),
    ],
)
def test_parse_matrix_errors(text, message):
    """Test that malformed matrices name the offending row."""
    with pytest.raises(ParseError, match=message):
        parse_matrix(text)


def test_parse_packed_rejects_zero_lines():
    """Test that H_Pack inputs must be packed."""
    with pytest.raises(ParseError, match="zero row or column"):
        parse_packed("[1 0]")


def test_parse_words():
    """Test compositions, permutations and key dispatch."""
    assert parse_composition("(1, 2,1)") == Composition((1, 2, 1))
    assert parse_composition("()") == Composition()
    assert parse_permutation("(3,1,2)") == Permutation((3, 1, 2))
    assert parse_any_key("(2)") == Composition((2,))
    assert parse_any_key("[2]") == PackedMatrix([[2]])
    with pytest.raises(ParseError):
        parse_composition("(1,0)")
    with pytest.raises(ParseError):
        parse_permutation("(2,2)")
    with pytest.raises(ParseError):
        parse_composition("(1,x)")


def test_parse_lincomb():
    """Test signs, coefficients and zero."""
    value = parse_lincomb("2*[1 0;0 1] - 1/2*[2] + [2]")
    assert value == LinComb({PackedMatrix([[1, 0], [0, 1]]): 2, PackedMatrix([[2]]): Fraction(1, 2)})
    assert parse_lincomb("0") == 0
    assert parse_lincomb("-[1]") == LinComb.monomial(PackedMatrix([[1]]), -1)
    assert parse_lincomb("(1,2) + 3*(2)", parse_composition) == LinComb(
        {Composition((1, 2)): 1, Composition((2,)): 3}
    )


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "empty input"),
        ("[1] [2]", "missing \\+ or -"),
        ("abc", "unexpected 'abc' at position 0"),
        ("[1] + ?", "unexpected"),
        ("1/0*[1]", "invalid coefficient '1/0'"),
        ("[1] - 3/0*[2]", "invalid coefficient"),
    ],
)
def test_parse_lincomb_errors(text, message):
    """Test malformed sums."""
    with pytest.raises(ParseError, match=message):
        parse_lincomb(text)


def test_text_round_trip():
    """Test that canonical text parses back to the same element."""
    for n in range(4):
        shell = enumerate_pack(n)
        value = LinComb((m, Fraction(i - 2, i + 1)) for i, m in enumerate(shell))
        assert parse_lincomb(to_text(value)) == value


def test_zero_denominator_coefficient_position():
    """Test that a zero-denominator coefficient reports where it starts."""
    with pytest.raises(ParseError) as info:
        parse_lincomb("[1] + 2/0*[2]")
    assert info.value.token == "2/0"
    assert info.value.position == 6
