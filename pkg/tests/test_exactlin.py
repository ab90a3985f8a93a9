# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Tests for linear combinations."""

import json
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from src.models.exactlin import (
    LinComb,
    LinCombDocument,
    apply_leg,
    map_tensor,
    pairing,
    split_leg,
    tensor,
    to_text,
)
from src.models.matrices import EMPTY, Composition, PackedMatrix

BASIS = [EMPTY, PackedMatrix([[1]]), PackedMatrix([[2]]), PackedMatrix([[1, 1]])]

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
lincombs = st.lists(st.tuples(st.sampled_from(BASIS), rationals), max_size=4).map(LinComb)


def test_zero_coefficients_dropped():
    """Test that cancelling terms leave nothing behind."""
    a = LinComb([(BASIS[1], 1), (BASIS[1], -1), (BASIS[2], Fraction(1, 2))])
    assert len(a) == 1
    assert a[BASIS[1]] == 0
    assert BASIS[1] not in a


def test_zero_compares_to_int_zero():
    """Test that the empty combination equals 0."""
    assert LinComb.zero() == 0
    assert LinComb.monomial(BASIS[1]) != 0


def test_canonical_text():
    """Test the canonical text form and sign handling."""
    a = LinComb({PackedMatrix([[1, 0], [0, 1]]): 2, PackedMatrix([[2]]): Fraction(-1, 2)})
    assert to_text(a) == "-1/2*[2] + 2*[1 0;0 1]"
    assert to_text(LinComb.zero()) == "0"
    assert to_text(LinComb.monomial(EMPTY, -1)) == "-[]"


def test_tensor_keys_are_tuples():
    """Test tensor products of combinations."""
    a = LinComb({BASIS[1]: 2})
    b = LinComb({BASIS[2]: 3, EMPTY: 1})
    t = tensor(a, b)
    assert t == LinComb({(BASIS[1], BASIS[2]): 6, (BASIS[1], EMPTY): 2})
    assert to_text(tensor(BASIS[1], EMPTY)) == "[1] ⊗ []"


def test_leg_helpers():
    """Test applying maps to one leg or every leg."""
    t = tensor(Composition((1,)), Composition((2,)))
    doubled = apply_leg(t, 1, lambda c: LinComb({c.concat(c): 1}))
    assert doubled == tensor(Composition((1,)), Composition((2, 2)))
    spliced = split_leg(t, 0, lambda c: tensor(c, Composition()))
    assert spliced == LinComb({(Composition((1,)), Composition(), Composition((2,))): 1})
    both = map_tensor(t, lambda c: LinComb({c: 2}))
    assert both == t * 4


def test_pairing():
    """Test the delta pairing."""
    a = LinComb({BASIS[1]: 2, BASIS[2]: 3})
    b = LinComb({BASIS[2]: Fraction(1, 3), BASIS[3]: 7})
    assert pairing(a, b) == 1
    assert pairing(BASIS[1], BASIS[1]) == 1
    assert pairing(BASIS[1], BASIS[2]) == 0


def test_json_document():
    """Test the JSON interchange form."""
    a = LinComb({PackedMatrix([[1, 0], [0, 2]]): Fraction(3, 4)})
    document = json.loads(LinCombDocument.from_lincomb(a).model_dump_json())
    assert document == {"terms": [{"coeff": "3/4", "key": [[1, 0], [0, 2]]}]}


@settings(max_examples=40, deadline=None)
@given(lincombs, lincombs, rationals)
def test_vector_space_laws(a, b, s):
    """Test addition and scaling laws on random combinations."""
    assert a + b == b + a
    assert (a + b) * s == a * s + b * s
    assert a - a == 0
    assert pairing(a, b) == pairing(b, a)
