# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Tests for surjection enumerators."""

from math import comb

import pytest

from src.errors import MatrixShapeError
from src.models.surjections import (
    AdmPair,
    Permutation,
    Surjection,
    adm_triples,
    check_hoffman_identity,
    enumerate_adm,
    enumerate_inc,
    enumerate_qsh,
    enumerate_sh,
    hoffman_sides,
    surj_factorial,
)


def words(items):
    return [s.word for s in items]


def test_quasi_shuffles():
    """Test the listed (k,l)-quasi-shuffles."""
    assert words(enumerate_qsh(1, 1)) == [(1, 1), (1, 2), (2, 1)]
    assert words(enumerate_qsh(2, 1)) == [(1, 2, 1), (1, 2, 2), (1, 2, 3), (1, 3, 2), (2, 3, 1)]
    assert len(enumerate_qsh(2, 2)) == 13
    assert (3, 4, 1, 2) in words(enumerate_qsh(2, 2))


def test_shuffles():
    """Test shuffles and their count."""
    assert words(enumerate_sh(2, 2)) == [
        (1, 2, 3, 4),
        (1, 3, 2, 4),
        (1, 4, 2, 3),
        (2, 3, 1, 4),
        (2, 4, 1, 3),
        (3, 4, 1, 2),
    ]
    assert words(enumerate_sh(0, 3)) == [(1, 2, 3)]
    assert all(len(enumerate_sh(k, l)) == comb(k + l, k) for k in range(5) for l in range(5))
    assert all(isinstance(s, Permutation) for s in enumerate_sh(1, 2))


def test_increasing_surjections():
    """Test inc(k)."""
    assert words(enumerate_inc(3)) == [(1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3)]
    assert words(enumerate_inc(1)) == [(1,)]
    assert words(enumerate_inc(0)) == [()]
    assert len(enumerate_inc(4)) == 8


def test_admissible_pairs():
    """Test Adm(k) for small k."""
    assert enumerate_adm(0) == [AdmPair(Surjection(()), Surjection(()))]
    assert enumerate_adm(1) == [AdmPair(Surjection((1,)), Surjection((1,)))]
    two = {(p.first.word, p.second.word) for p in enumerate_adm(2)}
    assert two == {((1, 1), (1, 2)), ((1, 2), (1, 1)), ((1, 2), (1, 2)), ((1, 2), (2, 1))}
    pairs = enumerate_adm(3)
    assert len(pairs) == len(set(pairs))


def test_factorial():
    """Test σ! as a product of fiber factorials."""
    assert surj_factorial(Surjection((1, 1, 1))) == 6
    assert surj_factorial(Surjection((1, 2, 3))) == 1
    assert surj_factorial(Surjection((1, 1, 2))) == 2


def test_hoffman_identity():
    """Test both sides of the inc/qsh identity."""
    left, right = hoffman_sides(1, 1)
    assert left == right
    assert {s.word for s in left} == {(1, 1), (1, 2), (2, 1)}
    assert all(check_hoffman_identity(k, l) for k in range(4) for l in range(4))


def test_surjection_algebra():
    """Test composition, tensor and inverse."""
    sigma = Permutation((2, 3, 1))
    assert sigma.compose(sigma.inverse()) == Permutation.identity(3)
    assert Surjection((1, 2, 1)).tensor(Surjection((1,))) == Surjection((1, 2, 1, 3))
    assert Surjection((1, 1)).compose(Surjection((2, 1))) == Surjection((1, 1))
    with pytest.raises(MatrixShapeError):
        Surjection((1, 3))
    with pytest.raises(MatrixShapeError):
        Permutation((1, 1))


@pytest.mark.parametrize("k", range(5))
def test_adm_triples_coassociative(k):
    """Test that both ways of splitting Adm twice give the same word triples once each."""
    left = adm_triples(k, "left")
    assert left == adm_triples(k, "right")
    assert set(left.values()) == {1}


def test_adm_triples_small():
    """Test the triple count on two letters and the side check."""
    assert sum(adm_triples(2, "left").values()) == 13
    assert ((1, 1), (1, 1), (1, 2)) in adm_triples(2, "right")
    assert ((1, 1), (2, 1), (1, 2)) not in adm_triples(2, "left")
    with pytest.raises(MatrixShapeError, match="unknown side"):
        adm_triples(2, "middle")
