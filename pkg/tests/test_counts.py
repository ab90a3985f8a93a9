# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Tests for packed-matrix shells and counting series."""

import pytest

from src.algebra.counts import (
    GENERATOR_TABLE,
    PACK_TABLE,
    PRIMITIVE_TABLE,
    QN_TABLE,
    IntSeries,
    count_pack,
    count_qn,
    enumerate_pack,
    euler_generators,
    generator_counts,
    indecomposable_counts,
    primitive_dims,
)
from src.errors import ResourceGuardError
from src.extensions import guards
from src.models.matrices import EMPTY, PackedMatrix


def test_enumerate_pack_weight_two():
    """Test the weight-two shell in canonical order."""
    assert enumerate_pack(2) == [
        PackedMatrix([[2]]),
        PackedMatrix([[1, 1]]),
        PackedMatrix([[1], [1]]),
        PackedMatrix([[0, 1], [1, 0]]),
        PackedMatrix([[1, 0], [0, 1]]),
    ]
    assert enumerate_pack(0) == [EMPTY]


def test_enumerate_pack_shell_properties():
    """Test that the weight-three shell is distinct, packed and sorted."""
    shell = enumerate_pack(3)
    assert len(shell) == 33
    assert len(set(shell)) == 33
    assert all(m.is_packed() and m.weight == 3 for m in shell)
    assert shell == sorted(shell)


def test_count_pack_matches_table():
    """Test shell sizes against the stored table."""
    assert count_pack(4) == PACK_TABLE.truncate(4)
    assert count_pack(4).values == (1, 1, 5, 33, 281)


def test_count_pack_at_the_default_guard():
    """Test the shell sizes by enumeration up to weight six."""
    series = count_pack(6)
    assert series.values[5:] == (2961, 37277)
    assert series == PACK_TABLE.truncate(6)


def test_primitive_and_generator_counts():
    """Test series inversion and the Euler transform."""
    assert primitive_dims(4) == PRIMITIVE_TABLE.truncate(4)
    assert primitive_dims(4).values == (1, 4, 24, 204)
    assert indecomposable_counts(3).values == (1, 4, 24)
    assert generator_counts(4) == GENERATOR_TABLE.truncate(4)
    assert generator_counts(3).values == (1, 4, 28)


def test_euler_generators_of_geometric_series():
    """Test that 1/(1-t) has a single generator."""
    assert euler_generators([1, 1, 1, 1, 1], 4) == [0, 1, 0, 0, 0]


def test_count_qn():
    """Test q_n against the stored table."""
    assert [count_qn(n) for n in range(1, 5)] == [QN_TABLE[n] for n in range(1, 5)]
    assert count_qn(2) == 4


def test_int_series():
    """Test indexing, truncation and TSV output."""
    series = IntSeries(1, (1, 4, 24))
    assert series[2] == 4
    assert list(series.indices()) == [1, 2, 3]
    assert series.truncate(2) == IntSeries(1, (1, 4))
    assert series.truncate(0) == IntSeries(1, ())
    assert count_pack(2).to_tsv() == "0\t1\n1\t1\n2\t5"


def test_enumeration_guard():
    """Test the weight guard on shell enumeration."""
    guards.set_limit("max_weight", 3)
    with pytest.raises(ResourceGuardError, match="--max-weight"):
        enumerate_pack(4)
