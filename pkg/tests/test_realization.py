# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Tests for the polynomial realization and grid files."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.algebra.hopfpack import quasi_shuffle, second_coproduct
from src.algebra.morphisms import theta_q
from src.algebra.realization import (
    Grid,
    GridDocument,
    Monomial2,
    block_diag_grid,
    classify,
    evaluate,
    evaluate_lincomb,
    evaluate_qsym,
    kronecker_grid,
    phi_formal,
    transpose_grid,
)
from src.errors import MatrixShapeError, ParseError
from src.models.exactlin import LinComb
from src.models.matrices import EMPTY, Composition, PackedMatrix, transpose

GRID = Grid.of([[1, 2], [3, 4]])


def test_phi_formal_monomials():
    """Test Φ_M as a sum of monomials over increasing index choices."""
    ones = phi_formal(PackedMatrix([[1]]), 2, 1)
    assert ones == LinComb({Monomial2((((1, 1), 1),)): 1, Monomial2((((2, 1), 1),)): 1})
    assert phi_formal(PackedMatrix([[1, 0], [0, 1]]), 1, 2) == 0
    assert phi_formal(EMPTY, 3, 3) == LinComb.monomial(Monomial2())
    assert len(phi_formal(PackedMatrix([[1, 1]]), 3, 3)) == 9


def test_classify():
    """Test reading the packed matrix off a monomial."""
    monomial = Monomial2((((2, 3), 1), ((2, 5), 2)))
    assert classify(monomial) == PackedMatrix([[1, 2]])
    assert classify(Monomial2((((1, 4), 1), ((3, 2), 1)))) == PackedMatrix([[0, 1], [1, 0]])
    assert str(monomial) == "t_{2,3}*t_{2,5}^2"
    with pytest.raises(MatrixShapeError):
        Monomial2((((1, 1), 0),))


def test_evaluate_on_grid():
    """Test Φ_M at t = [1 2;3 4]."""
    assert evaluate(PackedMatrix([[1]]), GRID) == 10
    assert evaluate(PackedMatrix([[1, 0], [0, 1]]), GRID) == 4
    assert evaluate(PackedMatrix([[0, 1], [1, 0]]), GRID) == 6
    assert evaluate(PackedMatrix([[1, 1]]), GRID) == 14
    assert evaluate(PackedMatrix([[1], [1]]), GRID) == 11
    assert evaluate(PackedMatrix([[2]]), GRID) == 30
    assert evaluate(EMPTY, GRID) == 1


def test_evaluation_is_multiplicative():
    """Test Φ_{[1]}² = Φ of [1] ⧆ [1]."""
    one = PackedMatrix([[1]])
    assert evaluate_lincomb(quasi_shuffle(one, one), GRID) == 100
    assert evaluate_lincomb(LinComb.zero(), GRID) == 0
    assert evaluate_lincomb(EMPTY, GRID) == 1


def test_kronecker_grid_splits_delta():
    """Test Φ_M on a Kronecker grid against δ(M)."""
    u = Grid.of([[1, 2]])
    v = Grid.of([[1], [1]])
    g = kronecker_grid(u, v)
    assert g == Grid.of([[1, 2], [1, 2]])
    for m in (PackedMatrix([[1, 1]]), PackedMatrix([[1]]), PackedMatrix([[2]])):
        split = sum(
            (c * evaluate(a, u) * evaluate(b, v) for (a, b), c in second_coproduct(m).items()),
            Fraction(0),
        )
        assert evaluate(m, g) == split


def test_grid_helpers():
    """Test block-diagonal and transposed grids."""
    joined = block_diag_grid(Grid.of([[1]]), Grid.of([[2]]))
    assert joined == Grid.of([[1, 0], [0, 2]])
    m = PackedMatrix([[1, 2], [0, 1]])
    assert evaluate(transpose(m), transpose_grid(GRID)) == evaluate(m, GRID)
    assert str(Grid.of([[1, Fraction(1, 2)]])) == "[1 1/2]"
    with pytest.raises(MatrixShapeError):
        Grid.of([])


def test_grid_document():
    """Test grid file parsing and its errors."""
    document = GridDocument.model_validate_json('{"rows": 1, "cols": 2, "values": [[1, "1/2"]]}')
    assert document.to_grid() == Grid.of([[1, Fraction(1, 2)]])
    assert GridDocument.from_grid(GRID).values == [["1", "2"], ["3", "4"]]
    with pytest.raises(ValidationError, match="ragged row at row 2"):
        GridDocument(rows=2, cols=2, values=[["1", "2"], ["3"]])
    with pytest.raises(ValidationError):
        GridDocument(rows=0, cols=1, values=[])
    with pytest.raises(ParseError, match="row 1, column 2"):
        GridDocument(rows=1, cols=2, values=[["1", "x"]]).to_grid()


def test_theta_reads_the_grid_row_by_row():
    """Test Φ(θ(ν)) against φ_ν on the cells 1, 2, 3, 4."""
    assert evaluate_qsym(Composition((1,)), GRID) == 10
    assert evaluate_qsym(Composition((1, 1)), GRID) == 35
    assert evaluate_qsym(Composition((1, 2)), GRID) == 127
    assert evaluate_qsym(LinComb({Composition(): 2}), GRID) == 2
    for parts in ((1, 1), (1, 2), (2, 1), (1, 1, 1)):
        c = Composition(parts)
        assert evaluate_lincomb(theta_q(c), GRID) == evaluate_qsym(c, GRID)
