# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Products, coproducts, counits and antipode on H_Mat and H_Pack."""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any

from src.errors import UsageError
from src.extensions import guards
from src.models.exactlin import (
    Accumulator,
    LinComb,
    as_lincomb,
    bilinear,
    legwise,
)
from src.models.matrices import (
    EMPTY,
    Matrix,
    PackedMatrix,
    block_diag,
    pack,
    sandwich,
    weak_compositions,
)
from src.models.surjections import enumerate_adm, enumerate_qsh, enumerate_sh

logger = logging.getLogger(__name__)

COUNIT_KINDS = ("black", "deconcat", "delta")


def _searrow_basis(a: PackedMatrix, b: PackedMatrix) -> LinComb:
    return LinComb.monomial(block_diag(a, b))


def searrow(a: Any, b: Any) -> LinComb:
    """Block-diagonal product M ↘ M', extended bilinearly."""
    return bilinear(_searrow_basis, a, b)


def searrow_tensors(a: LinComb, b: LinComb) -> LinComb:
    """Leg-wise ↘ of two tensors of equal arity."""
    return legwise(a, b, _searrow_basis)


def _splittings(matrix: Matrix):
    cells = [v for row in matrix.entries for v in row]
    cols = matrix.cols
    for choice in product(*(range(v + 1) for v in cells)):
        left = tuple(tuple(choice[i * cols:(i + 1) * cols]) for i in range(matrix.rows))
        right = tuple(
            tuple(v - c for v, c in zip(row, crow)) for row, crow in zip(matrix.entries, left)
        )
        yield Matrix._trusted(left), Matrix._trusted(right)


@lru_cache(maxsize=4096)
def _black(matrix: PackedMatrix) -> LinComb:
    acc = Accumulator()
    for left, right in _splittings(matrix):
        acc.add_key((pack(left), pack(right)))
    return acc.result()


def coproduct_black(matrix: PackedMatrix) -> LinComb:
    """Sum over entry-wise splittings M = M' + M'' of p(M') ⊗ p(M'')."""
    guards.check("black_max_weight", matrix.weight)
    return _black(matrix)


def coproduct_black_mat(matrix: Matrix) -> LinComb:
    """Un-quotiented splitting coproduct on H_Mat (legs keep the shape of M)."""
    guards.check("black_max_weight", matrix.weight)
    return LinComb((pair, 1) for pair in _splittings(matrix))


def coproduct_black_res(matrix: PackedMatrix) -> LinComb:
    """Terms of ▲(M) whose legs add up to the bigrade of M."""
    return LinComb(
        ((left, right), coeff)
        for (left, right), coeff in coproduct_black(matrix).items()
        if left.rows + right.rows == matrix.rows and left.cols + right.cols == matrix.cols
    )


def block_factorizations(matrix: PackedMatrix) -> list[tuple[PackedMatrix, PackedMatrix]]:
    """All (A, B) with M = A ↘ B, trivial factorizations included."""
    rows, cols = matrix.rows, matrix.cols
    entries = matrix.entries
    result = []
    for r in range(rows + 1):
        for c in range(cols + 1):
            if (r == 0) != (c == 0) or (r == rows) != (c == cols):
                continue
            upper_right = any(entries[i][j] for i in range(r) for j in range(c, cols))
            lower_left = any(entries[i][j] for i in range(r, rows) for j in range(c))
            if upper_right or lower_left:
                continue
            head = PackedMatrix._trusted(tuple(row[:c] for row in entries[:r]))
            tail = PackedMatrix._trusted(tuple(row[c:] for row in entries[r:]))
            result.append((head, tail))
    return result


def deconcat(matrix: PackedMatrix) -> LinComb:
    """Δ(M): sum over block-diagonal factorizations M = M' ↘ M''."""
    return LinComb((pair, 1) for pair in block_factorizations(matrix))


def is_indecomposable(matrix: PackedMatrix) -> bool:
    """True iff M is nonempty and has no nontrivial block factorization."""
    return matrix.rows > 0 and len(block_factorizations(matrix)) == 2


def _sandwich_sum(a: PackedMatrix, b: PackedMatrix, enumerate_maps) -> LinComb:
    joined = block_diag(a, b)
    acc = Accumulator()
    for sigma in enumerate_maps(a.rows, b.rows):
        for tau in enumerate_maps(a.cols, b.cols):
            acc.add_key(sandwich(joined, sigma.word, tau.word))
    return acc.result()


def _quasi_shuffle_basis(a: PackedMatrix, b: PackedMatrix) -> LinComb:
    return _sandwich_sum(a, b, enumerate_qsh)


def _shuffle_basis(a: PackedMatrix, b: PackedMatrix) -> LinComb:
    return _sandwich_sum(a, b, enumerate_sh)


def quasi_shuffle(a: Any, b: Any) -> LinComb:
    """M ⧆ M': row and column quasi-shuffles of M ↘ M'."""
    return bilinear(_quasi_shuffle_basis, a, b)


def quasi_shuffle_tensors(a: LinComb, b: LinComb) -> LinComb:
    return legwise(a, b, _quasi_shuffle_basis)


def shuffle(a: Any, b: Any) -> LinComb:
    """M ⧧ M': row and column shuffles of M ↘ M'."""
    return bilinear(_shuffle_basis, a, b)


def _merge_table(matrix: PackedMatrix, row_words, col_words) -> dict:
    return {
        (rows, cols): sandwich(matrix, rows, cols) for rows in row_words for cols in col_words
    }


@lru_cache(maxsize=16384)
def _delta(matrix: PackedMatrix) -> LinComb:
    row_pairs = [(a.word, b.word) for a, b in enumerate_adm(matrix.rows)]
    col_pairs = [(a.word, b.word) for a, b in enumerate_adm(matrix.cols)]
    # every leg is M merged along one row word and one column word
    merged = _merge_table(
        matrix,
        {word for pair in row_pairs for word in pair},
        {word for pair in col_pairs for word in pair},
    )
    acc = Accumulator()
    for rows_first, rows_second in row_pairs:
        for cols_first, cols_second in col_pairs:
            acc.add_key((merged[rows_first, cols_first], merged[rows_second, cols_second]))
    result = acc.result()
    logger.debug("second coproduct of %s has %d terms", matrix, len(result))
    return result


def second_coproduct(matrix: PackedMatrix) -> LinComb:
    """δ(M) over admissible pairs on rows and columns."""
    guards.check("delta_max_dim", max(matrix.rows, matrix.cols))
    return _delta(matrix)


def _counit_basis(kind: str, matrix: PackedMatrix) -> Fraction:
    if kind == "black":
        return Fraction(int(matrix.weight == 0))
    if kind == "deconcat":
        return Fraction(int(matrix.rows == 0))
    if kind == "delta":
        return Fraction(int(matrix.rows <= 1 and matrix.cols <= 1))
    raise UsageError(f"unknown counit kind {kind!r}; expected one of {', '.join(COUNIT_KINDS)}")


def counit(kind: str, value: Any) -> Fraction:
    """ε_▲, ε_Δ or ε_δ, extended linearly."""
    if kind not in COUNIT_KINDS:
        raise UsageError(f"unknown counit kind {kind!r}; expected one of {', '.join(COUNIT_KINDS)}")
    return sum(
        (coeff * _counit_basis(kind, key) for key, coeff in as_lincomb(value).items()),
        Fraction(0),
    )


@lru_cache(maxsize=4096)
def _antipode(matrix: PackedMatrix) -> LinComb:
    if matrix.rows == 0:
        return LinComb.monomial(EMPTY)
    acc = Accumulator()
    for (left, right), coeff in _black(matrix).items():
        if left.rows == 0:
            continue
        acc.add(searrow(left, _antipode(right)), -coeff)
    return acc.result()


def antipode(value: Any) -> LinComb:
    """S(M) from m ∘ (id ⊗ S) ∘ ▲ = ε_▲, extended linearly."""
    value = as_lincomb(value)
    for key in value:
        guards.check("black_max_weight", key.weight)
    return value.apply(_antipode)


def _ordered_splittings(matrix: PackedMatrix, k: int):
    """M = M_1 + ... + M_k entry by entry with every M_i nonzero."""
    cells = [v for row in matrix.entries for v in row]
    rows, cols = matrix.rows, matrix.cols
    for choice in product(*(list(weak_compositions(v, k)) for v in cells)):
        flats = [tuple(shares[i] for shares in choice) for i in range(k)]
        if all(any(flat) for flat in flats):
            yield [
                pack(Matrix._trusted(tuple(flat[r * cols:(r + 1) * cols] for r in range(rows))))
                for flat in flats
            ]


def antipode_explicit(value: Any) -> LinComb:
    """S(M) = Σ_k (-1)^k Σ p(M_1) ↘ ... ↘ p(M_k) over ordered splittings into k nonzero parts."""
    acc = Accumulator()
    for matrix, coeff in as_lincomb(value).items():
        guards.check("black_max_weight", matrix.weight)
        if matrix.rows == 0:
            acc.add_key(EMPTY, coeff)
            continue
        for k in range(1, matrix.weight + 1):
            for parts in _ordered_splittings(matrix, k):
                term = EMPTY
                for part in parts:
                    term = block_diag(term, part)
                acc.add_key(term, coeff * (-1) ** k)
    return acc.result()


def in_truncation(matrix: Matrix, n: int) -> bool:
    """True iff every entry is at most n."""
    if n < 1:
        raise UsageError(f"truncation order must be positive, got {n}")
    return matrix.max_entry() <= n


def is_permutation_matrix(matrix: Matrix) -> bool:
    if matrix.rows != matrix.cols:
        return False
    return all(sorted(row) == [0] * (len(row) - 1) + [1] for row in matrix.entries) and all(
        sum(col) == 1 for col in zip(*matrix.entries)
    )
