# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Morphisms between H_Pack, NSym, QSym and Q[X]."""

from fractions import Fraction
from functools import lru_cache
from typing import Any, NamedTuple

from sympy import Poly

from src.algebra.counts import enumerate_pack
from src.algebra.hopfpack import block_factorizations, searrow
from src.algebra.nsymqsym import hilbert_eval, hilbert_polynomial
from src.extensions import guards
from src.models.exactlin import Accumulator, LinComb, as_lincomb
from src.models.matrices import (
    EMPTY,
    Composition,
    Matrix,
    PackedMatrix,
    block_diag,
    comp,
    diag_of,
    sandwich,
    transpose,
    weak_compositions,
)
from src.models.polynomials import scaled, zero
from src.models.surjections import enumerate_inc


class RationalPair(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: int | Fraction, y: int | Fraction) -> "RationalPair":
        return cls(Fraction(x), Fraction(y))


def Theta(value: Any) -> LinComb:
    """M ↦ D_{Comp(M)}."""
    return as_lincomb(value).map_keys(comp)


def matrix_shell(k: int, l: int, n: int) -> list[Matrix]:
    """All k×l matrices of weight n, zero rows and columns allowed."""
    return [
        Matrix._trusted(tuple(cells[i * l:(i + 1) * l] for i in range(k)))
        for cells in weak_compositions(n, k * l)
    ]


def Kprime(k: int, l: int, parts: tuple[int, ...]) -> LinComb:
    """↘-product over the parts of the weight shells of k×l matrices."""
    result = LinComb.monomial(EMPTY)
    for n in parts:
        guards.check("max_weight", n)
        shell = LinComb((m, 1) for m in matrix_shell(k, l, n))
        acc = Accumulator()
        for left, ca in result.items():
            for right, cb in shell.items():
                acc.add_key(block_diag(left, right), ca * cb)
        result = acc.result()
    return result


def _grade_factor(matrix: Matrix, point: RationalPair) -> Fraction:
    return hilbert_eval(matrix.rows, point.x) * hilbert_eval(matrix.cols, point.y)


@lru_cache(maxsize=None)
def _kxy_part(n: int, point: RationalPair) -> LinComb:
    return LinComb((m, _grade_factor(m, point)) for m in enumerate_pack(n))


def K_xy(point: RationalPair, value: Any) -> LinComb:
    """Σ Π H_row(x) H_col(y) M_1 ↘ ... ↘ M_n over ω(M_i) = a_i."""
    acc = Accumulator()
    for mu, coeff in as_lincomb(value).items():
        term = LinComb.monomial(EMPTY)
        for part in mu.parts:
            guards.check("kxy_max_part", part)
            term = searrow(term, _kxy_part(part, point))
        acc.add(term, coeff)
    return acc.result()


def _fill_support(support: PackedMatrix, parts: tuple[int, ...]) -> PackedMatrix:
    values = iter(parts)
    return PackedMatrix._trusted(
        tuple(tuple(next(values) if v else 0 for v in row) for row in support.entries)
    )


def _theta_basis(nu: Composition) -> LinComb:
    guards.check("theta_max_length", len(nu.parts))
    supports = enumerate_pack(len(nu.parts), max_entry=1)
    return LinComb((_fill_support(s, nu.parts), 1) for s in supports)


def theta_q(value: Any) -> LinComb:
    """Sum of the packed matrices whose reading composition is ν."""
    return as_lincomb(value).apply(_theta_basis)


def _kappa_basis(matrix: PackedMatrix, point: RationalPair) -> LinComb:
    if matrix.rows == 0:
        return LinComb.monomial(Composition())
    acc = Accumulator()
    for head, tail in block_factorizations(matrix):
        if head.rows == 0:
            continue
        factor = _grade_factor(head, point)
        if not factor:
            continue
        lead = (head.weight,)
        for rest, coeff in _kappa_basis(tail, point).items():
            acc.add_key(Composition(lead + rest.parts), factor * coeff)
    return acc.result()


def kappa_xy(point: RationalPair, value: Any) -> LinComb:
    """Σ over block factorizations of Π H_row(x) H_col(y) (ω(M_1),...,ω(M_k))."""
    return as_lincomb(value).apply(lambda m: _kappa_basis(m, point))


@lru_cache(maxsize=4096)
def _upsilon_basis(matrix: PackedMatrix) -> LinComb:
    acc = Accumulator()
    for sigma in enumerate_inc(matrix.rows):
        for tau in enumerate_inc(matrix.cols):
            acc.add_key(
                sandwich(matrix, sigma.word, tau.word),
                Fraction(1, sigma.factorial() * tau.factorial()),
            )
    return acc.result()


def upsilon(value: Any) -> LinComb:
    """Σ μ(σ) M μ(τ)^T / σ!τ! over increasing surjections on rows and columns."""
    return as_lincomb(value).apply(_upsilon_basis)


def phi_hpack(value: Any) -> Poly:
    """H_{row(M)}(X) when M is diagonal, 0 otherwise."""
    result = zero()
    for matrix, coeff in as_lincomb(value).items():
        if diag_of(matrix) is not None:
            result = result + scaled(hilbert_polynomial(matrix.rows), coeff)
    return result


def transpose_morphism(value: Any) -> LinComb:
    return as_lincomb(value).map_keys(transpose)
