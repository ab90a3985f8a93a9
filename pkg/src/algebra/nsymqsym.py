# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""NSym on the D basis, QSym on the monomial basis, and permutation products."""

import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any

from sympy import Poly, QQ

from src.extensions import guards
from src.models.exactlin import Accumulator, LinComb, as_lincomb, bilinear, legwise
from src.models.matrices import Composition, compositions_of
from src.models.polynomials import X, scaled, zero
from src.models.surjections import Permutation, enumerate_qsh, enumerate_sh

logger = logging.getLogger(__name__)


def _concat_basis(a: Composition, b: Composition) -> LinComb:
    return LinComb.monomial(a.concat(b))


def nsym_concat(a: Any, b: Any) -> LinComb:
    """D_μ ∗ D_ν = D_{μ·ν}, extended bilinearly."""
    return bilinear(_concat_basis, a, b)


def _generator_coproduct(n: int) -> LinComb:
    acc = Accumulator()
    for i in range(n + 1):
        left = Composition((i,)) if i else Composition()
        right = Composition((n - i,)) if n - i else Composition()
        acc.add_key((left, right))
    return acc.result()


@lru_cache(maxsize=None)
def _nsym_coproduct(mu: Composition) -> LinComb:
    result = LinComb.monomial((Composition(), Composition()))
    for part in mu.parts:
        result = legwise(result, _generator_coproduct(part), _concat_basis)
    return result


def nsym_coproduct(value: Any) -> LinComb:
    """▲ on NSym: multiplicative, with ▲(1_n) = Σ 1_i ⊗ 1_{n-i}."""
    return as_lincomb(value).apply(_nsym_coproduct)


def in_nsym_truncation(mu: Composition, n: int) -> bool:
    """True iff every part of mu is at most n."""
    return all(part <= n for part in mu.parts)


def contingency_tables(row_sums: tuple[int, ...], col_sums: tuple[int, ...]):
    """Nonnegative integer matrices with the given margins, row by row."""
    if sum(row_sums) != sum(col_sums):
        return
    if not row_sums:
        yield ()
        return

    def fill_row(remaining: int, bounds: tuple[int, ...], j: int):
        if j == len(bounds) - 1:
            if remaining <= bounds[j]:
                yield (remaining,)
            return
        tail_capacity = sum(bounds[j + 1:])
        for value in range(max(0, remaining - tail_capacity), min(remaining, bounds[j]) + 1):
            for rest in fill_row(remaining - value, bounds, j + 1):
                yield (value,) + rest

    def rows_from(i: int, columns_left: tuple[int, ...]):
        if i == len(row_sums) - 1:
            yield (columns_left,)
            return
        for row in fill_row(row_sums[i], columns_left, 0):
            left = tuple(c - v for c, v in zip(columns_left, row))
            for rest in rows_from(i + 1, left):
                yield (row,) + rest

    yield from rows_from(0, tuple(col_sums))


@lru_cache(maxsize=None)
def _internal_product(beta: Composition, mu: Composition) -> LinComb:
    acc = Accumulator()
    for table in contingency_tables(beta.parts, mu.parts):
        acc.add_key(Composition(tuple(v for row in table for v in row if v)))
    return acc.result()


def internal_product(a: Any, b: Any) -> LinComb:
    """D_β ∘ D_μ: sum of D_{ω(ν)} over matrices ν with row sums β, column sums μ."""
    return bilinear(_internal_product, a, b)


def eulerian_idempotent(n: int) -> LinComb:
    """Degree-n part of log(Σ_k D_(k)) in the concatenation algebra."""
    generators = LinComb((Composition((k,)), 1) for k in range(1, n + 1))
    power = generators
    acc = Accumulator()
    for j in range(1, n + 1):
        sign = 1 if j % 2 else -1
        acc.add(
            LinComb((key, c) for key, c in power.items() if key.size == n),
            Fraction(sign, j),
        )
        power = LinComb(
            (key, c) for key, c in nsym_concat(power, generators).items() if key.size <= n
        )
    return acc.result()


def _quasi_shuffle_basis(a: Composition, b: Composition) -> LinComb:
    joined = a.parts + b.parts
    acc = Accumulator()
    for tau in enumerate_qsh(len(a), len(b)):
        parts = [0] * tau.max
        for value, target in zip(joined, tau.word):
            parts[target - 1] += value
        acc.add_key(Composition(tuple(parts)))
    return acc.result()


def qsym_quasi_shuffle(a: Any, b: Any) -> LinComb:
    """Quasi-shuffle product of QSym monomials."""
    return bilinear(_quasi_shuffle_basis, a, b)


def qsym_quasi_shuffle_tensors(a: LinComb, b: LinComb) -> LinComb:
    return legwise(a, b, _quasi_shuffle_basis)


def _deconcat_basis(nu: Composition) -> LinComb:
    return LinComb(
        ((Composition(nu.parts[:k]), Composition(nu.parts[k:])), 1)
        for k in range(len(nu.parts) + 1)
    )


def qsym_deconcat(value: Any) -> LinComb:
    """All prefix/suffix splits."""
    return as_lincomb(value).apply(_deconcat_basis)


@lru_cache(maxsize=None)
def _delta_table(n: int) -> dict[Composition, LinComb]:
    table: dict[Composition, Accumulator] = {}
    shell = compositions_of(n)
    for beta in shell:
        for mu in shell:
            for nu, coeff in _internal_product(beta, mu).items():
                table.setdefault(nu, Accumulator()).add_key((beta, mu), coeff)
    logger.debug("filled QSym delta table for degree %d", n)
    return {nu: acc.result() for nu, acc in table.items()}


def qsym_delta(value: Any) -> LinComb:
    """δ on QSym, dual to the internal product: Σ <D_β ∘ D_μ, ν> β ⊗ μ."""
    acc = Accumulator()
    for nu, coeff in as_lincomb(value).items():
        guards.check("qsym_delta_max_degree", nu.size)
        acc.add(_delta_table(nu.size).get(nu, LinComb.zero()), coeff)
    return acc.result()


def qsym_counit_delta(value: Any) -> Fraction:
    """ε_δ on QSym: 1 on compositions of length at most one."""
    return sum(
        (coeff for nu, coeff in as_lincomb(value).items() if len(nu.parts) <= 1),
        Fraction(0),
    )


def hilbert_eval(n: int, x: int | Fraction) -> Fraction:
    """H_n(x) = x(x-1)...(x-n+1)/n!."""
    x = Fraction(x)
    result = Fraction(1)
    for i in range(n):
        result *= x - i
    return result / factorial(n)


@lru_cache(maxsize=None)
def hilbert_polynomial(n: int) -> Poly:
    result = Poly(1, X, domain=QQ)
    for i in range(n):
        result = result * Poly(X - i, X, domain=QQ)
    return scaled(result, Fraction(1, factorial(n)))


def phi_qsym(value: Any) -> Poly:
    """φ_QSym(ν) = H_{length(ν)}(X), extended linearly."""
    result = zero()
    for nu, coeff in as_lincomb(value).items():
        result = result + scaled(hilbert_polynomial(len(nu.parts)), coeff)
    return result


def _conjugate_sum(sigma: Permutation, tau: Permutation, two_sided: bool) -> LinComb:
    joined = sigma.tensor(tau)
    shuffles = enumerate_sh(len(sigma), len(tau))
    acc = Accumulator()
    for alpha in shuffles:
        for beta in shuffles if two_sided else (alpha,):
            acc.add_key(alpha.compose(joined).compose(beta.inverse()))
    return acc.result()


def star_product(sigma: Any, tau: Any) -> LinComb:
    """σ ★ τ = Σ_α α ∘ (σ ⊗ τ) ∘ α^{-1} over shuffles α."""
    return bilinear(lambda a, b: _conjugate_sum(a, b, False), sigma, tau)


def perm_shuffle(sigma: Any, tau: Any) -> LinComb:
    """σ ⧧ τ = Σ_{α,β} α ∘ (σ ⊗ τ) ∘ β^{-1} over pairs of shuffles."""
    return bilinear(lambda a, b: _conjugate_sum(a, b, True), sigma, tau)
