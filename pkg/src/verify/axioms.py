# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Bialgebra axioms of H_Pack and carrier-type laws."""

from fractions import Fraction

from src.algebra.hopfpack import (
    antipode,
    antipode_explicit,
    coproduct_black,
    coproduct_black_mat,
    counit,
    deconcat,
    in_truncation,
    is_permutation_matrix,
    quasi_shuffle,
    quasi_shuffle_tensors,
    searrow,
    searrow_tensors,
    second_coproduct,
)
from src.models.exactlin import Accumulator, LinComb, pairing, split_leg, tensor
from src.models.matrices import (
    EMPTY,
    Matrix,
    comp,
    map_matrix,
    matmul,
    pack,
    transpose,
)
from src.models.surjections import adm_triples
from src.verify.harness import VerifyContext, identity
from src.verify.samples import packed_pairs, packed_upto


def _coassociative(ctx: VerifyContext, coproduct, bound: int) -> None:
    for m in packed_upto(ctx.cap(bound)):
        once = coproduct(m)
        ctx.expect(split_leg(once, 0, coproduct), split_leg(once, 1, coproduct), M=m)


@identity("axioms", "coassociativity-black", bound=4)
def coassociativity_black(ctx: VerifyContext) -> None:
    _coassociative(ctx, coproduct_black, 4)


@identity("axioms", "coassociativity-deconcat", bound=4)
def coassociativity_deconcat(ctx: VerifyContext) -> None:
    _coassociative(ctx, deconcat, 4)


@identity("axioms", "coassociativity-delta", bound=3)
def coassociativity_delta(ctx: VerifyContext) -> None:
    _coassociative(ctx, second_coproduct, 3)


@identity("axioms", "adm-coassociativity", bound=4)
def adm_coassociativity(ctx: VerifyContext) -> None:
    """Adm is coassociative on words; δ on any k×l with k, l <= 4 reduces to this."""
    for k in range(ctx.cap(4) + 1):
        ctx.expect(adm_triples(k, "left"), adm_triples(k, "right"), k=k)


@identity("axioms", "black-multiplicative", bound=2)
def black_multiplicative(ctx: VerifyContext) -> None:
    for a, b in packed_pairs(ctx.cap(2)):
        lhs = searrow(a, b).apply(coproduct_black)
        rhs = searrow_tensors(coproduct_black(a), coproduct_black(b))
        ctx.expect(lhs, rhs, M=a, N=b)


@identity("axioms", "antipode", bound=4)
def antipode_axiom(ctx: VerifyContext) -> None:
    for m in packed_upto(ctx.cap(4)):
        unit = LinComb.monomial(EMPTY, counit("black", m))
        left, right = Accumulator(), Accumulator()
        for (a, b), coeff in coproduct_black(m).items():
            left.add(searrow(antipode(a), b), coeff)
            right.add(searrow(a, antipode(b)), coeff)
        ctx.expect(left.result(), unit, M=m, side="S*id")
        ctx.expect(right.result(), unit, M=m, side="id*S")


@identity("axioms", "antipode-explicit", bound=4)
def antipode_explicit_axiom(ctx: VerifyContext) -> None:
    for m in packed_upto(ctx.cap(4)):
        ctx.expect(antipode(m), antipode_explicit(m), M=m)


@identity("axioms", "infinitesimal", bound=2)
def infinitesimal(ctx: VerifyContext) -> None:
    for a, b in packed_pairs(ctx.cap(2)):
        lhs = searrow(a, b).apply(deconcat)
        rhs = (
            searrow_tensors(deconcat(a), tensor(EMPTY, b))
            + searrow_tensors(tensor(a, EMPTY), deconcat(b))
            - tensor(a, b)
        )
        ctx.expect(lhs, rhs, M=a, N=b)


@identity("axioms", "delta-multiplicative", bound=2)
def delta_multiplicative(ctx: VerifyContext) -> None:
    for a, b in packed_pairs(ctx.cap(2)):
        lhs = quasi_shuffle(a, b).apply(second_coproduct)
        rhs = quasi_shuffle_tensors(second_coproduct(a), second_coproduct(b))
        ctx.expect(lhs, rhs, M=a, N=b)


def m_13_24(left: LinComb, right: LinComb, product) -> LinComb:
    """a⊗b and c⊗d to a ⊗ c ⊗ (b·d)."""
    acc = Accumulator()
    for (a, b), ca in left.items():
        for (c, d), cb in right.items():
            acc.add(tensor(a, c, product(b, d)), ca * cb)
    return acc.result()


@identity("axioms", "double-bialgebra", bound=3)
def double_bialgebra(ctx: VerifyContext) -> None:
    for m in packed_upto(ctx.cap(3)):
        lhs = split_leg(second_coproduct(m), 0, deconcat)
        rhs = Accumulator()
        for (a, b), coeff in deconcat(m).items():
            rhs.add(m_13_24(second_coproduct(a), second_coproduct(b), quasi_shuffle), coeff)
        ctx.expect(lhs, rhs.result(), M=m)


def _counit_laws(ctx: VerifyContext, coproduct, kind: str, bound: int) -> None:
    for m in packed_upto(ctx.cap(bound)):
        t = coproduct(m)
        left = LinComb(((b,), c * counit(kind, a)) for (a, b), c in t.items())
        right = LinComb(((a,), c * counit(kind, b)) for (a, b), c in t.items())
        ctx.expect(left, LinComb.monomial((m,)), M=m, side="counit*id")
        ctx.expect(right, LinComb.monomial((m,)), M=m, side="id*counit")


@identity("axioms", "counit-black", bound=4)
def counit_black(ctx: VerifyContext) -> None:
    _counit_laws(ctx, coproduct_black, "black", 4)


@identity("axioms", "counit-deconcat", bound=4)
def counit_deconcat(ctx: VerifyContext) -> None:
    _counit_laws(ctx, deconcat, "deconcat", 4)


@identity("axioms", "counit-delta", bound=4)
def counit_delta(ctx: VerifyContext) -> None:
    _counit_laws(ctx, second_coproduct, "delta", 4)


@identity("axioms", "transpose-equivariance", bound=3)
def transpose_equivariance(ctx: VerifyContext) -> None:
    for a, b in packed_pairs(ctx.cap(3), ctx.cap(3)):
        lhs = quasi_shuffle(a, b).map_keys(transpose)
        ctx.expect(lhs, quasi_shuffle(transpose(a), transpose(b)), M=a, N=b)
    for m in packed_upto(ctx.cap(3)):
        lhs = second_coproduct(m).map_keys(lambda key: (transpose(key[0]), transpose(key[1])))
        ctx.expect(lhs, second_coproduct(transpose(m)), M=m)


@identity("axioms", "truncation-closure", bound=3)
def truncation_closure(ctx: VerifyContext) -> None:
    matrices = packed_upto(ctx.cap(3))
    for m in matrices:
        n = max(m.max_entry(), 1)
        ctx.expect_true(
            all(in_truncation(a, n) and in_truncation(b, n) for a, b in coproduct_black(m)),
            M=m,
        )
        if is_permutation_matrix(m):
            ctx.expect_true(
                all(is_permutation_matrix(a) and is_permutation_matrix(b) for a, b in coproduct_black(m)),
                M=m,
            )
    for a, b in packed_pairs(ctx.cap(2)):
        n = max(a.max_entry(), b.max_entry(), 1)
        ctx.expect_true(all(in_truncation(k, n) for k in searrow(a, b)), M=a, N=b)


def _with_zero_lines(m: Matrix) -> Matrix:
    """m with a zero row on top and a zero column on the right."""
    grid = ((0,) * (m.cols + 1),) + tuple(row + (0,) for row in m.entries)
    return Matrix(grid)


@identity("axioms", "black-quotient", bound=3)
def black_quotient(ctx: VerifyContext) -> None:
    for m in packed_upto(ctx.cap(3)):
        if m.rows == 0:
            continue
        raw = _with_zero_lines(m)
        lhs = coproduct_black_mat(raw).map_keys(lambda key: (pack(key[0]), pack(key[1])))
        ctx.expect(lhs, coproduct_black(pack(raw)), M=raw)


@identity("axioms", "matrix-laws", bound=3)
def matrix_laws(ctx: VerifyContext) -> None:
    for m in packed_upto(ctx.cap(3)):
        if m.rows == 0:
            continue
        raw = _with_zero_lines(m)
        ctx.expect(pack(pack(raw)), pack(raw), M=raw, law="pack idempotent")
        ctx.expect(pack(raw).weight, raw.weight, M=raw, law="pack keeps weight")
        ctx.expect(comp(pack(raw)), comp(raw), M=raw, law="comp after pack")
        ctx.expect(pack(transpose(raw)), transpose(pack(raw)), M=raw, law="transpose after pack")
        ctx.expect(transpose(transpose(raw)), raw, M=raw, law="transpose involution")
    for _ in range(20):
        k = ctx.rng.randint(1, 4)
        alpha = [ctx.rng.randint(1, 4) for _ in range(k)]
        beta = [ctx.rng.randint(1, 3) for _ in range(4)]
        composed = [beta[v - 1] for v in alpha]
        lhs = map_matrix(composed, 3)
        rhs = matmul(map_matrix(beta, 3), map_matrix(alpha, 4))
        ctx.expect(lhs, rhs, alpha=alpha, beta=beta, law="map of a composite")


@identity("axioms", "lincomb-laws", bound=2)
def lincomb_laws(ctx: VerifyContext) -> None:
    basis = packed_upto(ctx.cap(2))

    def sample() -> LinComb:
        return LinComb((ctx.rng.choice(basis), ctx.random_rational()) for _ in range(3))

    for _ in range(25):
        a, b, c = sample(), sample(), sample()
        s, t = ctx.random_rational(), ctx.random_rational()
        ctx.expect((a + b) + c, a + (b + c), a=a, b=b, c=c, law="associative")
        ctx.expect(a + b, b + a, a=a, b=b, law="commutative")
        ctx.expect((a + b) * s, a * s + b * s, a=a, b=b, s=s, law="distributive")
        ctx.expect(a * (s * t), (a * t) * s, a=a, s=s, t=t, law="scale composes")
        ctx.expect(pairing(a, b), pairing(b, a), a=a, b=b, law="pairing symmetric")
        ctx.expect_true(all(coeff != 0 for _, coeff in (a + b - a).items()), a=a, b=b)
    ctx.expect(a - a, LinComb.zero(), a=a, law="additive inverse")
    ctx.expect(pairing(a * Fraction(0), b), Fraction(0), a=a, b=b, law="pairing zero")
