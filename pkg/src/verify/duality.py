# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Pairing dualities between products and coproducts."""

from src.algebra.hopfpack import (
    coproduct_black,
    coproduct_black_res,
    deconcat,
    quasi_shuffle,
    searrow,
    shuffle,
)
from src.algebra.morphisms import K_xy, RationalPair, kappa_xy
from src.algebra.nsymqsym import nsym_concat, nsym_coproduct, qsym_deconcat, qsym_quasi_shuffle
from src.models.exactlin import Accumulator, LinComb, pairing
from src.models.matrices import compositions_of
from src.verify.harness import VerifyContext, identity
from src.verify.samples import compositions_upto, packed_triples, packed_upto


def _dual_product(ctx: VerifyContext, product, coproduct, bound: int) -> None:
    """<a·b, N> = <a ⊗ b, coproduct(N)> for every N of the right weight."""
    for a, b, targets in packed_triples(ctx.cap(bound)):
        expected = LinComb((n, coproduct(n)[(a, b)]) for n in targets)
        ctx.expect(product(a, b), expected, M=a, N=b)


@identity("duality", "quasi-shuffle-black", bound=4)
def quasi_shuffle_black(ctx: VerifyContext) -> None:
    _dual_product(ctx, quasi_shuffle, coproduct_black, 4)


@identity("duality", "searrow-deconcat", bound=4)
def searrow_deconcat(ctx: VerifyContext) -> None:
    _dual_product(ctx, searrow, deconcat, 4)


@identity("duality", "shuffle-black-res", bound=4)
def shuffle_black_res(ctx: VerifyContext) -> None:
    _dual_product(ctx, shuffle, coproduct_black_res, 4)


@identity("duality", "kxy-kappa-adjoint", bound=3)
def kxy_kappa_adjoint(ctx: VerifyContext) -> None:
    weight = ctx.cap(3)
    matrices = packed_upto(weight)
    compositions = compositions_upto(weight)
    for _ in range(5):
        point = RationalPair(ctx.random_rational(), ctx.random_rational())
        for c in compositions:
            image = K_xy(point, c)
            for m in matrices:
                ctx.expect(
                    pairing(image, m),
                    pairing(c, kappa_xy(point, m)),
                    x=point.x,
                    y=point.y,
                    c=c,
                    M=m,
                )


def _triple_tables(weight: int, product, coproduct) -> tuple[LinComb, LinComb]:
    forward, backward = Accumulator(), Accumulator()
    for i in range(weight + 1):
        for a in compositions_of(i):
            for b in compositions_of(weight - i):
                for nu, coeff in product(a, b).items():
                    forward.add_key((a, b, nu), coeff)
    for nu in compositions_of(weight):
        for (a, b), coeff in coproduct(nu).items():
            backward.add_key((a, b, nu), coeff)
    return forward.result(), backward.result()


@identity("duality", "qsym-nsym", bound=5)
def qsym_nsym(ctx: VerifyContext) -> None:
    for weight in range(ctx.cap(5) + 1):
        forward, backward = _triple_tables(weight, qsym_quasi_shuffle, nsym_coproduct)
        ctx.expect(forward, backward, weight=weight, law="quasi-shuffle against coproduct")
        forward, backward = _triple_tables(weight, nsym_concat, qsym_deconcat)
        ctx.expect(forward, backward, weight=weight, law="concatenation against deconcatenation")
