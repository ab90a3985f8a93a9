# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Morphism identities between H_Pack, NSym, QSym and Q[X]."""

from fractions import Fraction

from src.algebra.hopfpack import (
    coproduct_black,
    counit,
    deconcat,
    quasi_shuffle,
    searrow,
    second_coproduct,
    shuffle,
)
from src.algebra.morphisms import (
    K_xy,
    Kprime,
    RationalPair,
    Theta,
    kappa_xy,
    phi_hpack,
    theta_q,
    transpose_morphism,
    upsilon,
)
from src.algebra.nsymqsym import (
    nsym_concat,
    nsym_coproduct,
    phi_qsym,
    qsym_counit_delta,
    qsym_deconcat,
    qsym_delta,
    qsym_quasi_shuffle,
)
from src.models.exactlin import LinComb, map_tensor
from src.models.matrices import Composition, PackedMatrix, diagonal, pack, transpose
from src.verify.harness import VerifyContext, identity
from src.verify.samples import compositions_upto, packed_pairs, packed_upto

ONE = RationalPair(Fraction(1), Fraction(1))


@identity("morphisms", "theta-big-bialgebra", bound=3)
def theta_big_bialgebra(ctx: VerifyContext) -> None:
    for a, b in packed_pairs(ctx.cap(3), ctx.cap(3)):
        ctx.expect(Theta(searrow(a, b)), nsym_concat(Theta(a), Theta(b)), M=a, N=b)
    for m in packed_upto(ctx.cap(3)):
        lhs = map_tensor(coproduct_black(m), Theta)
        ctx.expect(lhs, nsym_coproduct(Theta(m)), M=m)


@identity("morphisms", "kxy-bialgebra", bound=3)
def kxy_bialgebra(ctx: VerifyContext) -> None:
    compositions = compositions_upto(ctx.cap(3))
    for _ in range(10):
        point = RationalPair(ctx.random_rational(), ctx.random_rational())
        image = {c: K_xy(point, c) for c in compositions}
        for c in compositions:
            lhs = image[c].apply(coproduct_black)
            rhs = map_tensor(nsym_coproduct(c), lambda k: image[k])
            ctx.expect(lhs, rhs, x=point.x, y=point.y, c=c, law="coproduct")
        for a in compositions:
            for b in compositions:
                if a.size + b.size <= ctx.cap(3):
                    ctx.expect(
                        K_xy(point, a.concat(b)),
                        searrow(image[a], image[b]),
                        x=point.x,
                        y=point.y,
                        a=a,
                        b=b,
                        law="product",
                    )


@identity("morphisms", "kxy-unpacking", bound=2)
def kxy_unpacking(ctx: VerifyContext) -> None:
    for k in (1, 2, 3):
        for l in (1, 2):
            point = RationalPair(Fraction(k), Fraction(l))
            for c in compositions_upto(ctx.cap(2)):
                packed = Kprime(k, l, c.parts).map_keys(pack)
                ctx.expect(K_xy(point, c), packed, k=k, l=l, c=c)


@identity("morphisms", "theta-bialgebra", bound=3)
def theta_bialgebra(ctx: VerifyContext) -> None:
    compositions = compositions_upto(ctx.cap(3))
    for a in compositions:
        for b in compositions:
            if a.size + b.size <= ctx.cap(3):
                lhs = theta_q(qsym_quasi_shuffle(a, b))
                ctx.expect(lhs, quasi_shuffle(theta_q(a), theta_q(b)), a=a, b=b, law="product")
    for c in compositions:
        ctx.expect(
            map_tensor(qsym_deconcat(c), theta_q), theta_q(c).apply(deconcat), c=c, law="deconcat"
        )


def _kappa_one(value) -> LinComb:
    return kappa_xy(ONE, value)


@identity("morphisms", "theta-delta", bound=3)
def theta_delta(ctx: VerifyContext) -> None:
    """δ∘θ matches δ_QSym once both legs are read back through κ_{1,1}."""
    for c in compositions_upto(ctx.cap(3)):
        image = theta_q(c)
        ctx.expect(_kappa_one(image), LinComb.monomial(c), c=c, law="kappa section")
        ctx.expect(counit("delta", image), qsym_counit_delta(c), c=c, law="counit")
        lhs = map_tensor(image.apply(second_coproduct), _kappa_one)
        ctx.expect(lhs, qsym_delta(c), c=c, law="delta through kappa")
    if ctx.cap(3) >= 3:
        # the anti-diagonal term of θ(1,2) merges to [2 1] on the left leg
        c = Composition((1, 2))
        strict = map_tensor(qsym_delta(c), theta_q)
        ctx.expect_true(theta_q(c).apply(second_coproduct) != strict, c=c, law="strict form fails")


def _random_point(ctx: VerifyContext) -> RationalPair:
    return RationalPair(ctx.random_rational(), ctx.random_rational())


@identity("morphisms", "kappa-bialgebra", bound=3)
def kappa_bialgebra(ctx: VerifyContext) -> None:
    for _ in range(5):
        point = _random_point(ctx)
        for a, b in packed_pairs(ctx.cap(3), ctx.cap(3)):
            ctx.expect(
                kappa_xy(point, quasi_shuffle(a, b)),
                qsym_quasi_shuffle(kappa_xy(point, a), kappa_xy(point, b)),
                x=point.x,
                y=point.y,
                M=a,
                N=b,
                law="product",
            )
        for m in packed_upto(ctx.cap(3)):
            lhs = map_tensor(deconcat(m), lambda k: kappa_xy(point, k))
            ctx.expect(lhs, qsym_deconcat(kappa_xy(point, m)), x=point.x, y=point.y, M=m, law="deconcat")


@identity("morphisms", "kappa-triangular", bound=4)
def kappa_triangular(ctx: VerifyContext) -> None:
    """Diagonal matrices map to (xy)^len μ plus coarser terms; x = 0 or y = 0 kills weight."""
    for _ in range(3):
        point = _random_point(ctx)
        lead = point.x * point.y
        for mu in compositions_upto(ctx.cap(4)):
            image = kappa_xy(point, diagonal(mu))
            ctx.expect(image[mu], lead ** len(mu.parts), mu=mu, x=point.x, y=point.y)
            ctx.expect_true(
                all(len(nu.parts) <= len(mu.parts) for nu in image), mu=mu, x=point.x, y=point.y
            )
    for point in (RationalPair(Fraction(0), Fraction(3)), RationalPair(Fraction(2), Fraction(0))):
        for m in packed_upto(ctx.cap(3)):
            if m.rows:
                ctx.expect(kappa_xy(point, m), LinComb.zero(), M=m, x=point.x, y=point.y)


@identity("morphisms", "kappa-delta", bound=3)
def kappa_delta(ctx: VerifyContext) -> None:
    for m in packed_upto(ctx.cap(3)):
        lhs = map_tensor(second_coproduct(m), lambda k: kappa_xy(ONE, k))
        ctx.expect(lhs, qsym_delta(kappa_xy(ONE, m)), M=m)


@identity("morphisms", "kappa-counit-control", bound=2)
def kappa_counit_control(ctx: VerifyContext) -> None:
    """κ at (1, 2) must break ε_δ on [1 1]; at (1, 1) it must not."""
    row = PackedMatrix(((1, 1),))
    broken = RationalPair(Fraction(1), Fraction(2))
    ctx.expect_true(
        qsym_counit_delta(kappa_xy(broken, row)) != counit("delta", row), M=row, x=1, y=2
    )
    ctx.expect(qsym_counit_delta(kappa_xy(ONE, row)), counit("delta", row), M=row, x=1, y=1)


@identity("morphisms", "upsilon", bound=3)
def upsilon_morphism(ctx: VerifyContext) -> None:
    for a, b in packed_pairs(ctx.cap(3), ctx.cap(3)):
        ctx.expect(
            upsilon(shuffle(a, b)), quasi_shuffle(upsilon(a), upsilon(b)), M=a, N=b, law="product"
        )
    for m in packed_upto(ctx.cap(3)):
        ctx.expect(map_tensor(deconcat(m), upsilon), upsilon(m).apply(deconcat), M=m, law="deconcat")


@identity("morphisms", "phi-factorization", bound=4)
def phi_factorization(ctx: VerifyContext) -> None:
    for m in packed_upto(ctx.cap(4)):
        ctx.expect(phi_hpack(m), phi_qsym(kappa_xy(ONE, m)), M=m)


@identity("morphisms", "transpose-involution", bound=3)
def transpose_involution(ctx: VerifyContext) -> None:
    for m in packed_upto(ctx.cap(3)):
        ctx.expect(transpose_morphism(transpose_morphism(m)), LinComb.monomial(m), M=m)
        lhs = map_tensor(coproduct_black(m), transpose_morphism)
        ctx.expect(lhs, coproduct_black(transpose(m)), M=m)
