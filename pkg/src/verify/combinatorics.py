# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Surjection enumerators, NSym/QSym structure and permutation products."""

from fractions import Fraction
from itertools import permutations, product
from math import comb

from src.algebra.hopfpack import shuffle
from src.algebra.nsymqsym import (
    eulerian_idempotent,
    hilbert_eval,
    in_nsym_truncation,
    internal_product,
    nsym_concat,
    nsym_coproduct,
    perm_shuffle,
    phi_qsym,
    qsym_deconcat,
    qsym_delta,
    qsym_quasi_shuffle,
    star_product,
)
from src.models.exactlin import Accumulator, LinComb, legwise, split_leg, tensor
from src.models.matrices import Composition, compositions_of, map_matrix
from src.models.surjections import (
    AdmPair,
    Permutation,
    Surjection,
    check_hoffman_identity,
    enumerate_adm,
    enumerate_inc,
    enumerate_qsh,
    enumerate_sh,
)
from src.verify.axioms import m_13_24
from src.verify.harness import VerifyContext, identity
from src.verify.samples import compositions_upto

EMPTY_COMPOSITION = Composition()


@identity("combinatorics", "sh-inc-counts", bound=8)
def sh_inc_counts(ctx: VerifyContext) -> None:
    top = ctx.cap(8)
    for k in range(top + 1):
        for l in range(top + 1):
            ctx.expect(len(enumerate_sh(k, l)), comb(k + l, k), k=k, l=l)
        if k:
            ctx.expect(len(enumerate_inc(k)), 2 ** (k - 1), k=k)


@identity("combinatorics", "sh-in-qsh", bound=4)
def sh_in_qsh(ctx: VerifyContext) -> None:
    top = ctx.cap(4)
    for k in range(top + 1):
        for l in range(top + 1):
            words = {s.word for s in enumerate_qsh(k, l)}
            ctx.expect_true(all(s.word in words for s in enumerate_sh(k, l)), k=k, l=l)


def _surjective_words(k: int):
    for word in product(range(1, k + 1), repeat=k):
        if set(word) == set(range(1, max(word, default=0) + 1)):
            yield Surjection(word)


def _admissible(first: Surjection, second: Surjection) -> bool:
    if not first.is_increasing():
        return False
    k = len(first)
    return all(
        second.word[i] < second.word[j]
        for i in range(k)
        for j in range(i + 1, k)
        if first.word[i] == first.word[j]
    )


@identity("combinatorics", "adm-pairs", bound=4)
def adm_pairs(ctx: VerifyContext) -> None:
    for k in range(ctx.cap(4) + 1):
        pairs = enumerate_adm(k)
        ctx.expect(len(set(pairs)), len(pairs), k=k, law="distinct")
        words = list(_surjective_words(k))
        expected = {AdmPair(a, b) for a in words for b in words if _admissible(a, b)}
        ctx.expect(set(pairs), expected, k=k, law="brute force")


@identity("combinatorics", "hoffman", bound=4)
def hoffman(ctx: VerifyContext) -> None:
    for k in range(ctx.cap(4) + 1):
        for l in range(ctx.cap(4) + 1):
            ctx.expect_true(check_hoffman_identity(k, l), k=k, l=l)


@identity("combinatorics", "internal-distributive", bound=5)
def internal_distributive(ctx: VerifyContext) -> None:
    """(a∗b)∘c = Σ (a∘c1)∗(b∘c2) over ▲(c)."""
    for c in compositions_upto(ctx.cap(5)):
        split = nsym_coproduct(c)
        for i in range(c.size + 1):
            for a in compositions_of(i):
                for b in compositions_of(c.size - i):
                    rhs = Accumulator()
                    for (c1, c2), coeff in split.items():
                        if c1.size == i:
                            rhs.add(
                                nsym_concat(internal_product(a, c1), internal_product(b, c2)),
                                coeff,
                            )
                    lhs = internal_product(nsym_concat(a, b), c)
                    ctx.expect(lhs, rhs.result(), a=a, b=b, c=c)


@identity("combinatorics", "internal-coproduct", bound=4)
def internal_coproduct(ctx: VerifyContext) -> None:
    for n in range(ctx.cap(4) + 1):
        for a in compositions_of(n):
            for b in compositions_of(n):
                lhs = nsym_coproduct(internal_product(a, b))
                rhs = legwise(nsym_coproduct(a), nsym_coproduct(b), internal_product)
                ctx.expect(lhs, rhs, a=a, b=b)


@identity("combinatorics", "internal-unit", bound=6)
def internal_unit(ctx: VerifyContext) -> None:
    for n in range(1, ctx.cap(6) + 1):
        unit = Composition((n,))
        for mu in compositions_of(n):
            ctx.expect(internal_product(unit, mu), LinComb.monomial(mu), mu=mu, side="left")
            ctx.expect(internal_product(mu, unit), LinComb.monomial(mu), mu=mu, side="right")


@identity("combinatorics", "internal-associative", bound=5)
def internal_associative(ctx: VerifyContext) -> None:
    for n in range(ctx.cap(5) + 1):
        shell = compositions_of(n)
        for a in shell:
            for b in shell:
                ab = internal_product(a, b)
                for c in shell:
                    ctx.expect(
                        internal_product(ab, c),
                        internal_product(a, internal_product(b, c)),
                        a=a,
                        b=b,
                        c=c,
                    )


@identity("combinatorics", "qsym-double-bialgebra", bound=4)
def qsym_double_bialgebra(ctx: VerifyContext) -> None:
    for nu in compositions_upto(ctx.cap(4)):
        lhs = split_leg(qsym_delta(nu), 0, qsym_deconcat)
        rhs = Accumulator()
        for (a, b), coeff in qsym_deconcat(nu).items():
            rhs.add(m_13_24(qsym_delta(a), qsym_delta(b), qsym_quasi_shuffle), coeff)
        ctx.expect(lhs, rhs.result(), nu=nu)


@identity("combinatorics", "phi-qsym", bound=4)
def phi_qsym_morphism(ctx: VerifyContext) -> None:
    compositions = compositions_upto(ctx.cap(4))
    for a in compositions:
        for b in compositions:
            if a.size + b.size <= ctx.cap(4):
                ctx.expect(phi_qsym(qsym_quasi_shuffle(a, b)), phi_qsym(a) * phi_qsym(b), a=a, b=b)
    for _ in range(20):
        x, y = ctx.random_rational(), ctx.random_rational()
        for n in range(ctx.cap(4) + 3):
            rhs = sum(
                (hilbert_eval(i, x) * hilbert_eval(n - i, y) for i in range(n + 1)), Fraction(0)
            )
            ctx.expect(hilbert_eval(n, x + y), rhs, n=n, x=x, y=y, law="binomial")


@identity("combinatorics", "eulerian-primitive", bound=4)
def eulerian_primitive(ctx: VerifyContext) -> None:
    for n in range(1, ctx.cap(4) + 1):
        e = eulerian_idempotent(n)
        expected = tensor(e, EMPTY_COMPOSITION) + tensor(EMPTY_COMPOSITION, e)
        ctx.expect(nsym_coproduct(e), expected, n=n)


@identity("combinatorics", "nsym-truncation", bound=5)
def nsym_truncation(ctx: VerifyContext) -> None:
    for n in (1, 2, 3):
        for mu in compositions_upto(ctx.cap(5)):
            if in_nsym_truncation(mu, n):
                ctx.expect_true(
                    all(
                        in_nsym_truncation(left, n) and in_nsym_truncation(right, n)
                        for left, right in nsym_coproduct(mu)
                    ),
                    mu=mu,
                    n=n,
                )


def _permutations_upto(size: int) -> list[Permutation]:
    return [Permutation(p) for k in range(size + 1) for p in permutations(range(1, k + 1))]


def _as_matrices(value: LinComb) -> LinComb:
    return value.map_keys(lambda sigma: map_matrix(sigma.word))


@identity("combinatorics", "perm-shuffle", bound=4)
def perm_shuffle_matrices(ctx: VerifyContext) -> None:
    top = ctx.cap(4)
    perms = _permutations_upto(top)
    for sigma in perms:
        for tau in perms:
            if len(sigma) + len(tau) <= top:
                lhs = _as_matrices(perm_shuffle(sigma, tau))
                rhs = shuffle(map_matrix(sigma.word), map_matrix(tau.word))
                ctx.expect(lhs, rhs, sigma=sigma, tau=tau)
    one, swap = Permutation((1,)), Permutation((2, 1))
    ctx.expect(
        perm_shuffle(one, swap),
        LinComb(
            {
                Permutation((1, 3, 2)): 1,
                Permutation((3, 1, 2)): 2,
                Permutation((3, 2, 1)): 3,
                Permutation((2, 3, 1)): 2,
                Permutation((2, 1, 3)): 1,
            }
        ),
        sigma=one,
        tau=swap,
        law="shuffle example",
    )
    ctx.expect(
        star_product(one, swap),
        LinComb({Permutation((1, 3, 2)): 1, Permutation((2, 1, 3)): 1, Permutation((3, 2, 1)): 1}),
        sigma=one,
        tau=swap,
        law="star example",
    )
