# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Numeric checks of the polynomial realization on rational grids."""

from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, product

from src.algebra.counts import enumerate_pack
from src.algebra.hopfpack import deconcat, quasi_shuffle, second_coproduct
from src.algebra.morphisms import theta_q
from src.algebra.realization import (
    Grid,
    Monomial2,
    block_diag_grid,
    classify,
    evaluate,
    evaluate_lincomb,
    evaluate_qsym,
    kronecker_grid,
    phi_formal,
    random_grid,
    transpose_grid,
)
from src.models.exactlin import Accumulator, LinComb
from src.models.matrices import transpose
from src.verify.harness import VerifyContext, identity
from src.verify.samples import compositions_upto, packed_pairs, packed_upto


def _grid(ctx: VerifyContext, largest: int) -> Grid:
    return random_grid(ctx.rng, ctx.rng.randint(1, largest), ctx.rng.randint(1, largest))


def _split_sum(t: LinComb, left: Grid, right: Grid) -> Fraction:
    return sum(
        (coeff * evaluate(a, left) * evaluate(b, right) for (a, b), coeff in t.items()),
        Fraction(0),
    )


@identity("realization", "multiplicativity", bound=2)
def multiplicativity(ctx: VerifyContext) -> None:
    pairs = [(a, b, quasi_shuffle(a, b)) for a, b in packed_pairs(ctx.cap(2))]
    for _ in range(50):
        grid = _grid(ctx, 4)
        for a, b, product_ab in pairs:
            ctx.expect(
                evaluate(a, grid) * evaluate(b, grid),
                evaluate_lincomb(product_ab, grid),
                M=a,
                N=b,
                grid=grid,
            )


@identity("realization", "block-grid-deconcat", bound=3)
def block_grid_deconcat(ctx: VerifyContext) -> None:
    for _ in range(10):
        upper, lower = _grid(ctx, 2), _grid(ctx, 2)
        joined = block_diag_grid(upper, lower)
        for m in packed_upto(ctx.cap(3)):
            ctx.expect(
                evaluate(m, joined),
                _split_sum(deconcat(m), upper, lower),
                M=m,
                upper=upper,
                lower=lower,
            )


@identity("realization", "kronecker-grid-delta", bound=3)
def kronecker_grid_delta(ctx: VerifyContext) -> None:
    for _ in range(5):
        u, v = _grid(ctx, 3), _grid(ctx, 3)
        joined = kronecker_grid(u, v)
        for m in packed_upto(ctx.cap(3)):
            ctx.expect(
                evaluate(m, joined),
                _split_sum(second_coproduct(m), u, v),
                M=m,
                u=u,
                v=v,
            )


def _monomials(m: int, n: int, degree: int):
    cells = list(product(range(1, m + 1), range(1, n + 1)))
    for choice in combinations_with_replacement(cells, degree):
        yield Monomial2(tuple(Counter(choice).items()))


@identity("realization", "classify-fibers", bound=3)
def classify_fibers(ctx: VerifyContext) -> None:
    """Φ_M over [m]×[n] is the sum of the monomials that classify to M."""
    for m in range(1, 4):
        for n in range(1, 4):
            for degree in range(ctx.cap(3) + 1):
                fibers: dict = {}
                for monomial in _monomials(m, n, degree):
                    fibers.setdefault(classify(monomial), Accumulator()).add_key(monomial)
                for matrix in enumerate_pack(degree):
                    fiber = fibers.pop(matrix, Accumulator()).result()
                    ctx.expect(phi_formal(matrix, m, n), fiber, M=matrix, m=m, n=n)
                ctx.expect_true(not fibers, m=m, n=n, degree=degree)


@identity("realization", "transpose", bound=3)
def transpose_grid_identity(ctx: VerifyContext) -> None:
    for _ in range(10):
        grid = _grid(ctx, 4)
        flipped = transpose_grid(grid)
        for m in packed_upto(ctx.cap(3)):
            ctx.expect(evaluate(transpose(m), flipped), evaluate(m, grid), M=m, grid=grid)


@identity("realization", "theta-lexicographic", bound=3)
def theta_lexicographic(ctx: VerifyContext) -> None:
    """Φ(θ(ν)) on a grid is φ_ν on its cells in row-major order."""
    compositions = compositions_upto(ctx.cap(3))
    for _ in range(10):
        grid = _grid(ctx, 3)
        for c in compositions:
            ctx.expect(evaluate_lincomb(theta_q(c), grid), evaluate_qsym(c, grid), c=c, grid=grid)
