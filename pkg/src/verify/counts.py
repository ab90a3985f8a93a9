# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Counting tables recomputed against the published values."""

from src.algebra.counts import (
    GENERATOR_TABLE,
    PACK_TABLE,
    PRIMITIVE_TABLE,
    QN_TABLE,
    count_pack,
    count_qn,
    enumerate_pack,
    generator_counts,
    indecomposable_counts,
    primitive_dims,
)
from src.algebra.morphisms import theta_q
from src.models.matrices import PackedMatrix
from src.verify.harness import VerifyContext, identity
from src.verify.samples import compositions_upto


@identity("counts", "pack-table", bound=5)
def pack_table(ctx: VerifyContext) -> None:
    upto = ctx.cap(5)
    ctx.expect(count_pack(upto), PACK_TABLE.truncate(upto), upto=upto)


@identity("counts", "primitive-table", bound=5)
def primitive_table(ctx: VerifyContext) -> None:
    upto = ctx.cap(5)
    ctx.expect(primitive_dims(upto), PRIMITIVE_TABLE.truncate(upto), upto=upto)
    small = ctx.cap(4)
    ctx.expect(indecomposable_counts(small), primitive_dims(small), upto=small, law="indecomposables")


@identity("counts", "generator-table", bound=5)
def generator_table(ctx: VerifyContext) -> None:
    upto = ctx.cap(5)
    ctx.expect(generator_counts(upto), GENERATOR_TABLE.truncate(upto), upto=upto)


@identity("counts", "qn-table", bound=5)
def qn_table(ctx: VerifyContext) -> None:
    for n in range(1, ctx.cap(5) + 1):
        ctx.expect(count_qn(n), QN_TABLE[n], n=n)
    for c in compositions_upto(ctx.cap(5)):
        if c.parts:
            ctx.expect(len(theta_q(c)), QN_TABLE[len(c.parts)], c=c)


@identity("counts", "enumerate-pack", bound=5)
def enumerate_pack_shell(ctx: VerifyContext) -> None:
    for n in range(ctx.cap(5) + 1):
        shell = enumerate_pack(n)
        ctx.expect(len(set(shell)), len(shell), n=n, law="distinct")
        for m in shell:
            ctx.expect(PackedMatrix(m.entries), m, M=m, law="packed")
            ctx.expect(m.weight, n, M=m, law="weight")
        ctx.expect(shell, sorted(shell, key=PackedMatrix.sort_key), n=n, law="canonical order")
