# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Bounded input families shared by the suites."""

from src.algebra.counts import enumerate_pack
from src.models.matrices import Composition, PackedMatrix, compositions_of


def packed_upto(weight: int) -> list[PackedMatrix]:
    return [m for n in range(weight + 1) for m in enumerate_pack(n)]


def packed_pairs(each: int, total: int | None = None):
    """Pairs (M, M') with each weight <= each and the sum <= total."""
    total = 2 * each if total is None else total
    for a in packed_upto(each):
        for b in packed_upto(min(each, total - a.weight)):
            yield a, b


def packed_triples(total: int):
    """(a, b, N) with weight(a) + weight(b) = weight(N) <= total."""
    for w in range(total + 1):
        targets = enumerate_pack(w)
        for i in range(w + 1):
            for a in enumerate_pack(i):
                for b in enumerate_pack(w - i):
                    yield a, b, targets


def compositions_upto(weight: int) -> list[Composition]:
    return [c for n in range(weight + 1) for c in compositions_of(n)]
