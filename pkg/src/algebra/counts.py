# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Packed-matrix shells and the counting series built from them."""

import logging
from dataclasses import dataclass
from functools import lru_cache

from src.algebra.hopfpack import is_indecomposable
from src.extensions import guards
from src.models.matrices import EMPTY, PackedMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntSeries:
    """Integer sequence indexed from ``start``."""

    start: int
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n - self.start]

    def indices(self) -> range:
        return range(self.start, self.start + len(self.values))

    def truncate(self, upto: int) -> "IntSeries":
        return IntSeries(self.start, self.values[: max(0, upto - self.start + 1)])

    def to_tsv(self) -> str:
        return "\n".join(f"{n}\t{v}" for n, v in zip(self.indices(), self.values))


PACK_TABLE = IntSeries(
    0, (1, 1, 5, 33, 281, 2961, 37277, 546193, 9132865, 171634161, 3581539973)
)
PRIMITIVE_TABLE = IntSeries(
    1, (1, 4, 24, 204, 2224, 29156, 443320, 7646684, 147367456, 3137652676)
)
GENERATOR_TABLE = IntSeries(
    1, (1, 4, 28, 238, 2568, 32938, 491700, 8350536, 158944092, 3350761964)
)
QN_TABLE = IntSeries(
    1, (1, 4, 24, 196, 2016, 24976, 361792, 5997872, 111969552, 2324081728)
)


def _fill(rows: int, cols: int, weight: int, cap: int):
    """Grids of the given shape and weight with no zero row or column."""
    cells = rows * cols
    grid = [0] * cells
    col_sums = [0] * cols

    def place(idx: int, remaining: int, row_has: bool):
        if idx == cells:
            if remaining == 0:
                yield tuple(tuple(grid[i * cols:(i + 1) * cols]) for i in range(rows))
            return
        i, j = divmod(idx, cols)
        last_in_row = j == cols - 1
        top = min(remaining, cap)
        for value in range(top + 1):
            now_row = row_has or value > 0
            if last_in_row and not now_row:
                continue
            grid[idx] = value
            col_sums[j] += value
            rows_need = (rows - i - 1) + (0 if now_row or last_in_row else 1)
            cols_need = sum(1 for s in col_sums if s == 0)
            left = remaining - value
            if left >= max(rows_need, cols_need) and (i < rows - 1 or cols_need <= cols - j - 1):
                yield from place(idx + 1, left, False if last_in_row else now_row)
            col_sums[j] -= value
        grid[idx] = 0

    yield from place(0, weight, False)


@lru_cache(maxsize=None)
def _pack_shell(n: int, cap: int) -> tuple[PackedMatrix, ...]:
    if n == 0:
        return (EMPTY,)
    shell = []
    for rows in range(1, n + 1):
        for cols in range(1, n + 1):
            shell.extend(PackedMatrix._trusted(g) for g in _fill(rows, cols, n, cap))
    shell.sort(key=PackedMatrix.sort_key)
    logger.debug("enumerated %d packed matrices of weight %d (max entry %d)", len(shell), n, cap)
    return tuple(shell)


def enumerate_pack(n: int, max_entry: int | None = None) -> list[PackedMatrix]:
    """All packed matrices of weight n in canonical order."""
    guards.check("max_weight", n)
    return list(_pack_shell(n, n if max_entry is None else min(max_entry, n)))


def count_pack(upto: int) -> IntSeries:
    return IntSeries(0, tuple(len(enumerate_pack(n)) for n in range(upto + 1)))


def _inverse(series: list[int], upto: int) -> list[int]:
    inv = [1] + [0] * upto
    for n in range(1, upto + 1):
        inv[n] = -sum(series[k] * inv[n - k] for k in range(1, n + 1))
    return inv


def primitive_dims(upto: int) -> IntSeries:
    """P with D = 1/(1 - P)."""
    d = list(count_pack(upto).values)
    inv = _inverse(d, upto)
    return IntSeries(1, tuple(-inv[n] for n in range(1, upto + 1)))


def indecomposable_counts(upto: int) -> IntSeries:
    """Brute-force count of ↘-indecomposable packed matrices per weight."""
    return IntSeries(
        1,
        tuple(sum(1 for m in enumerate_pack(n) if is_indecomposable(m)) for n in range(1, upto + 1)),
    )


def euler_generators(series: list[int], upto: int) -> list[int]:
    """g with Π (1 - t^n)^(-g_n) = Σ series_n t^n, by order."""
    c = [0] * (upto + 1)
    g = [0] * (upto + 1)
    for n in range(1, upto + 1):
        c[n] = n * series[n] - sum(c[k] * series[n - k] for k in range(1, n))
        rest = c[n] - sum(d * g[d] for d in range(1, n) if n % d == 0)
        if rest % n:
            raise ArithmeticError(f"non-integral generator count at weight {n}")
        g[n] = rest // n
    return g


def generator_counts(upto: int) -> IntSeries:
    d = list(count_pack(upto).values)
    return IntSeries(1, tuple(euler_generators(d, upto)[1:]))


def count_qn(n: int) -> int:
    """Packed matrices with exactly n nonzero entries, via 0/1 supports."""
    guards.check("theta_max_length", n)
    return len(enumerate_pack(n, max_entry=1))
