# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Polynomial realization of packed matrices over finite ordered alphabets."""

import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any

from pydantic import BaseModel, field_validator, model_validator

from src.errors import MatrixShapeError, ParseError
from src.models.exactlin import LinComb, as_lincomb, format_rational
from src.models.matrices import PackedMatrix


@dataclass(frozen=True, slots=True)
class Monomial2:
    """Monomial in the t_{i,j}; exponents keyed by (i, j), all positive."""

    exponents: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self):
        items = tuple(sorted(dict(self.exponents).items()))
        if any(e < 1 for _, e in items):
            raise MatrixShapeError("monomial exponents must be positive")
        object.__setattr__(self, "exponents", items)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def sort_key(self) -> tuple:
        return (self.degree, self.exponents)

    def to_json(self) -> list[list[int]]:
        return [[i, j, e] for (i, j), e in self.exponents]

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return "*".join(
            f"t_{{{i},{j}}}" + (f"^{e}" if e > 1 else "") for (i, j), e in self.exponents
        )


def phi_formal(matrix: PackedMatrix, m: int, n: int) -> LinComb:
    """Φ_M over the alphabets [1..m] and [1..n]; 0 when they are too short."""
    terms = []
    for rows in combinations(range(1, m + 1), matrix.rows):
        for cols in combinations(range(1, n + 1), matrix.cols):
            terms.append(
                (
                    Monomial2(
                        tuple(
                            ((rows[r], cols[s]), v)
                            for r, row in enumerate(matrix.entries)
                            for s, v in enumerate(row)
                            if v
                        )
                    ),
                    1,
                )
            )
    return LinComb(terms)


def classify(monomial: Monomial2) -> PackedMatrix:
    """The packed matrix read off the ordered row and column indices used."""
    rows = sorted({i for (i, _), _ in monomial.exponents})
    cols = sorted({j for (_, j), _ in monomial.exponents})
    position = dict(monomial.exponents)
    return PackedMatrix._trusted(
        tuple(tuple(position.get((i, j), 0) for j in cols) for i in rows)
    )


@dataclass(frozen=True)
class Grid:
    """m×n grid of rationals standing for the t_{i,j}."""

    rows: int
    cols: int
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise MatrixShapeError(f"grid must be nonempty, got {self.rows}x{self.cols}")
        if len(self.values) != self.rows or any(len(r) != self.cols for r in self.values):
            raise MatrixShapeError("grid values do not match its dimensions")

    @classmethod
    def of(cls, values: Sequence[Sequence[int | Fraction]]) -> "Grid":
        grid = tuple(tuple(Fraction(v) for v in row) for row in values)
        return cls(len(grid), len(grid[0]) if grid else 0, grid)

    def __str__(self) -> str:
        return "[" + ";".join(" ".join(format_rational(v) for v in row) for row in self.values) + "]"


class GridDocument(BaseModel):
    """JSON grid file {"rows": m, "cols": n, "values": [["p/q", ...], ...]}."""

    rows: int
    cols: int
    values: list[list[str]]

    @field_validator("values", mode="before")
    @classmethod
    def _stringify(cls, value: Any) -> Any:
        if isinstance(value, list):
            return [[str(v) for v in row] if isinstance(row, list) else row for row in value]
        return value

    @model_validator(mode="after")
    def _check_shape(self) -> "GridDocument":
        if self.rows < 1 or self.cols < 1:
            raise ValueError("rows and cols must be positive")
        if len(self.values) != self.rows:
            raise ValueError(f"expected {self.rows} rows, found {len(self.values)}")
        for r, row in enumerate(self.values, start=1):
            if len(row) != self.cols:
                raise ValueError(f"ragged row at row {r}")
        return self

    def to_grid(self) -> Grid:
        values = []
        for r, row in enumerate(self.values, start=1):
            parsed = []
            for c, text in enumerate(row, start=1):
                try:
                    parsed.append(Fraction(text.strip()))
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(
                        f"invalid rational {text!r} at row {r}, column {c}", token=text
                    ) from exc
            values.append(tuple(parsed))
        return Grid(self.rows, self.cols, tuple(values))

    @classmethod
    def from_grid(cls, grid: Grid) -> "GridDocument":
        return cls(
            rows=grid.rows,
            cols=grid.cols,
            values=[[format_rational(v) for v in row] for row in grid.values],
        )


def evaluate(matrix: PackedMatrix, grid: Grid) -> Fraction:
    """Φ_M with t_{i,j} := grid[i][j]."""
    cells = [(r, s, v) for r, row in enumerate(matrix.entries) for s, v in enumerate(row) if v]
    total = Fraction(0)
    for rows in combinations(range(grid.rows), matrix.rows):
        for cols in combinations(range(grid.cols), matrix.cols):
            term = Fraction(1)
            for r, s, v in cells:
                term *= grid.values[rows[r]][cols[s]] ** v
                if not term:
                    break
            total += term
    return total


def evaluate_lincomb(value: Any, grid: Grid) -> Fraction:
    return sum(
        (coeff * evaluate(matrix, grid) for matrix, coeff in as_lincomb(value).items()),
        Fraction(0),
    )


def evaluate_qsym(value: Any, grid: Grid) -> Fraction:
    """φ_ν with the grid entries read row by row as one ordered alphabet."""
    variables = [t for row in grid.values for t in row]
    total = Fraction(0)
    for nu, coeff in as_lincomb(value).items():
        # placed[j]: sum over the ways to put the first j parts on increasing cells
        placed = [Fraction(1)] + [Fraction(0)] * len(nu.parts)
        for t in variables:
            for j in range(len(nu.parts), 0, -1):
                placed[j] += placed[j - 1] * t ** nu.parts[j - 1]
        total += coeff * placed[-1]
    return total


def block_diag_grid(upper: Grid, lower: Grid) -> Grid:
    """diag(upper, lower) with zero off-diagonal blocks."""
    top = tuple(row + (Fraction(0),) * lower.cols for row in upper.values)
    bottom = tuple((Fraction(0),) * upper.cols + row for row in lower.values)
    return Grid(upper.rows + lower.rows, upper.cols + lower.cols, top + bottom)


def kronecker_grid(u: Grid, v: Grid) -> Grid:
    """g[(i1,i2)][(j1,j2)] = u[i1][j1] * v[i2][j2], pairs in lexicographic order."""
    values = tuple(
        tuple(
            u.values[i1][j1] * v.values[i2][j2]
            for j1 in range(u.cols)
            for j2 in range(v.cols)
        )
        for i1 in range(u.rows)
        for i2 in range(v.rows)
    )
    return Grid(u.rows * v.rows, u.cols * v.cols, values)


def transpose_grid(grid: Grid) -> Grid:
    return Grid(grid.cols, grid.rows, tuple(zip(*grid.values)))


def random_grid(rng: random.Random, rows: int, cols: int) -> Grid:
    """Grid of small random rationals."""
    return Grid.of(
        [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(cols)] for _ in range(rows)]
    )
