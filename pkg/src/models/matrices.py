# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Matrix carrier types, packing, transpose and reading words."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from src.errors import MatrixShapeError

Grid = tuple[tuple[int, ...], ...]


class Matrix:
    """Rectangular grid of nonnegative integers.

    Only the empty matrix has zero extent; a k×0 or 0×l grid is rejected.
    Equality and hashing depend on the entries alone, so a Matrix and a
    PackedMatrix with the same entries are the same basis key.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[Iterable[int]] = ()):
        grid = tuple(tuple(row) for row in entries)
        if grid and not grid[0]:
            raise MatrixShapeError(f"{len(grid)}x0 matrix is not allowed")
        for r, row in enumerate(grid, start=1):
            if len(row) != len(grid[0]):
                raise MatrixShapeError(f"ragged row at row {r}")
            for value in row:
                if isinstance(value, bool) or not isinstance(value, int):
                    raise MatrixShapeError(f"entry {value!r} at row {r} is not an integer")
                if value < 0:
                    raise MatrixShapeError(f"negative entry {value} at row {r}")
        self._entries = grid
        self._validate()

    def _validate(self) -> None:
        pass

    @classmethod
    def _trusted(cls, grid: Grid) -> "Matrix":
        obj = object.__new__(cls)
        obj._entries = grid
        return obj

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        if (rows == 0) != (cols == 0):
            raise MatrixShapeError(f"{rows}x{cols} matrix is not allowed")
        return Matrix._trusted(tuple((0,) * cols for _ in range(rows)))

    @property
    def entries(self) -> Grid:
        return self._entries

    @property
    def rows(self) -> int:
        return len(self._entries)

    @property
    def cols(self) -> int:
        return len(self._entries[0]) if self._entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def weight(self) -> int:
        return sum(sum(row) for row in self._entries)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self._entries[i][j]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self._entries)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self._entries))

    def max_entry(self) -> int:
        return max((max(row) for row in self._entries), default=0)

    def is_packed(self) -> bool:
        return all(any(row) for row in self._entries) and all(
            any(col) for col in zip(*self._entries)
        )

    def sort_key(self) -> tuple:
        flat = tuple(v for row in self._entries for v in row)
        return (self.weight, self.rows, self.cols, flat)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self._entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __lt__(self, other: "Matrix") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "[" + ";".join(" ".join(str(v) for v in row) for row in self._entries) + "]"

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self}')"


class PackedMatrix(Matrix):
    """Matrix with no zero row and no zero column; basis of H_Pack."""

    __slots__ = ()

    def _validate(self) -> None:
        if not self.is_packed():
            raise MatrixShapeError(f"{self} has a zero row or column")


EMPTY = PackedMatrix(())


@dataclass(frozen=True, slots=True)
class Composition:
    """Finite sequence of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        for part in self.parts:
            if isinstance(part, bool) or not isinstance(part, int) or part < 1:
                raise MatrixShapeError(f"composition part {part!r} is not a positive integer")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def concat(self, other: "Composition") -> "Composition":
        return Composition(self.parts + other.parts)

    def sort_key(self) -> tuple:
        return (self.size, len(self.parts), self.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def compositions_of(n: int) -> list[Composition]:
    """All compositions of n in canonical order."""
    if n == 0:
        return [Composition()]
    result = []
    for cuts in product((False, True), repeat=n - 1):
        parts, current = [], 1
        for cut in cuts:
            if cut:
                parts.append(current)
                current = 1
            else:
                current += 1
        parts.append(current)
        result.append(Composition(tuple(parts)))
    return sorted(result, key=Composition.sort_key)


def weak_compositions(n: int, parts: int):
    """Length-`parts` tuples of nonnegative integers summing to n."""
    for bars in combinations_with_replacement(range(n + 1), parts - 1):
        edges = (0,) + bars + (n,)
        yield tuple(edges[i + 1] - edges[i] for i in range(parts))


def weight(matrix: Matrix) -> int:
    return matrix.weight


def pack(matrix: Matrix) -> PackedMatrix:
    """Delete zero rows and zero columns."""
    if isinstance(matrix, PackedMatrix):
        return matrix
    kept_cols = [j for j, col in enumerate(zip(*matrix.entries)) if any(col)]
    grid = tuple(
        tuple(row[j] for j in kept_cols) for row in matrix.entries if any(row)
    )
    return PackedMatrix._trusted(grid)


def transpose(matrix: Matrix) -> Matrix:
    return type(matrix)._trusted(tuple(zip(*matrix.entries)))


def comp(matrix: Matrix) -> Composition:
    """Row-major reading word with the zeros deleted."""
    return Composition(tuple(v for row in matrix.entries for v in row if v))


def map_matrix(word: Sequence[int], codomain: int | None = None) -> Matrix:
    """0/1 matrix of a map [k] -> [l] with entry (i, j) = [i == alpha(j)]."""
    word = tuple(word)
    l = max(word, default=0) if codomain is None else codomain
    if not word:
        if l:
            raise MatrixShapeError(f"empty map into [{l}] has no matrix")
        return EMPTY
    if min(word) < 1 or max(word) > l:
        raise MatrixShapeError(f"map {word} does not land in [{l}]")
    grid = tuple(tuple(int(value == i) for value in word) for i in range(1, l + 1))
    if set(word) == set(range(1, l + 1)):
        return PackedMatrix._trusted(grid)
    return Matrix._trusted(grid)


def diag_of(matrix: Matrix) -> Composition | None:
    """Diagonal of a diagonal matrix, None otherwise."""
    if matrix.rows != matrix.cols:
        return None
    for i, row in enumerate(matrix.entries):
        if any(v for j, v in enumerate(row) if j != i):
            return None
    if any(matrix[i, i] == 0 for i in range(matrix.rows)):
        return None
    return Composition(tuple(matrix[i, i] for i in range(matrix.rows)))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Ordinary matrix product."""
    if a.cols != b.rows:
        raise MatrixShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    columns = tuple(zip(*b.entries))
    grid = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in columns) for row in a.entries
    )
    if grid and not grid[0]:
        raise MatrixShapeError(f"product has shape {a.rows}x0")
    return Matrix._trusted(grid)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    """Block-diagonal matrix (a 0; 0 b)."""
    pad_right = (0,) * b.cols
    pad_left = (0,) * a.cols
    grid = tuple(row + pad_right for row in a.entries) + tuple(
        pad_left + row for row in b.entries
    )
    cls = PackedMatrix if isinstance(a, PackedMatrix) and isinstance(b, PackedMatrix) else Matrix
    return cls._trusted(grid)


def add_matrices(a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise MatrixShapeError(f"shapes {a.shape} and {b.shape} differ")
    return Matrix._trusted(
        tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a.entries, b.entries))
    )


def sandwich(matrix: Matrix, row_map: Sequence[int], col_map: Sequence[int]) -> Matrix:
    """mu(row_map) . matrix . mu(col_map)^T for surjections on rows and columns.

    The entry (i, j) of matrix is added at (row_map[i], col_map[j]).
    """
    height = max(row_map, default=0)
    width = max(col_map, default=0)
    grid = [[0] * width for _ in range(height)]
    for i, row in enumerate(matrix.entries):
        target = grid[row_map[i] - 1]
        for j, value in enumerate(row):
            if value:
                target[col_map[j] - 1] += value
    result = tuple(tuple(row) for row in grid)
    if isinstance(matrix, PackedMatrix):
        return PackedMatrix._trusted(result)
    return Matrix._trusted(result)


def diagonal(mu: Composition) -> PackedMatrix:
    """Diagonal matrix with the parts of mu on the diagonal."""
    n = len(mu.parts)
    return PackedMatrix._trusted(
        tuple(tuple(mu.parts[i] if i == j else 0 for j in range(n)) for i in range(n))
    )
