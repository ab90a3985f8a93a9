# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Surjections, quasi-shuffles, shuffles and admissible pairs."""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial, prod
from typing import NamedTuple

from src.errors import MatrixShapeError
from src.models.exactlin import Accumulator, LinComb


@dataclass(frozen=True, slots=True)
class Surjection:
    """Surjective map [k] -> [p] stored as its one-line word."""

    word: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if set(self.word) != set(range(1, len(set(self.word)) + 1)):
            raise MatrixShapeError(f"{self.word} is not a surjection onto [max]")

    @property
    def max(self) -> int:
        return max(self.word, default=0)

    def __len__(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def compose(self, other: "Surjection") -> "Surjection":
        """self ∘ other; other must land in the domain of self."""
        if other.max != len(self.word):
            raise MatrixShapeError(f"cannot compose {self} after {other}")
        return Surjection(tuple(self.word[v - 1] for v in other.word))

    def tensor(self, other: "Surjection") -> "Surjection":
        """self ⊗ other acting on disjoint blocks."""
        shift = self.max
        return type(self)(self.word + tuple(v + shift for v in other.word))

    def factorial(self) -> int:
        return prod(factorial(size) for size in Counter(self.word).values())

    def is_increasing(self) -> bool:
        return all(a <= b for a, b in zip(self.word, self.word[1:]))

    def sort_key(self) -> tuple:
        return (len(self.word), self.word)

    def to_json(self) -> list[int]:
        return list(self.word)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.word) + ")"


@dataclass(frozen=True, slots=True)
class Permutation(Surjection):
    """Bijective word on [n]."""

    def __post_init__(self):
        Surjection.__post_init__(self)
        if len(set(self.word)) != len(self.word):
            raise MatrixShapeError(f"{self.word} is not a permutation")

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.word)
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: Surjection) -> Surjection:
        result = Surjection.compose(self, other)
        if isinstance(other, Permutation):
            return Permutation(result.word)
        return result

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))


class AdmPair(NamedTuple):
    first: Surjection
    second: Surjection


@lru_cache(maxsize=None)
def _qsh_words(k: int, l: int, strict: bool) -> tuple[tuple[int, ...], ...]:
    words = []
    low = k + l if strict else max(k, l)
    for p in range(low, k + l + 1):
        universe = range(1, p + 1)
        for first in combinations(universe, k):
            rest = sorted(set(universe) - set(first))
            for shared in combinations(first, k + l - p):
                words.append(first + tuple(sorted(rest + list(shared))))
    return tuple(sorted(words))


def enumerate_qsh(k: int, l: int) -> list[Surjection]:
    """All (k,l)-quasi-shuffles in lexicographic order."""
    return [Surjection(w) for w in _qsh_words(k, l, False)]


def enumerate_sh(k: int, l: int) -> list[Permutation]:
    """All (k,l)-shuffles in lexicographic order."""
    return [Permutation(w) for w in _qsh_words(k, l, True)]


@lru_cache(maxsize=None)
def _inc_words(k: int) -> tuple[tuple[int, ...], ...]:
    if k == 0:
        return ((),)
    words = []
    for steps in product((0, 1), repeat=k - 1):
        word = [1]
        for step in steps:
            word.append(word[-1] + step)
        words.append(tuple(word))
    return tuple(sorted(words))


def enumerate_inc(k: int) -> list[Surjection]:
    """Weakly increasing surjections from [k]; the empty word when k = 0."""
    return [Surjection(w) for w in _inc_words(k)]


@lru_cache(maxsize=None)
def _adm_pairs(k: int) -> tuple[AdmPair, ...]:
    pairs = []
    for first in _inc_words(k):
        word: list[int] = []
        used: Counter = Counter()

        def extend(i: int) -> None:
            if i == k:
                pairs.append(AdmPair(Surjection(first), Surjection(tuple(word))))
                return
            for value in range(1, k + 1):
                if i and first[i] == first[i - 1] and value <= word[-1]:
                    continue
                word.append(value)
                used[value] += 1
                top = max(word)
                if top - len(used) <= k - i - 1:
                    extend(i + 1)
                word.pop()
                used[value] -= 1
                if not used[value]:
                    del used[value]

        extend(0)
    return tuple(pairs)


def enumerate_adm(k: int) -> list[AdmPair]:
    """Admissible pairs (first increasing, second strictly increasing on its fibers)."""
    return list(_adm_pairs(k))


def surj_factorial(sigma: Surjection) -> int:
    return sigma.factorial()


def hoffman_sides(k: int, l: int) -> tuple[LinComb, LinComb]:
    """Both sides of the inc/qsh versus sh/inc identity on words of length k + l."""
    left = Accumulator()
    for first in enumerate_inc(k):
        for second in enumerate_inc(l):
            weight = Fraction(1, first.factorial() * second.factorial())
            joined = first.tensor(second)
            for tau in enumerate_qsh(first.max, second.max):
                left.add_key(tau.compose(joined), weight)
    right = Accumulator()
    for sigma in enumerate_sh(k, l):
        for tau in enumerate_inc(k + l):
            right.add_key(tau.compose(sigma), Fraction(1, tau.factorial()))
    return left.result(), right.result()


def check_hoffman_identity(k: int, l: int) -> bool:
    left, right = hoffman_sides(k, l)
    return left == right


def _compose_words(outer: tuple[int, ...], inner: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(outer[v - 1] for v in inner)


def adm_triples(k: int, side: str) -> Counter:
    """Word triples of (Adm ⊗ id) ∘ Adm ("left") or (id ⊗ Adm) ∘ Adm ("right") on [k]."""
    if side not in ("left", "right"):
        raise MatrixShapeError(f"unknown side {side!r}; expected left or right")
    triples: Counter = Counter()
    for first, second in enumerate_adm(k):
        if side == "left":
            for a, b in enumerate_adm(first.max):
                key = (
                    _compose_words(a.word, first.word),
                    _compose_words(b.word, first.word),
                    second.word,
                )
                triples[key] += 1
        else:
            for a, b in enumerate_adm(second.max):
                key = (
                    first.word,
                    _compose_words(a.word, second.word),
                    _compose_words(b.word, second.word),
                )
                triples[key] += 1
    return triples
