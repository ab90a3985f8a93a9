# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Exact rational scalars and sparse linear combinations."""

from collections.abc import Callable, Hashable, Iterable, Mapping
from fractions import Fraction
from itertools import product
from typing import Any

from pydantic import BaseModel

Rational = Fraction
Scalar = int | Fraction


class LinComb:
    """Finite formal sum of hashable basis keys with rational coefficients.

    Keys are basis objects exposing ``sort_key()`` or tuples of them
    (tensor keys). Zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, Scalar] | Iterable[tuple[Hashable, Scalar]] = ()):
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Hashable, Fraction] = {}
        for key, coeff in pairs:
            acc[key] = acc.get(key, 0) + Fraction(coeff)
        self._terms = {key: coeff for key, coeff in acc.items() if coeff != 0}

    @classmethod
    def _trusted(cls, terms: dict[Hashable, Fraction]) -> "LinComb":
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "LinComb":
        return cls._trusted({})

    @classmethod
    def monomial(cls, key: Hashable, coeff: Scalar = 1) -> "LinComb":
        return cls({key: coeff})

    def __getitem__(self, key: Hashable) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def sorted_items(self) -> list[tuple[Hashable, Fraction]]:
        """Terms in canonical key order."""
        return sorted(self._terms.items(), key=lambda item: canonical_key(item[0]))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            total = acc.get(key, 0) + coeff
            if total:
                acc[key] = total
            else:
                acc.pop(key, None)
        return LinComb._trusted(acc)

    def __neg__(self) -> "LinComb":
        return LinComb._trusted({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "LinComb":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if scalar == 0:
            return LinComb.zero()
        return LinComb._trusted({key: coeff * scalar for key, coeff in self._terms.items()})

    __rmul__ = __mul__

    def map_keys(self, fn: Callable[[Hashable], Hashable]) -> "LinComb":
        """Apply a key-to-key map, merging collisions."""
        return LinComb((fn(key), coeff) for key, coeff in self._terms.items())

    def apply(self, fn: Callable[[Hashable], "LinComb"]) -> "LinComb":
        """Linear extension of a key-to-LinComb map."""
        acc = Accumulator()
        for key, coeff in self._terms.items():
            acc.add(fn(key), coeff)
        return acc.result()

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"LinComb({to_text(self)!r})"


class Accumulator:
    """Mutable sum used while building a LinComb."""

    def __init__(self):
        self._terms: dict[Hashable, Fraction] = {}

    def add_key(self, key: Hashable, coeff: Scalar = 1) -> None:
        self._terms[key] = self._terms.get(key, 0) + coeff

    def add(self, value: LinComb, coeff: Scalar = 1) -> None:
        for key, c in value.items():
            self._terms[key] = self._terms.get(key, 0) + c * coeff

    def result(self) -> LinComb:
        return LinComb._trusted(
            {key: Fraction(coeff) for key, coeff in self._terms.items() if coeff != 0}
        )


def as_lincomb(value: Any) -> LinComb:
    """Promote a basis key to its monomial; LinComb values pass through."""
    if isinstance(value, LinComb):
        return value
    return LinComb.monomial(value)


def add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def scale(c: Scalar, a: LinComb) -> LinComb:
    return a * c


def tensor(*factors: Any) -> LinComb:
    """Tensor product; keys of the result are tuples, one entry per factor."""
    factors = [as_lincomb(f) for f in factors]
    acc: dict[Hashable, Fraction] = {}
    for combo in product(*(f.items() for f in factors)):
        key = tuple(k for k, _ in combo)
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        acc[key] = acc.get(key, 0) + coeff
    return LinComb((k, c) for k, c in acc.items())


def bilinear(fn: Callable[[Hashable, Hashable], LinComb], a: Any, b: Any) -> LinComb:
    """Bilinear extension of a basis-level product."""
    a, b = as_lincomb(a), as_lincomb(b)
    acc = Accumulator()
    for ka, ca in a.items():
        for kb, cb in b.items():
            acc.add(fn(ka, kb), ca * cb)
    return acc.result()


def pairing(a: Any, b: Any) -> Fraction:
    """Delta pairing <k, k'> = 1 iff k == k', extended bilinearly."""
    a, b = as_lincomb(a), as_lincomb(b)
    if len(b) < len(a):
        a, b = b, a
    return sum((c * b[k] for k, c in a.items()), Fraction(0))


def apply_leg(t: LinComb, leg: int, fn: Callable[[Hashable], LinComb]) -> LinComb:
    """Apply a linear map to one leg of a tensor, keeping the arity."""
    acc = Accumulator()
    for key, coeff in t.items():
        for image, c in fn(key[leg]).items():
            acc.add_key(key[:leg] + (image,) + key[leg + 1:], coeff * c)
    return acc.result()


def split_leg(t: LinComb, leg: int, fn: Callable[[Hashable], LinComb]) -> LinComb:
    """Apply a coproduct to one leg, splicing its two legs in place."""
    acc = Accumulator()
    for key, coeff in t.items():
        for image, c in fn(key[leg]).items():
            acc.add_key(key[:leg] + tuple(image) + key[leg + 1:], coeff * c)
    return acc.result()


def map_tensor(t: LinComb, fn: Callable[[Hashable], LinComb]) -> LinComb:
    """Apply the same linear map to every leg (f ⊗ f ⊗ ...)."""
    acc = Accumulator()
    for key, coeff in t.items():
        acc.add(tensor(*(fn(k) for k in key)), coeff)
    return acc.result()


def legwise(a: LinComb, b: LinComb, fn: Callable[[Hashable, Hashable], LinComb]) -> LinComb:
    """Leg-wise product of two tensors of the same arity."""
    acc = Accumulator()
    for ka, ca in a.items():
        for kb, cb in b.items():
            legs = [fn(x, y) for x, y in zip(ka, kb, strict=True)]
            acc.add(tensor(*legs), ca * cb)
    return acc.result()


def canonical_key(key: Hashable) -> tuple:
    if isinstance(key, tuple):
        return tuple(canonical_key(k) for k in key)
    return key.sort_key()


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def key_text(key: Hashable) -> str:
    if isinstance(key, tuple):
        return " ⊗ ".join(key_text(k) for k in key)
    return str(key)


def to_text(a: LinComb) -> str:
    """Canonical text: "2*[1 0;0 1] - 1/2*[2]", "0" when empty."""
    items = a.sorted_items()
    if not items:
        return "0"
    parts = []
    for index, (key, coeff) in enumerate(items):
        magnitude = abs(coeff)
        body = key_text(key) if magnitude == 1 else f"{format_rational(magnitude)}*{key_text(key)}"
        if index == 0:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"{'-' if coeff < 0 else '+'} {body}")
    return " ".join(parts)


def key_json(key: Hashable) -> Any:
    if isinstance(key, tuple):
        return [key_json(k) for k in key]
    return key.to_json()


class TermDocument(BaseModel):
    coeff: str
    key: Any


class LinCombDocument(BaseModel):
    """JSON interchange form {"terms": [{"coeff": "p/q", "key": ...}]}."""

    terms: list[TermDocument]

    @classmethod
    def from_lincomb(cls, a: LinComb) -> "LinCombDocument":
        return cls(
            terms=[
                TermDocument(coeff=format_rational(coeff), key=key_json(key))
                for key, coeff in a.sorted_items()
            ]
        )
