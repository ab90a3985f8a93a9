# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Identity registry and runner for the verification suites."""

import logging
import random
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from pydantic import BaseModel
from sympy import Poly

from src.errors import UsageError, VerificationFailure
from src.extensions import guards
from src.models.exactlin import LinComb, format_rational, to_text
from src.models.polynomials import format_polynomial

logger = logging.getLogger(__name__)

SUITES = ("axioms", "duality", "morphisms", "realization", "counts", "combinatorics")


class Counterexample(BaseModel):
    """Inputs and both sides of the first violated instance."""

    suite: str
    identity: str
    inputs: dict[str, str]
    lhs: str
    rhs: str


def describe(value: Any) -> str:
    if isinstance(value, LinComb):
        return to_text(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Poly):
        return format_polynomial(value)
    return str(value)


@dataclass
class VerifyContext:
    """Per-identity state: weight cap, seeded randomness, case counter."""

    suite: str
    identity: str
    max_weight: int
    seed: int = 0
    cases: int = 0
    rng: random.Random = field(init=False)

    def __post_init__(self):
        self.rng = random.Random(self.seed)

    def cap(self, bound: int) -> int:
        return min(bound, self.max_weight)

    def random_rational(self) -> Fraction:
        return Fraction(self.rng.randint(-9, 9), self.rng.randint(1, 5))

    def expect(self, lhs: Any, rhs: Any, **inputs: Any) -> None:
        """Count one case; raise VerificationFailure when the sides differ."""
        self.cases += 1
        if lhs != rhs:
            raise VerificationFailure(
                Counterexample(
                    suite=self.suite,
                    identity=self.identity,
                    inputs={name: describe(v) for name, v in inputs.items()},
                    lhs=describe(lhs),
                    rhs=describe(rhs),
                )
            )

    def expect_true(self, condition: bool, **inputs: Any) -> None:
        self.expect(condition, True, **inputs)


@dataclass(frozen=True)
class Identity:
    suite: str
    name: str
    bound: int
    check: Callable[[VerifyContext], None]


@dataclass(frozen=True)
class IdentityResult:
    suite: str
    name: str
    cases: int
    weight: int

    def summary(self) -> str:
        return f"{self.suite}\t{self.name}\tok\t{self.cases} cases\tweight<={self.weight}"


REGISTRY: dict[str, list[Identity]] = {suite: [] for suite in SUITES}


def identity(suite: str, name: str, bound: int):
    """Register a check under a suite; bound is its default weight limit."""

    def decorator(check: Callable[[VerifyContext], None]):
        REGISTRY[suite].append(Identity(suite, name, bound, check))
        return check

    return decorator


def run_identity(item: Identity, max_weight: int, seed: int = 0) -> IdentityResult:
    ctx = VerifyContext(item.suite, item.name, max_weight, seed)
    item.check(ctx)
    logger.info("%s/%s: %d cases", item.suite, item.name, ctx.cases)
    return IdentityResult(item.suite, item.name, ctx.cases, ctx.cap(item.bound))


def run_suite(
    suite: str,
    max_weight: int,
    seed: int = 0,
    report: Callable[[IdentityResult], None] | None = None,
) -> list[IdentityResult]:
    """Run every identity of a suite in registration order."""
    if suite not in REGISTRY:
        raise UsageError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    # the suite weight may not exceed the shell guard set by the group flag
    guards.check("max_weight", max_weight)
    results = []
    for item in REGISTRY[suite]:
        result = run_identity(item, max_weight, seed)
        if report:
            report(result)
        results.append(result)
    return results
