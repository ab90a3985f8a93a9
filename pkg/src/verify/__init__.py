# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Verification harness; importing the suite modules registers their identities."""

from src.verify import axioms, combinatorics, counts, duality, morphisms, realization
from src.verify.harness import (
    REGISTRY,
    SUITES,
    Counterexample,
    IdentityResult,
    VerifyContext,
    run_suite,
)

__all__ = [
    "REGISTRY",
    "SUITES",
    "Counterexample",
    "IdentityResult",
    "VerifyContext",
    "run_suite",
    "axioms",
    "combinatorics",
    "counts",
    "duality",
    "morphisms",
    "realization",
]
