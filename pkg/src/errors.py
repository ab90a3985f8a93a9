# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Exception hierarchy and CLI exit codes."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from src.verify.harness import Counterexample


class PackedHopfError(Exception):
    """Base class for every error raised by the engine."""

    exit_code = 1


class MatrixShapeError(PackedHopfError, ValueError):
    """Malformed matrix, composition or surjection data."""

    exit_code = 2


class ParseError(PackedHopfError):
    """Text that does not parse; names the offending token."""

    exit_code = 2

    def __init__(self, message: str, token: str | None = None, position: int | None = None):
        super().__init__(message)
        self.token = token
        self.position = position


class UsageError(PackedHopfError):
    """Unknown operation name, counit kind or morphism."""

    exit_code = 2


class ResourceGuardError(PackedHopfError):
    """An enumeration would exceed a configured guard."""

    exit_code = 3

    def __init__(self, guard: str, value: int, limit: int, flag: str, env: str):
        super().__init__(
            f"{guard} guard: {value} exceeds limit {limit}; "
            f"raise it with {flag} or {env}"
        )
        self.guard = guard
        self.value = value
        self.limit = limit
        self.flag = flag
        self.env = env


class VerificationFailure(PackedHopfError):
    """First counterexample of a verified identity."""

    exit_code = 1

    def __init__(self, counterexample: Counterexample):
        super().__init__(f"{counterexample.suite}/{counterexample.identity} failed")
        self.counterexample = counterexample
