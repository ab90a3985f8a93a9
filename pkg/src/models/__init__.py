# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Models package."""

from src.models.exactlin import LinComb, LinCombDocument, Rational
from src.models.matrices import EMPTY, Composition, Matrix, PackedMatrix
from src.models.polynomials import Polynomial1
from src.models.surjections import AdmPair, Permutation, Surjection

__all__ = [
    "LinComb",
    "LinCombDocument",
    "Rational",
    "EMPTY",
    "Composition",
    "Matrix",
    "PackedMatrix",
    "Polynomial1",
    "AdmPair",
    "Permutation",
    "Surjection",
]
