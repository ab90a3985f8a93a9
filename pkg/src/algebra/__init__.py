# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Algebra package."""

from src.algebra.counts import IntSeries, count_pack, enumerate_pack
from src.algebra.hopfpack import (
    antipode,
    coproduct_black,
    coproduct_black_res,
    counit,
    deconcat,
    quasi_shuffle,
    searrow,
    second_coproduct,
    shuffle,
)
from src.algebra.morphisms import RationalPair
from src.algebra.realization import Grid, Monomial2

__all__ = [
    "IntSeries",
    "count_pack",
    "enumerate_pack",
    "antipode",
    "coproduct_black",
    "coproduct_black_res",
    "counit",
    "deconcat",
    "quasi_shuffle",
    "searrow",
    "second_coproduct",
    "shuffle",
    "RationalPair",
    "Grid",
    "Monomial2",
]
