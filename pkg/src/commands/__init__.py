# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Commands package."""

from src.commands.compute import antipode_command, cop, mul, pair
from src.commands.group import PackedHopfGroup, build_group
from src.commands.morph import morph, sig
from src.commands.tables import count, enum
from src.commands.verify import verify

COMMANDS = [mul, cop, antipode_command, pair, morph, sig, count, verify, enum]

__all__ = ["COMMANDS", "PackedHopfGroup", "build_group"]
