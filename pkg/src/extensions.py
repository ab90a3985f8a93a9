# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Process-wide extensions initialised by the application factory."""

import logging

from src.config import ENV_PREFIX, Settings
from src.errors import ResourceGuardError

logger = logging.getLogger(__name__)

GUARD_FLAGS = {
    "max_weight": "--max-weight",
    "black_max_weight": "--black-max-weight",
    "qsym_delta_max_degree": "--qsym-max-degree",
    "theta_max_length": "--theta-max-length",
    "kxy_max_part": "--kxy-max-part",
    "delta_max_dim": "--delta-max-dim",
}


class Guards:
    """Resource guards on enumeration sizes."""

    def __init__(self, settings: Settings | None = None):
        self.init_app(settings or Settings())

    def init_app(self, settings: Settings) -> None:
        self._defaults = {name: getattr(settings, name) for name in GUARD_FLAGS}
        self._limits = dict(self._defaults)

    def limit(self, name: str) -> int:
        return self._limits[name]

    def set_limit(self, name: str, value: int) -> None:
        """Override a guard, e.g. from a CLI flag."""
        if value > self._defaults[name]:
            logger.warning("%s raised from %d to %d", name, self._defaults[name], value)
        self._limits[name] = value

    def check(self, name: str, value: int) -> None:
        """Raise ResourceGuardError when value exceeds the named guard."""
        limit = self._limits[name]
        if value > limit:
            raise ResourceGuardError(
                name, value, limit, GUARD_FLAGS[name], ENV_PREFIX + name.upper()
            )


guards = Guards()
