# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Runtime settings read from the environment."""

import os

from pydantic import BaseModel, ConfigDict, Field, field_validator

ENV_PREFIX = "PMH_"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    """Resource guards and logging level."""

    model_config = ConfigDict(frozen=True)

    max_weight: int = Field(default=6, ge=0)
    black_max_weight: int = Field(default=24, ge=0)
    qsym_delta_max_degree: int = Field(default=12, ge=0)
    theta_max_length: int = Field(default=6, ge=0)
    kxy_max_part: int = Field(default=5, ge=0)
    delta_max_dim: int = Field(default=4, ge=0)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return level

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from PMH_* variables, falling back to defaults."""
        values = {}
        for name in cls.model_fields:
            raw = os.getenv(ENV_PREFIX + name.upper())
            if raw is not None and raw.strip():
                values[name] = raw.strip()
        return cls(**values)
