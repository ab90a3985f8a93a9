# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Command-line application factory."""

import logging

import click
from dotenv import load_dotenv

from src.config import Settings
from src.extensions import guards

load_dotenv()

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def create_app(settings: Settings | None = None) -> click.Group:
    """Create and configure the command group."""
    settings = settings or Settings.from_env()
    logging.basicConfig(level=settings.log_level.upper(), format=LOG_FORMAT)
    guards.init_app(settings)

    from src.commands import COMMANDS, build_group

    return build_group(COMMANDS)


def main() -> None:
    create_app()()
