# SPDX-License-Identifier: Apache-2.0
# Copyright (2026) Beachgeek.co.uk
# Author: Ricardo Sueiras
# Apache 2.0 license

"""Pytest configuration and fixtures."""

import pytest
from click.testing import CliRunner

from src import create_app
from src.config import Settings
from src.extensions import guards
from src.models import EMPTY, PackedMatrix


@pytest.fixture(autouse=True)
def default_guards():
    """Reset the guards so flag overrides do not leak between tests."""
    guards.init_app(Settings())
    yield
    guards.init_app(Settings())


@pytest.fixture
def app():
    """Create the command group with default settings."""
    return create_app(Settings())


@pytest.fixture
def runner():
    """Create a CLI runner."""
    return CliRunner()


@pytest.fixture
def one():
    return PackedMatrix([[1]])


@pytest.fixture
def identity2():
    return PackedMatrix([[1, 0], [0, 1]])


@pytest.fixture
def empty():
    return EMPTY
