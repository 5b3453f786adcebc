"""Fixtures for broom-turan tests."""

from __future__ import annotations

import random

import pytest

from broom_turan.config import Settings, load_settings
from broom_turan.families import make_path, make_star
from broom_turan.graph import Graph


@pytest.fixture
def rng() -> random.Random:
    """Return a seeded random generator."""
    return random.Random(20240611)


@pytest.fixture
def parallel_settings() -> Settings:
    """Return settings that split work across two worker processes."""
    return load_settings({"threads": 2, "split_level": 3})


@pytest.fixture
def star5() -> Graph:
    """Return the star S_5."""
    return make_star(5)


@pytest.fixture
def path4() -> Graph:
    """Return the path P_4."""
    return make_path(4)


@pytest.fixture
def settings_file(tmp_path):
    """Write a settings file and return its path."""
    path = tmp_path / "settings.json"
    path.write_text('{"enumeration_cap": 8, "threads": 1}', encoding="utf-8")
    return path
