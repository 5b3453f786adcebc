"""Tests for settings loading."""

from __future__ import annotations

import pytest

from broom_turan.config import (
    DEFAULT_SETTINGS,
    Settings,
    load_settings,
    load_settings_file,
    resolve_settings,
)
from broom_turan.const import CONF_ENUMERATION_CAP, CONF_THREADS
from broom_turan.errors import InvalidParameterError, MalformedInputError


def test_defaults() -> None:
    """Test the default settings."""
    settings = load_settings()
    assert settings == DEFAULT_SETTINGS
    assert settings.canonical_cap == 12
    assert settings.enumeration_cap == 10
    assert settings.oracle_cap == 10
    assert settings.rset_work_cap == 250_000
    assert settings.threads == 1
    assert settings.split_level == 5


def test_overlay_and_coercion() -> None:
    """Test options overlay the defaults and numeric strings are coerced."""
    settings = load_settings({CONF_THREADS: "4", CONF_ENUMERATION_CAP: 8})
    assert settings.threads == 4
    assert settings.enumeration_cap == 8
    assert settings.canonical_cap == 12


@pytest.mark.parametrize(
    "options",
    [
        {"threads": 0},
        {"threads": 65},
        {"enumeration_cap": 13},
        {"canonical_cap": "many"},
        {"colour": 1},
    ],
)
def test_invalid_options(options: dict) -> None:
    """Test out-of-range values and unknown keys are rejected."""
    with pytest.raises(InvalidParameterError):
        load_settings(options)


def test_replace_revalidates() -> None:
    """Test replace returns validated copies."""
    settings = DEFAULT_SETTINGS.replace(threads=3)
    assert settings.threads == 3
    assert DEFAULT_SETTINGS.threads == 1
    with pytest.raises(InvalidParameterError):
        DEFAULT_SETTINGS.replace(split_level=0)


def test_as_options_round_trips() -> None:
    """Test the option mapping reloads to equal settings."""
    settings = Settings(oracle_cap=7, threads=2)
    assert load_settings(settings.as_options()) == settings


def test_resolve_settings() -> None:
    """Test None resolves to the defaults."""
    custom = Settings(threads=2)
    assert resolve_settings(None) is DEFAULT_SETTINGS
    assert resolve_settings(custom) is custom


def test_load_settings_file(settings_file) -> None:
    """Test reading settings from JSON."""
    settings = load_settings_file(settings_file)
    assert settings.enumeration_cap == 8
    assert settings.threads == 1


def test_load_settings_file_errors(tmp_path) -> None:
    """Test unreadable, malformed and non-object files."""
    with pytest.raises(MalformedInputError):
        load_settings_file(tmp_path / "missing.json")

    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(MalformedInputError):
        load_settings_file(broken)

    listing = tmp_path / "list.json"
    listing.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(MalformedInputError, match="JSON object"):
        load_settings_file(listing)

    invalid = tmp_path / "invalid.json"
    invalid.write_text('{"threads": -1}', encoding="utf-8")
    with pytest.raises(InvalidParameterError):
        load_settings_file(invalid)
