"""Runtime settings for broom-turan.

Settings are a flat mapping of option keys validated by a voluptuous schema and
overlaid on the package defaults, so callers only pass what they want to change.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import voluptuous as vol

from .const import (
    CONF_CANONICAL_CAP,
    CONF_ENUMERATION_CAP,
    CONF_ORACLE_CAP,
    CONF_RSET_WORK_CAP,
    CONF_SPLIT_LEVEL,
    CONF_THREADS,
    DEFAULT_CANONICAL_CAP,
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_ORACLE_CAP,
    DEFAULT_RSET_WORK_CAP,
    DEFAULT_SPLIT_LEVEL,
    DEFAULT_THREADS,
)
from .errors import InvalidParameterError, MalformedInputError

_LOGGER = logging.getLogger(__name__)


def _int_in_range(low: int, high: int) -> vol.All:
    """Build a validator coercing to int and checking an inclusive range."""
    return vol.All(vol.Coerce(int), vol.Range(min=low, max=high))


def _build_settings_schema(defaults: Mapping[str, Any] | None = None) -> vol.Schema:
    """Build the settings schema.

    Args:
        defaults: Optional default values for each option.

    Returns:
        A voluptuous Schema rejecting unknown keys.
    """
    defaults = defaults or {}

    return vol.Schema(
        {
            vol.Optional(
                CONF_CANONICAL_CAP,
                default=defaults.get(CONF_CANONICAL_CAP, DEFAULT_CANONICAL_CAP),
            ): _int_in_range(1, 16),
            vol.Optional(
                CONF_ENUMERATION_CAP,
                default=defaults.get(CONF_ENUMERATION_CAP, DEFAULT_ENUMERATION_CAP),
            ): _int_in_range(2, 12),
            vol.Optional(
                CONF_ORACLE_CAP,
                default=defaults.get(CONF_ORACLE_CAP, DEFAULT_ORACLE_CAP),
            ): _int_in_range(1, 12),
            vol.Optional(
                CONF_RSET_WORK_CAP,
                default=defaults.get(CONF_RSET_WORK_CAP, DEFAULT_RSET_WORK_CAP),
            ): _int_in_range(1, 10_000_000),
            vol.Optional(
                CONF_THREADS,
                default=defaults.get(CONF_THREADS, DEFAULT_THREADS),
            ): _int_in_range(1, 64),
            vol.Optional(
                CONF_SPLIT_LEVEL,
                default=defaults.get(CONF_SPLIT_LEVEL, DEFAULT_SPLIT_LEVEL),
            ): _int_in_range(1, 12),
        },
        extra=vol.PREVENT_EXTRA,
    )


@dataclass(frozen=True, slots=True)
class Settings:
    """Caps and execution options shared by all operations.

    Attributes:
        canonical_cap: Largest vertex count accepted by canonical labeling.
        enumeration_cap: Largest n for exhaustive enumeration and search.
        oracle_cap: Largest host graph for naive subgraph counting.
        rset_work_cap: Largest number of r-sets a classification may visit.
        threads: Worker processes for parallel search; 1 means sequential.
        split_level: Tree depth at which parallel work is split.
    """

    canonical_cap: int = DEFAULT_CANONICAL_CAP
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    oracle_cap: int = DEFAULT_ORACLE_CAP
    rset_work_cap: int = DEFAULT_RSET_WORK_CAP
    threads: int = DEFAULT_THREADS
    split_level: int = DEFAULT_SPLIT_LEVEL

    def as_options(self) -> dict[str, int]:
        """Return the settings as an option mapping."""
        return {
            CONF_CANONICAL_CAP: self.canonical_cap,
            CONF_ENUMERATION_CAP: self.enumeration_cap,
            CONF_ORACLE_CAP: self.oracle_cap,
            CONF_RSET_WORK_CAP: self.rset_work_cap,
            CONF_THREADS: self.threads,
            CONF_SPLIT_LEVEL: self.split_level,
        }

    def replace(self, **changes: Any) -> Settings:
        """Return new settings with some options changed and revalidated."""
        return load_settings({**self.as_options(), **changes})


DEFAULT_SETTINGS = Settings()


def load_settings(options: Mapping[str, Any] | None = None) -> Settings:
    """Validate an option mapping and overlay it on the defaults.

    Args:
        options: Option keys and values; missing keys take their defaults.

    Returns:
        The validated settings.

    Raises:
        InvalidParameterError: If a key is unknown or a value is out of range.
    """
    try:
        data = _build_settings_schema()(dict(options or {}))
    except vol.Invalid as err:
        raise InvalidParameterError(f"Invalid settings: {err}") from err

    settings = Settings(**data)
    _LOGGER.debug("Loaded settings %s", settings)
    return settings


def load_settings_file(path: str | Path) -> Settings:
    """Read settings from a JSON object stored in a file.

    Args:
        path: Location of the JSON file.

    Returns:
        The validated settings.

    Raises:
        MalformedInputError: If the file cannot be read or is not a JSON object.
        InvalidParameterError: If an option is invalid.
    """
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as err:
        raise MalformedInputError(f"Cannot read settings from {path}: {err}") from err

    if not isinstance(raw, dict):
        raise MalformedInputError(f"Settings file {path} must hold a JSON object")

    return load_settings(raw)


def resolve_settings(settings: Settings | None) -> Settings:
    """Return the given settings or the package defaults."""
    return settings if settings is not None else DEFAULT_SETTINGS
