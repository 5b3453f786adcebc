"""Schemas for the JSON documents written by the command line.

Every document carries ``schema_version``; a change to any layout below bumps
:data:`~broom_turan.const.SCHEMA_VERSION`.
"""

from __future__ import annotations

from typing import Any

import voluptuous as vol

from .const import OBJECTIVES, SCHEMA_VERSION
from .errors import BroomTuranError

_NON_NEGATIVE = vol.All(int, vol.Range(min=0))
_VERTICES = [_NON_NEGATIVE]

SPEC_SCHEMA = vol.Schema(
    {
        vol.Required("ell"): vol.All(int, vol.Range(min=4)),
        vol.Required("s"): _NON_NEGATIVE,
    }
)

WITNESS_SCHEMA = vol.Schema(
    {
        vol.Required("path"): _VERTICES,
        vol.Required("center"): _NON_NEGATIVE,
        vol.Required("leaves"): _VERTICES,
    }
)

DETECT_SCHEMA = vol.Schema(
    {
        vol.Required("schema_version"): SCHEMA_VERSION,
        vol.Required("graph6"): str,
        vol.Required("contains"): bool,
        vol.Required("witness"): vol.Any(None, WITNESS_SCHEMA),
    }
)

REPORT_SCHEMA = vol.Schema(
    {
        vol.Required("spec"): SPEC_SCHEMA,
        vol.Required("n"): vol.All(int, vol.Range(min=2)),
        vol.Required("r"): vol.All(int, vol.Range(min=1)),
        vol.Required("objective"): vol.In(OBJECTIVES),
        vol.Required("optimum"): _NON_NEGATIVE,
        vol.Required("predicted_value"): _NON_NEGATIVE,
        vol.Required("predicted_family"): str,
        vol.Required("agrees"): bool,
        vol.Required("unique_and_matches"): bool,
        vol.Required("optimizers"): [str],
    }
)

SEARCH_SCHEMA = REPORT_SCHEMA.extend({vol.Required("schema_version"): SCHEMA_VERSION})

VERIFY_SCHEMA = vol.Schema(
    {
        vol.Required("schema_version"): SCHEMA_VERSION,
        vol.Required("spec"): SPEC_SCHEMA,
        vol.Required("r"): vol.All(int, vol.Range(min=1)),
        vol.Required("nmin"): int,
        vol.Required("nmax"): int,
        vol.Required("holds"): bool,
        vol.Required("objectives"): {
            vol.In(OBJECTIVES): {
                vol.Required("threshold"): vol.Any(None, int),
                vol.Required("uniqueness_claimed"): bool,
                vol.Required("reports"): [REPORT_SCHEMA],
            }
        },
    }
)

NBRHOOD_SCHEMA = vol.Schema(
    {
        vol.Required("schema_version"): SCHEMA_VERSION,
        vol.Required("graph6"): str,
        vol.Required("r"): vol.All(int, vol.Range(min=2)),
        vol.Required("ell"): vol.All(int, vol.Range(min=4)),
        vol.Required("s"): _NON_NEGATIVE,
        vol.Required("k"): vol.All(int, vol.Range(min=1)),
        vol.Required("sizes"): {
            vol.Required(name): _NON_NEGATIVE for name in ("H1", "H2", "H3", "H4")
        },
        vol.Required("berge_path_k_plus_1"): bool,
        vol.Required("dominant_k_set"): vol.Any(
            None,
            {vol.Required("vertices"): _VERTICES, vol.Required("rsets"): _NON_NEGATIVE},
        ),
    }
)


def validate_document(schema: vol.Schema, document: dict[str, Any]) -> dict[str, Any]:
    """Validate an output document and return it unchanged.

    Raises:
        BroomTuranError: If the document does not match the schema.
    """
    try:
        schema(document)
    except vol.Invalid as err:
        raise BroomTuranError(f"Output document failed validation: {err}") from err
    return document
