"""Exact small-case verification of Turan-type results for forbidden brooms.

The package enumerates broom-free graphs up to isomorphism, finds the graphs
maximizing the degree-power sum or the star count, and compares them with the
predicted extremal families.
"""

from __future__ import annotations

from .config import Settings, load_settings, load_settings_file
from .detect import BroomEmbedding, contains_broom, find_broom, is_broom_free
from .enumeration import enumerate_count, enumerate_graphs
from .errors import (
    BroomTuranError,
    InvalidParameterError,
    MalformedInputError,
    ObjectiveOverflowError,
    SizeLimitError,
)
from .families import BroomSpec, FamilyId, FamilyTag
from .graph import Graph, count_stars, e_r, graph6_decode, graph6_encode
from .hypergraph import check_claim2, classify_rsets, find_berge_path, has_berge_path
from .search import agreement_sweep, extremal_search, objective_value, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "BroomEmbedding",
    "BroomSpec",
    "BroomTuranError",
    "FamilyId",
    "FamilyTag",
    "Graph",
    "InvalidParameterError",
    "MalformedInputError",
    "ObjectiveOverflowError",
    "Settings",
    "SizeLimitError",
    "__version__",
    "agreement_sweep",
    "check_claim2",
    "classify_rsets",
    "contains_broom",
    "count_stars",
    "e_r",
    "enumerate_count",
    "enumerate_graphs",
    "extremal_search",
    "find_berge_path",
    "find_broom",
    "graph6_decode",
    "graph6_encode",
    "has_berge_path",
    "is_broom_free",
    "load_settings",
    "load_settings_file",
    "objective_value",
    "verify_theorem",
]
