"""Constants for the broom-turan package."""

from typing import Final

# Configuration keys
CONF_CANONICAL_CAP = "canonical_cap"
CONF_ENUMERATION_CAP = "enumeration_cap"
CONF_ORACLE_CAP = "oracle_cap"
CONF_RSET_WORK_CAP = "rset_work_cap"
CONF_THREADS = "threads"
CONF_SPLIT_LEVEL = "split_level"

# Defaults
DEFAULT_CANONICAL_CAP = 12
DEFAULT_ENUMERATION_CAP = 10
DEFAULT_ORACLE_CAP = 10
DEFAULT_RSET_WORK_CAP = 250_000
DEFAULT_THREADS = 1
DEFAULT_SPLIT_LEVEL = 5

# Hard limits
MAX_VERTICES: Final = 64
GRAPH6_MAX_VERTICES: Final = 62
GRAPH6_OFFSET: Final = 63
GRAPH6_HEADER: Final = b">>graph6<<"
MIN_BROOM_LENGTH: Final = 4

# e_r results must fit a signed 64-bit integer
RESULT_BITS: Final = 63
MAX_OBJECTIVE: Final = (1 << RESULT_BITS) - 1

# Objectives
OBJECTIVE_ER = "er"
OBJECTIVE_STARS = "stars"
OBJECTIVES: Final = (OBJECTIVE_ER, OBJECTIVE_STARS)

# Versioned output formats
SCHEMA_VERSION = "1"
