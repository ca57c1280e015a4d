"""
config.py - Size guards and environment overrides for lpbetti.

Guards are plain module-level constants so callers and tests can patch them.
The LP_MAX_VERTICES environment variable replaces every vertex-count guard
(at your own risk: the engines are exponential in the guarded quantities).
"""

import logging
import os

logger = logging.getLogger(__name__)

# --- Guards ---
DELTA_MAX_VERTICES = 32         # n*|P| for delta_complex
ORACLE_MAX_VERTICES = 24        # n*|P| hard limit for the Hochster oracle table
ORACLE_WARN_VERTICES = 16       # above this the oracle logs a warning
STRAND_MAX_ELEMENTS = 12        # |P| for betti_table_fast
STRAND_MAX_N = 5                # n for betti_table_fast
MAX_FACES = 2 ** 24             # faces enumerated by reduced_homology
ANTICHAIN_MAX_ELEMENTS = 20     # |P| for the brute-force maximal antichain scan

MAX_VERTICES_ENV = 'LP_MAX_VERTICES'
LOG_LEVEL_ENV = 'LP_LOG_LEVEL'


def vertex_override():
    """Returns the LP_MAX_VERTICES override as an int, or None when unset or invalid."""
    raw = os.environ.get(MAX_VERTICES_ENV)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", MAX_VERTICES_ENV, raw)
        return None
    if value < 1:
        logger.warning("Ignoring %s=%r: must be positive", MAX_VERTICES_ENV, raw)
        return None
    return value


def delta_vertex_limit():
    override = vertex_override()
    return override if override is not None else DELTA_MAX_VERTICES


def oracle_vertex_limit():
    override = vertex_override()
    return override if override is not None else ORACLE_MAX_VERTICES


def strand_within_limits(n, size):
    """
    Checks the practical guard of the strand engine.

    Args:
        n (int): Number of letterplace slots
        size (int): Cardinality of the poset

    Returns:
        bool: True if the engine may run on this input
    """
    override = vertex_override()
    if override is not None:
        return n * size <= override
    return size <= STRAND_MAX_ELEMENTS and n <= STRAND_MAX_N


def default_log_level():
    """Reads LP_LOG_LEVEL, falling back to WARNING."""
    name = os.environ.get(LOG_LEVEL_ENV, 'WARNING').upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.WARNING
