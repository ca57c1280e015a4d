"""
dal.py - Data Access Layer for lpbetti.

Reads and writes poset files. A name that is not an existing path is looked
up in the bundled data directory, so `betti v.poset` works from anywhere.
"""

import logging
import os

logger = logging.getLogger(__name__)

# Poset directory configuration
POSET_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'data')
POSET_SUFFIX = '.poset'


def resolve_poset_path(name: str):
    """
    Finds the file for a poset argument.

    Args:
        name (str): A path, or the name of a bundled poset (with or without suffix)

    Returns:
        str or None: The existing path, or None if nothing matches
    """
    if os.path.isfile(name):
        return name
    candidates = [os.path.join(POSET_DIR, name)]
    if not name.endswith(POSET_SUFFIX):
        candidates.append(os.path.join(POSET_DIR, name + POSET_SUFFIX))
    for candidate in candidates:
        if os.path.isfile(candidate):
            return candidate
    return None


def read_poset_text(name: str):
    """Reads a poset file; returns its text, or None on any I/O failure."""
    path = resolve_poset_path(name)
    if path is None:
        logger.error("DAL: poset file '%s' not found", name)
        return None
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            text = handle.read()
        logger.debug("DAL: read %d bytes from %s", len(text), path)
        return text
    except (OSError, UnicodeDecodeError) as e:
        logger.error("DAL: error reading poset file %s: %s", path, e)
        return None


def write_poset_text(path: str, text: str):
    """Writes poset file content; returns True on success."""
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(text)
        return True
    except OSError as e:
        logger.error("DAL: error writing poset file %s: %s", path, e)
        return False


def list_bundled_posets():
    """Names of the poset files in POSET_DIR, sorted."""
    if not os.path.isdir(POSET_DIR):
        return []
    return sorted(name for name in os.listdir(POSET_DIR) if name.endswith(POSET_SUFFIX))
