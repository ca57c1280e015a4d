"""
common.py - Input handling shared by the command handlers.
"""

import sys

from .. import bll
from .. import validation


def fail(message):
    print(f"error: {message}", file=sys.stderr)


def load_inputs(args):
    """
    Validates n and loads the poset named on the command line.

    Returns:
        tuple: (poset, n), or (None, None) after reporting the error
    """
    is_valid, error, n = validation.validate_n(args.n)
    if not is_valid:
        fail(error)
        return None, None

    poset, error = bll.load_poset(args.poset)
    if poset is None:
        fail(error)
        return None, None
    return poset, n


def parse_workers(args):
    """Worker count from args, or None after reporting the error."""
    is_valid, error, workers = validation.validate_workers(getattr(args, 'workers', 1))
    if not is_valid:
        fail(error)
        return None
    return workers
