"""
utils.py - Helper functions shared by the lpbetti engines.

This module contains utility functions used throughout the package, including:
- Bitmask iteration over subsets
- An order-preserving parallel map over a process pool
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, List, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def iter_bits(mask: int) -> Iterator[int]:
    """Yields the indices of the set bits of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def iter_submasks(mask: int) -> Iterator[int]:
    """Yields every submask of `mask` (including 0 and mask) in increasing numeric order."""
    bits = list(iter_bits(mask))
    for code in range(1 << len(bits)):
        sub = 0
        for k, bit in enumerate(bits):
            if code >> k & 1:
                sub |= 1 << bit
        yield sub


def map_ordered(fn: Callable[[T], R], items: Iterable[T], workers: int = 1,
                chunksize: int = 64) -> List[R]:
    """
    Applies `fn` to every item, optionally on a process pool.

    Results come back in input order regardless of completion order, so
    aggregations over them are deterministic.

    Args:
        fn (callable): A picklable function (module level or functools.partial)
        items (iterable): The work items
        workers (int): Number of worker processes; 1 runs inline
        chunksize (int): Items handed to a worker at a time

    Returns:
        list: fn(item) for every item, in order
    """
    if workers <= 1:
        return [fn(item) for item in items]
    items = list(items)
    logger.debug("Dispatching %d items to %d workers", len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items, chunksize=chunksize))
