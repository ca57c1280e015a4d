"""
tree.py - Betti tables of L(n,P) when the Hasse diagram of P is a rooted forest.

For a connected P with root a, |P| >= 2 and n >= 2:

    beta_{i,j}(L(n,P)) = beta_{i,j}(L(n,P-a)) + beta_{i,j-1}(L(n-1,P)) + beta_{i-1,j-1}(L(n,P-a))

with the Koszul complex at n = 1, a single generator of degree n at |P| = 1,
and the quotient-convention tensor product over the connected components of
a forest. Results are memoized on (n, canonical forest encoding).
"""

from __future__ import annotations

import logging
import threading
from math import comb
from typing import Dict, MutableMapping, Optional, Tuple

from .betti_table import QUOTIENT, BettiTable
from .errors import ConventionError, NotAForestError
from .hochster import Multidegree, consecutive_leq
from .poset import Poset, canonical_form, components, is_rooted_forest, remove_element, unique_min
from .utils import popcount

logger = logging.getLogger(__name__)

_MEMO: Dict[Tuple[int, tuple], BettiTable] = {}
_MEMO_LOCK = threading.Lock()


def clear_memo():
    """Empties the module-wide table cache used by betti_table_tree."""
    with _MEMO_LOCK:
        _MEMO.clear()


def tensor_tables(T1: BettiTable, T2: BettiTable) -> BettiTable:
    """
    Tensor product of two quotient-convention tables (disjoint variable sets).

    Raises:
        ConventionError: If either table is in the ideal convention
    """
    if T1.convention != QUOTIENT or T2.convention != QUOTIENT:
        raise ConventionError("tensor_tables needs quotient-convention tables")
    entries: Dict[Tuple[int, int], int] = {}
    for (i1, j1), v1 in T1.items():
        for (i2, j2), v2 in T2.items():
            key = (i1 + i2, j1 + j2)
            entries[key] = entries.get(key, 0) + v1 * v2
    return BettiTable(entries, QUOTIENT)


def _koszul(size: int) -> BettiTable:
    return BettiTable({(i, i + 1): comb(size, i + 1) for i in range(size)})


def _compute(n: int, P: Poset, memo: Optional[MutableMapping]) -> BettiTable:
    if not len(P):
        return BettiTable()
    if n == 1:
        return _koszul(len(P))
    parts = components(P)
    if len(parts) > 1:
        product = BettiTable.trivial()
        for part in parts:
            product = tensor_tables(product, _lookup(n, part, memo).to_quotient())
        return product.to_ideal()
    if len(P) == 1:
        return BettiTable({(0, n): 1})

    root = unique_min(P)
    rest = _lookup(n, remove_element(P, root), memo)
    shorter = _lookup(n - 1, P, memo)
    return rest + shorter.shift(0, 1) + rest.shift(1, 1)


def _lookup(n: int, P: Poset, memo: Optional[MutableMapping]) -> BettiTable:
    if memo is None:
        return _compute(n, P, memo)
    key = (n, canonical_form(P))
    cached = memo.get(key)
    if cached is not None:
        return cached
    table = _compute(n, P, memo)
    with _MEMO_LOCK:
        memo.setdefault(key, table)
    return table


def betti_table_tree(n: int, P: Poset, memo: Optional[MutableMapping] = _MEMO) -> BettiTable:
    """
    Graded Betti table of L(n,P) (ideal convention) by the rooted-forest recursion.

    Args:
        n (int): Number of slots, at least 1
        P (Poset): A poset whose Hasse diagram is a rooted forest
        memo (mapping, optional): Cache keyed by (n, canonical form); the
            module-wide cache by default, None disables caching. The
            module-wide cache keeps every table it has seen; long-running
            callers free it with clear_memo() or pass their own mapping

    Returns:
        BettiTable: The ideal-convention table

    Raises:
        NotAForestError: If some element of P has two lower covers
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not is_rooted_forest(P):
        raise NotAForestError("the tree engine needs a poset whose Hasse diagram is a rooted forest")
    table = _lookup(n, P, memo)
    logger.debug("Tree engine: n=%d |P|=%d -> %d entries", n, len(P), len(table))
    return table


def tree_multigraded_beta(n: int, P: Poset, R: Multidegree) -> Optional[Tuple[int, int, int]]:
    """
    The single nonzero Betti number at R for a rooted tree P.

    Returns:
        tuple or None: (strand p, homological degree |R| - p, value 1) with
        p = 1 + sum_{i<n} |max(R_i)|, or None when some R_i <= R_{i+1} fails

    Raises:
        NotAForestError: If P is not a rooted tree
    """
    if not is_rooted_forest(P) or unique_min(P) is None:
        raise NotAForestError("tree_multigraded_beta needs a rooted tree")
    if R.has_empty_layer():
        raise ValueError("layers must be nonempty")
    masks = R.masks(P)
    if not consecutive_leq(P, masks):
        return None
    strand = 1 + sum(popcount(P.max_mask(mask)) for mask in masks[:-1])
    return strand, R.size - strand, 1


def v_closed_form(n: int) -> BettiTable:
    """Ideal-convention table of L(n,V) for the poset V = {a < b, a < c}."""
    if n < 2:
        raise ValueError("the closed form holds for n >= 2")
    entries = {(0, n): 2 * n + 1, (1, n + 1): 2 * n + 1, (2, n + 2): 1}
    for j in range(n + 2, 2 * n + 1):
        entries[(1, j)] = 1
        entries[(2, j + 1)] = 1
    return BettiTable(entries)
