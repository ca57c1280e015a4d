"""
hochster.py - Reference Betti numbers of L(n,P) through Hochster's formula.

beta_{i,R}(L(n,P)) = dim H~_{|R|-i-2}(Delta(n,P)|_R), computed by direct
homology of the restricted complex. Every fast engine is validated against
this module.

This module contains:
- The Multidegree type (a subset R of [n] x P split into layers R_1..R_n)
- Enumeration of multidegrees, with or without pruning
- Per-multidegree and graded oracle Betti numbers
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache, partial
from itertools import product
from typing import Dict, Iterator, List, Tuple

from . import config
from .betti_table import BettiTable
from .errors import SizeGuardError
from .letterplace import delta_complex
from .poset import Poset, width
from .simplicial import FieldSpec, reduced_homology, restrict
from .utils import map_ordered, popcount

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Multidegree:
    """R = union of {i} x R_i over the layers R_1, ..., R_n."""

    layers: Tuple[frozenset, ...]

    @classmethod
    def of(cls, *layers) -> 'Multidegree':
        return cls(tuple(frozenset(layer) for layer in layers))

    @classmethod
    def from_masks(cls, P: Poset, masks) -> 'Multidegree':
        return cls(tuple(P.subset_of(mask) for mask in masks))

    @property
    def n(self) -> int:
        return len(self.layers)

    @property
    def size(self) -> int:
        return sum(len(layer) for layer in self.layers)

    @property
    def support(self) -> frozenset:
        return frozenset((slot, p) for slot, layer in enumerate(self.layers, start=1) for p in layer)

    def masks(self, P: Poset) -> Tuple[int, ...]:
        return tuple(P.mask_of(layer) for layer in self.layers)

    def has_empty_layer(self) -> bool:
        return any(not layer for layer in self.layers)

    def format(self, P: Poset) -> str:
        """Layers as 'a,b;c' with elements in declaration order."""
        return ";".join(",".join(P.ordered(layer)) for layer in self.layers)


# --- Enumeration ---

def degree_budget(n: int, P: Poset) -> int:
    """Largest |R| with a possibly nonzero beta_{i,R}: pd + reg = (|P|-1) + c(n-1) + 1."""
    return len(P) + width(P) * (n - 1)


class _SuccessorIndex:
    """Nonempty masks B grouped by min(B), with the subset-order successors of each max(A) cached."""

    def __init__(self, P: Poset):
        self.P = P
        self.min_of = {}
        self.max_of = {}
        self.by_min: Dict[int, List[int]] = {}
        for mask in range(1, P.full_mask + 1):
            low = P.min_mask(mask)
            self.min_of[mask] = low
            self.max_of[mask] = P.max_mask(mask)
            self.by_min.setdefault(low, []).append(mask)
        self._successors: Dict[int, List[int]] = {}

    def successors(self, mask: int) -> List[int]:
        top = self.max_of[mask]
        if top not in self._successors:
            found = []
            for low, members in self.by_min.items():
                if self.P.leq_masks(top, low):
                    found.extend(members)
            self._successors[top] = sorted(found)
        return self._successors[top]


@lru_cache(maxsize=32)
def _successor_index(P: Poset) -> _SuccessorIndex:
    return _SuccessorIndex(P)


def iter_layer_masks(n: int, P: Poset, prune: bool = True) -> Iterator[Tuple[int, ...]]:
    """
    Layer masks (R_1, ..., R_n) in lexicographic order of the masks.

    Pruned: layers nonempty, R_i <= R_{i+1} in the subset order and
    |R| <= degree_budget(n, P). Unpruned: all 2^(n|P|) supports.
    """
    if not prune:
        yield from product(range(P.full_mask + 1), repeat=n)
        return
    if not len(P):
        return
    index = _successor_index(P)
    budget = degree_budget(n, P)
    layers: List[int] = []

    def extend(used):
        remaining = n - len(layers) - 1
        candidates = index.successors(layers[-1]) if layers else range(1, P.full_mask + 1)
        for mask in candidates:
            size = used + popcount(mask)
            if size + remaining > budget:
                continue
            layers.append(mask)
            if remaining == 0:
                yield tuple(layers)
            else:
                yield from extend(size)
            layers.pop()

    yield from extend(0)


def enumerate_multidegrees(n: int, P: Poset, prune: bool = True) -> Iterator[Multidegree]:
    for masks in iter_layer_masks(n, P, prune):
        yield Multidegree.from_masks(P, masks)


def consecutive_leq(P: Poset, masks: Tuple[int, ...]) -> bool:
    """True iff all layers are nonempty and R_i <= R_{i+1} for every i."""
    if not all(masks):
        return False
    return all(
        P.leq_masks(P.max_mask(masks[i]), P.min_mask(masks[i + 1]))
        for i in range(len(masks) - 1)
    )


# --- Oracle ---

def beta_R_oracle(n: int, P: Poset, R: Multidegree, k: FieldSpec) -> Dict[int, int]:
    """
    beta_{i,R} for every i with a nonzero value.

    Args:
        n (int): Number of slots
        P (Poset): The poset
        R (Multidegree): The multidegree
        k (FieldSpec): Coefficient field

    Returns:
        dict: i -> beta_{i,R}
    """
    restricted = restrict(delta_complex(n, P), R.support)
    homology = reduced_homology(restricted, k)
    size = R.size
    return {size - d - 2: value for d, value in homology.items() if 0 <= size - d - 2 <= size}


def _oracle_entry(n, P, k, masks):
    return beta_R_oracle(n, P, Multidegree.from_masks(P, masks), k)


def _check_oracle_guard(n: int, P: Poset):
    limit = config.oracle_vertex_limit()
    vertices = n * len(P)
    if vertices > limit:
        raise SizeGuardError(f"oracle needs n*|P| <= {limit}, got {vertices}")
    if vertices > config.ORACLE_WARN_VERTICES and config.vertex_override() is None:
        logger.warning("Oracle on %d vertices; expect a long run", vertices)


def multigraded_betti_oracle(n: int, P: Poset, k: FieldSpec, prune: bool = True,
                             workers: int = 1) -> Iterator[Tuple[Multidegree, Dict[int, int]]]:
    """Yields (R, {i: beta_{i,R}}) for every enumerated R with a nonzero Betti number."""
    _check_oracle_guard(n, P)
    all_masks = list(iter_layer_masks(n, P, prune))
    logger.debug("Oracle: %d multidegrees for n=%d, |P|=%d", len(all_masks), n, len(P))
    values = map_ordered(partial(_oracle_entry, n, P, k), all_masks, workers)
    for masks, betti in zip(all_masks, values):
        if betti:
            yield Multidegree.from_masks(P, masks), betti


def table_from_multigraded(pairs) -> BettiTable:
    """Sums (R, {i: beta}) pairs into the graded ideal-convention table."""
    entries: Dict[Tuple[int, int], int] = {}
    for R, betti in pairs:
        for i, value in betti.items():
            entries[(i, R.size)] = entries.get((i, R.size), 0) + value
    return BettiTable(entries)


def betti_table_oracle(n: int, P: Poset, k: FieldSpec, prune: bool = True,
                       workers: int = 1) -> BettiTable:
    """
    Graded Betti table of L(n,P) (ideal convention) from Hochster's formula.

    Raises:
        SizeGuardError: If n*|P| exceeds the oracle guard
    """
    return table_from_multigraded(multigraded_betti_oracle(n, P, k, prune, workers))
