"""
letterplace.py - Letterplace and co-letterplace ideals of a poset.

This module contains:
- Generators of L(n,P) (one per multichain) and of L(P,n) (one per isotone map P -> [n])
- The Stanley-Reisner complex Delta(n,P) of L(n,P), on the vertices [n] x P
- Multiplicity |Hom(P,[n])| with its binomial/power bounds
- Facets of Delta(n,P) read off the co-letterplace generators (Alexander duality)

Variables of L(n,P) are pairs (slot, element); variables of L(P,n) are pairs
(element, slot).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import List, Tuple

from . import config
from .errors import InvariantError, SizeGuardError
from .poset import Poset, chain, count_isotone_maps, iter_isotone_maps, multichains
from .simplicial import SComplex, from_nonfaces

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LPMonomial:
    """A squarefree monomial, stored as its variables in printing order."""

    variables: Tuple[Tuple, ...]

    @property
    def support(self) -> frozenset:
        return frozenset(self.variables)

    @property
    def degree(self) -> int:
        return len(self.variables)

    def __str__(self):
        return "*".join(f"x[{a},{b}]" for a, b in self.variables)


# --- Generators ---

def lp_generators(n: int, P: Poset) -> List[LPMonomial]:
    """Generators x_{1,p_1} ... x_{n,p_n} of L(n,P), one per multichain p_1 <= ... <= p_n."""
    return [
        LPMonomial(tuple((slot, p) for slot, p in enumerate(points, start=1)))
        for points in multichains(n, P)
    ]


def colp_generators(P: Poset, n: int) -> List[LPMonomial]:
    """Generators prod_p x_{p,phi(p)} of L(P,n), one per isotone map phi: P -> [n]."""
    if n < 1:
        raise ValueError("n must be at least 1")
    slots = chain(n)
    return [
        LPMonomial(tuple((p, int(phi[p])) for p in P.elements))
        for phi in iter_isotone_maps(P, slots)
    ]


# --- Stanley-Reisner complex ---

def delta_vertices(n: int, P: Poset) -> List[Tuple[int, str]]:
    return [(slot, p) for slot in range(1, n + 1) for p in P.elements]


@lru_cache(maxsize=64)
def delta_complex(n: int, P: Poset) -> SComplex:
    """
    The complex Delta(n,P) whose Stanley-Reisner ideal is L(n,P).

    Raises:
        SizeGuardError: If n*|P| exceeds the delta guard
    """
    limit = config.delta_vertex_limit()
    if n * len(P) > limit:
        raise SizeGuardError(f"delta_complex needs n*|P| <= {limit}, got {n * len(P)}")
    generators = lp_generators(n, P)
    logger.debug("Building Delta(%d, P) on %d vertices with %d generators", n, n * len(P), len(generators))
    return from_nonfaces(delta_vertices(n, P), [g.variables for g in generators])


def facets_from_duality(n: int, P: Poset) -> List[frozenset]:
    """
    Facets of Delta(n,P) as complements of the co-letterplace supports.

    The support {(p, i_p)} of a generator of L(P,n) is transposed to
    {(i_p, p)} and complemented inside [n] x P.
    """
    everything = frozenset(delta_vertices(n, P))
    return [
        everything - frozenset((slot, p) for p, slot in g.variables)
        for g in colp_generators(P, n)
    ]


# --- Numeric facts ---

def multiplicity_bounds(n: int, P: Poset) -> Tuple[int, int]:
    """(C(n+|P|-1, |P|), n^|P|): the chain and antichain extremes."""
    size = len(P)
    return comb(n + size - 1, size), n ** size


def multiplicity(n: int, P: Poset) -> int:
    """
    Multiplicity of L(n,P), which is |Hom(P,[n])|.

    Raises:
        InvariantError: If the count leaves the bounds C(n+|P|-1,|P|) <= e <= n^|P|
    """
    value = count_isotone_maps(P, chain(n))
    lower, upper = multiplicity_bounds(n, P)
    if not lower <= value <= upper:
        raise InvariantError(f"multiplicity {value} outside [{lower}, {upper}]")
    return value
