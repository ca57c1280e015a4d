"""
poset.py - Finite posets, antichains, the subset order and isotone maps.

This module contains:
- The immutable Poset class with an eagerly computed transitive closure
- Parsing and formatting of the poset file format
- Antichain machinery (width, maximal antichains)
- The subset order A <= B on nonempty subsets
- Isotone map and multichain enumeration
- Rooted forest queries and the canonical forest encoding

Subsets are exchanged as frozensets of element names. Internally every
element has a dense index in declaration order and subsets are bitmasks;
the *_mask helpers expose that form to the engines.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from . import config
from .errors import (
    CycleError,
    DuplicateElementError,
    EmptySubsetError,
    NotAForestError,
    PosetParseError,
    SizeGuardError,
    UnknownElementError,
)
from .utils import iter_bits, popcount

logger = logging.getLogger(__name__)


class Poset:
    """
    A finite partial order on named elements.

    Args:
        elements (iterable of str): Element names in declaration order
        relations (iterable of pairs): Pairs (p, q) meaning p < q; any
            comparabilities are accepted, the cover relation is their
            transitive reduction
    """

    def __init__(self, elements: Iterable[str], relations: Iterable[Tuple[str, str]] = ()):
        self.elements: Tuple[str, ...] = tuple(elements)
        self._index: Dict[str, int] = {}
        for name in self.elements:
            if name in self._index:
                raise DuplicateElementError(f"duplicate element '{name}'")
            self._index[name] = len(self._index)

        size = len(self.elements)
        direct = [0] * size
        for p, q in relations:
            i, j = self.index(p), self.index(q)
            if i == j:
                raise CycleError([p])
            direct[i] |= 1 << j

        # Warshall on bitmasks: _up[i] has bit j iff i <= j
        up = [direct[i] | (1 << i) for i in range(size)]
        for k in range(size):
            bit = 1 << k
            for i in range(size):
                if up[i] & bit:
                    up[i] |= up[k]
        for i in range(size):
            for j in iter_bits(up[i] & ~(1 << i)):
                if up[j] >> i & 1:
                    raise CycleError(self._find_cycle(direct, i))

        self._up: Tuple[int, ...] = tuple(up)
        down = [0] * size
        for i in range(size):
            for j in iter_bits(up[i]):
                down[j] |= 1 << i
        self._down: Tuple[int, ...] = tuple(down)

        cover_masks = []
        for i in range(size):
            strict = up[i] & ~(1 << i)
            above_strict = 0
            for k in iter_bits(strict):
                above_strict |= up[k] & ~(1 << k)
            cover_masks.append(strict & ~above_strict)
        self._cover_masks: Tuple[int, ...] = tuple(cover_masks)
        self.covers = frozenset(
            (self.elements[i], self.elements[j])
            for i in range(size) for j in iter_bits(cover_masks[i])
        )

    def _find_cycle(self, direct, start):
        """Returns the element names along a directed cycle through `start`."""
        parent = {start: None}
        stack = [start]
        while stack:
            node = stack.pop()
            for nxt in iter_bits(direct[node]):
                if nxt == start:
                    path = [node]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return [self.elements[k] for k in reversed(path)]
                if nxt not in parent:
                    parent[nxt] = node
                    stack.append(nxt)
        return [self.elements[start]]

    # --- Basic queries ---

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, name) -> bool:
        return name in self._index

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __repr__(self):
        covers = ", ".join(f"{p}<{q}" for p, q in self.sorted_covers())
        return f"Poset([{', '.join(self.elements)}]; {covers})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElementError(f"unknown element '{name}'") from None

    def leq(self, p: str, q: str) -> bool:
        return bool(self._up[self.index(p)] >> self.index(q) & 1)

    def lt(self, p: str, q: str) -> bool:
        return p != q and self.leq(p, q)

    def comparable(self, p: str, q: str) -> bool:
        return self.leq(p, q) or self.leq(q, p)

    def sorted_covers(self) -> List[Tuple[str, str]]:
        """Cover pairs ordered by (lower index, upper index)."""
        return sorted(self.covers, key=lambda pq: (self._index[pq[0]], self._index[pq[1]]))

    def lower_covers(self, p: str) -> List[str]:
        i = self.index(p)
        return [self.elements[k] for k in range(len(self)) if self._cover_masks[k] >> i & 1]

    def upper_covers(self, p: str) -> List[str]:
        return self.names(self._cover_masks[self.index(p)])

    # --- Bitmask view ---

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def up_mask(self, i: int) -> int:
        """Bitmask of the principal filter of element index i."""
        return self._up[i]

    def down_mask(self, i: int) -> int:
        """Bitmask of the principal ideal of element index i."""
        return self._down[i]

    def mask_of(self, subset: Iterable[str]) -> int:
        mask = 0
        for name in subset:
            mask |= 1 << self.index(name)
        return mask

    def subset_of(self, mask: int) -> frozenset:
        return frozenset(self.elements[i] for i in iter_bits(mask))

    def names(self, mask: int) -> List[str]:
        """Element names of a bitmask in declaration order."""
        return [self.elements[i] for i in iter_bits(mask)]

    def ordered(self, subset: Iterable[str]) -> List[str]:
        return self.names(self.mask_of(subset))

    def min_mask(self, mask: int) -> int:
        result = 0
        for i in iter_bits(mask):
            if self._down[i] & mask == 1 << i:
                result |= 1 << i
        return result

    def max_mask(self, mask: int) -> int:
        result = 0
        for i in iter_bits(mask):
            if self._up[i] & mask == 1 << i:
                result |= 1 << i
        return result

    def is_antichain_mask(self, mask: int) -> bool:
        return all(self._up[i] & mask == 1 << i for i in iter_bits(mask))

    def leq_masks(self, a_max: int, b_min: int) -> bool:
        """The subset order on already reduced sides: a_max = max(A), b_min = min(B)."""
        for i in iter_bits(a_max):
            if not self._up[i] & b_min:
                return False
        for j in iter_bits(b_min):
            if not self._down[j] & a_max:
                return False
        return True

    def induced(self, subset: Iterable[str]) -> 'Poset':
        """The induced suborder on `subset`, keeping declaration order."""
        mask = self.mask_of(subset)
        keep = self.names(mask)
        relations = [
            (self.elements[i], self.elements[j])
            for i in iter_bits(mask)
            for j in iter_bits(self._up[i] & mask & ~(1 << i))
        ]
        return Poset(keep, relations)


# --- Construction and file format ---

def chain(n: int, names: Optional[Iterable[str]] = None) -> Poset:
    """The chain [n] = {1 < 2 < ... < n}."""
    labels = list(names) if names is not None else [str(i) for i in range(1, n + 1)]
    return Poset(labels, zip(labels, labels[1:]))


def antichain(c: int, names: Optional[Iterable[str]] = None) -> Poset:
    labels = list(names) if names is not None else [str(i) for i in range(1, c + 1)]
    return Poset(labels)


def parse_poset(text: str) -> Poset:
    """
    Parses the poset file format.

    One declaration per line: a bare token declares an element, "p < q"
    declares a relation ("p < q < r" declares a chain of relations), "#"
    starts a comment and blank lines are ignored. Relations may mention
    elements declared further down.

    Args:
        text (str): File content

    Returns:
        Poset: The parsed poset

    Raises:
        PosetParseError, DuplicateElementError, UnknownElementError, CycleError
    """
    elements = []
    seen = set()
    relation_lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '<' in line:
            parts = [part.strip() for part in line.split('<')]
            if any(not part or len(part.split()) != 1 for part in parts):
                raise PosetParseError(f"malformed relation '{line}'", number)
            relation_lines.append((number, parts))
            continue
        if len(line.split()) != 1:
            raise PosetParseError(f"expected a single element name, got '{line}'", number)
        if line in seen:
            raise DuplicateElementError(f"line {number}: duplicate element '{line}'")
        seen.add(line)
        elements.append(line)

    relations = []
    for number, parts in relation_lines:
        for name in parts:
            if name not in seen:
                raise UnknownElementError(f"line {number}: undeclared element '{name}'")
        relations.extend(zip(parts, parts[1:]))

    poset = Poset(elements, relations)
    logger.debug("Parsed poset with %d elements and %d covers", len(poset), len(poset.covers))
    return poset


def format_poset(P: Poset) -> str:
    """Serializes P in the poset file format (elements, then covers)."""
    lines = list(P.elements)
    lines.extend(f"{p} < {q}" for p, q in P.sorted_covers())
    return "\n".join(lines) + "\n"


# --- Minimal and maximal elements, antichains ---

def min_of(P: Poset, S: Iterable[str]) -> frozenset:
    return P.subset_of(P.min_mask(P.mask_of(S)))


def max_of(P: Poset, S: Iterable[str]) -> frozenset:
    return P.subset_of(P.max_mask(P.mask_of(S)))


def is_antichain(P: Poset, S: Iterable[str]) -> bool:
    return P.is_antichain_mask(P.mask_of(S))


def maximal_antichain_masks(P: Poset) -> List[int]:
    """Maximal antichains as bitmasks, ordered by their sorted index tuples."""
    if len(P) > config.ANTICHAIN_MAX_ELEMENTS:
        raise SizeGuardError(
            f"maximal antichain scan limited to {config.ANTICHAIN_MAX_ELEMENTS} elements, got {len(P)}")
    size = len(P)
    comparable = [P.up_mask(i) | P.down_mask(i) for i in range(size)]
    found = []

    def extend(chosen, blocked, start):
        free = P.full_mask & ~blocked
        if not free:
            found.append(chosen)
            return
        for i in range(start, size):
            if free >> i & 1:
                extend(chosen | 1 << i, blocked | comparable[i], i + 1)

    if size:
        extend(0, 0, 0)
    return sorted(found, key=lambda m: list(iter_bits(m)))


def maximal_antichains(P: Poset) -> List[frozenset]:
    return [P.subset_of(mask) for mask in maximal_antichain_masks(P)]


def width(P: Poset) -> int:
    """Maximum cardinality of an antichain in P (0 for the empty poset)."""
    return max((popcount(mask) for mask in maximal_antichain_masks(P)), default=0)


# --- The subset order ---

def subset_leq(P: Poset, A: Iterable[str], B: Iterable[str]) -> bool:
    """
    The subset order A <= B.

    True iff every maximal element of A is below some minimal element of B
    and every minimal element of B is above some maximal element of A.

    Raises:
        EmptySubsetError: If A or B is empty
    """
    a_mask, b_mask = P.mask_of(A), P.mask_of(B)
    if not a_mask or not b_mask:
        raise EmptySubsetError("subset order is defined on nonempty subsets only")
    return P.leq_masks(P.max_mask(a_mask), P.min_mask(b_mask))


# --- Isotone maps ---

def iter_isotone_maps(P: Poset, Q: Poset) -> Iterator[Dict[str, str]]:
    """Yields isotone maps P -> Q in lexicographic order of Q-indices along P's declaration order."""
    size = len(P)
    assignment: List[int] = []

    def consistent(i, target):
        for k, image in enumerate(assignment):
            if P.up_mask(k) >> i & 1 and not Q.up_mask(image) >> target & 1:
                return False
            if P.up_mask(i) >> k & 1 and not Q.up_mask(target) >> image & 1:
                return False
        return True

    def extend():
        i = len(assignment)
        if i == size:
            yield {P.elements[k]: Q.elements[image] for k, image in enumerate(assignment)}
            return
        for target in range(len(Q)):
            if consistent(i, target):
                assignment.append(target)
                yield from extend()
                assignment.pop()

    yield from extend()


def isotone_maps(P: Poset, Q: Poset) -> List[Dict[str, str]]:
    return list(iter_isotone_maps(P, Q))


def count_isotone_maps(P: Poset, Q: Poset) -> int:
    return sum(1 for _ in iter_isotone_maps(P, Q))


def multichains(n: int, P: Poset) -> List[Tuple[str, ...]]:
    """Multichains p_1 <= ... <= p_n of P, i.e. isotone maps [n] -> P as tuples."""
    if n < 1:
        raise ValueError("n must be at least 1")
    slots = chain(n)
    return [tuple(phi[s] for s in slots.elements) for phi in iter_isotone_maps(slots, P)]


# --- Rooted forests ---

def is_rooted_forest(P: Poset) -> bool:
    """True iff every element has at most one lower cover."""
    return all(len(P.lower_covers(p)) <= 1 for p in P.elements)


def unique_min(P: Poset) -> Optional[str]:
    minimal = P.names(P.min_mask(P.full_mask))
    return minimal[0] if len(minimal) == 1 else None


def remove_element(P: Poset, a: str) -> Poset:
    """The induced order on P minus {a}."""
    P.index(a)
    return P.induced(p for p in P.elements if p != a)


def hasse_graph(P: Poset) -> nx.Graph:
    """The Hasse diagram as an undirected networkx graph."""
    graph = nx.Graph()
    graph.add_nodes_from(P.elements)
    graph.add_edges_from((p, q) for p in P.elements for q in P.upper_covers(p))
    return graph


def components(P: Poset) -> List[Poset]:
    """Connected components of the comparability graph, ordered by first element."""
    parts = sorted(nx.connected_components(hasse_graph(P)), key=lambda part: min(map(P.index, part)))
    return [P.induced(part) for part in parts]


def ideal_generated(P: Poset, D: Iterable[str]) -> frozenset:
    mask = 0
    for i in iter_bits(P.mask_of(D)):
        mask |= P.down_mask(i)
    return P.subset_of(mask)


def filter_generated(P: Poset, D: Iterable[str]) -> frozenset:
    mask = 0
    for i in iter_bits(P.mask_of(D)):
        mask |= P.up_mask(i)
    return P.subset_of(mask)


def canonical_form(P: Poset) -> tuple:
    """
    Isomorphism-invariant encoding of a rooted forest.

    A node is encoded as the sorted tuple of its children's encodings and
    the forest as the sorted tuple of its roots' encodings, so two forests
    are isomorphic iff their encodings are equal.

    Raises:
        NotAForestError: If some element has two lower covers
    """
    if not is_rooted_forest(P):
        raise NotAForestError("canonical form is defined for rooted forests only")
    codes: Dict[int, tuple] = {}

    def encode(i):
        if i not in codes:
            codes[i] = tuple(sorted(encode(k) for k in iter_bits(P._cover_masks[i])))
        return codes[i]

    roots = iter_bits(P.min_mask(P.full_mask))
    return tuple(sorted(encode(r) for r in roots))
