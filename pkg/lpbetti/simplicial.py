"""
simplicial.py - Simplicial complexes, reduced homology over a field, and
the reduction calculus used by the strand engine.

This module contains:
- FieldSpec: the coefficient field, given by its characteristic
- HPoly: reduced homology polynomials sum_d dim H~_d * t^d, degrees >= -1
- SComplex: a complex stored as vertices + minimal nonfaces
- restriction, join, suspension, dominated-vertex deletion and vertex identification

Faces are bitmasks over the complex's vertex order. Homology is computed from
boundary matrices ranked exactly by lpbetti.linalg. Edge-ideal complexes are
reduced on their networkx bipartite graph.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx
from networkx.algorithms import bipartite

from . import config
from .errors import ComplexError, FieldError, SizeGuardError
from .linalg import is_valid_characteristic, rank
from .utils import iter_bits, iter_submasks, popcount

logger = logging.getLogger(__name__)


# --- Fields ---

@dataclass(frozen=True)
class FieldSpec:
    """The prime field of characteristic 0 (the rationals) or p < 2^31."""

    characteristic: int = 0

    def __post_init__(self):
        if not isinstance(self.characteristic, int) or not is_valid_characteristic(self.characteristic):
            raise FieldError(f"characteristic must be 0 or a prime below 2^31, got {self.characteristic!r}")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


# --- Homology polynomials ---

class HPoly:
    """
    A polynomial in t with nonnegative integer coefficients and degrees >= -1.

    Instances are immutable and compare by their nonzero terms.
    """

    __slots__ = ('_terms',)

    def __init__(self, coefficients: Dict[int, int] = None):
        terms = {}
        for degree, value in (coefficients or {}).items():
            if value < 0:
                raise ValueError(f"negative coefficient {value} at degree {degree}")
            if value == 0:
                continue
            if degree < -1:
                raise ValueError(f"degree {degree} below -1")
            terms[degree] = value
        self._terms: Tuple[Tuple[int, int], ...] = tuple(sorted(terms.items()))

    @classmethod
    def monomial(cls, degree: int, value: int = 1) -> 'HPoly':
        return cls({degree: value})

    @classmethod
    def zero(cls) -> 'HPoly':
        return cls()

    def items(self) -> Tuple[Tuple[int, int], ...]:
        return self._terms

    def coefficient(self, degree: int) -> int:
        return dict(self._terms).get(degree, 0)

    __getitem__ = coefficient

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def shift(self, k: int) -> 'HPoly':
        """Multiplication by t^k."""
        return HPoly({degree + k: value for degree, value in self._terms})

    def __add__(self, other: 'HPoly') -> 'HPoly':
        total = dict(self._terms)
        for degree, value in other._terms:
            total[degree] = total.get(degree, 0) + value
        return HPoly(total)

    def __mul__(self, other: 'HPoly') -> 'HPoly':
        product: Dict[int, int] = {}
        for d1, v1 in self._terms:
            for d2, v2 in other._terms:
                product[d1 + d2] = product.get(d1 + d2, 0) + v1 * v2
        return HPoly(product)

    def euler_characteristic(self) -> int:
        """sum_d (-1)^d * coefficient(d)"""
        return sum(value if degree % 2 == 0 else -value for degree, value in self._terms)

    def __eq__(self, other):
        if not isinstance(other, HPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return f"HPoly({dict(self._terms)})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for degree, value in self._terms:
            coefficient = "" if value == 1 else str(value)
            parts.append(f"{coefficient}t^{degree}")
        return " + ".join(parts)


# --- Complexes ---

class SComplex:
    """
    A simplicial complex given by its vertices and minimal nonfaces.

    Use from_nonfaces, from_faces or from_facets to build one; the
    constructor expects already validated, inclusion-minimal masks.
    """

    def __init__(self, vertices: Sequence[Hashable], nonface_masks: Iterable[int]):
        self.vertices: Tuple[Hashable, ...] = tuple(vertices)
        self._index: Dict[Hashable, int] = {v: k for k, v in enumerate(self.vertices)}
        self._nonfaces: Tuple[int, ...] = tuple(sorted(set(nonface_masks), key=lambda m: (popcount(m), m)))
        by_vertex: List[List[int]] = [[] for _ in self.vertices]
        for mask in self._nonfaces:
            for v in iter_bits(mask):
                by_vertex[v].append(mask)
        self._by_vertex = by_vertex

    # --- Views ---

    @property
    def nonfaces(self) -> frozenset:
        return frozenset(self._subset(mask) for mask in self._nonfaces)

    @property
    def nonface_masks(self) -> Tuple[int, ...]:
        return self._nonfaces

    def _subset(self, mask: int) -> frozenset:
        return frozenset(self.vertices[k] for k in iter_bits(mask))

    def mask_of(self, subset: Iterable[Hashable]) -> int:
        mask = 0
        for v in subset:
            if v not in self._index:
                raise ComplexError(f"unknown vertex {v!r}")
            mask |= 1 << self._index[v]
        return mask

    def is_face_mask(self, mask: int) -> bool:
        return all(nonface & mask != nonface for nonface in self._nonfaces)

    def is_face(self, subset: Iterable[Hashable]) -> bool:
        return self.is_face_mask(self.mask_of(subset))

    def __eq__(self, other):
        if not isinstance(other, SComplex):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.nonfaces == other.nonfaces

    def __hash__(self):
        return hash((frozenset(self.vertices), self.nonfaces))

    def __repr__(self):
        return f"SComplex({len(self.vertices)} vertices, {len(self._nonfaces)} minimal nonfaces)"

    # --- Faces ---

    def faces_by_dimension(self) -> List[List[int]]:
        """
        Face masks grouped by dimension; entry d+1 lists the d-faces.

        Faces are grown one vertex at a time, adding only vertices above the
        current top vertex and checking just the nonfaces through the new vertex.

        Raises:
            SizeGuardError: If more than config.MAX_FACES faces exist
        """
        levels = [[0]]
        total = 1
        size = len(self.vertices)
        while levels[-1]:
            nxt = []
            for face in levels[-1]:
                for v in range(face.bit_length(), size):
                    grown = face | 1 << v
                    if all(nonface & grown != nonface for nonface in self._by_vertex[v]):
                        nxt.append(grown)
            total += len(nxt)
            if total > config.MAX_FACES:
                raise SizeGuardError(f"complex has more than {config.MAX_FACES} faces")
            levels.append(nxt)
        levels.pop()
        return levels

    def faces(self) -> Iterator[frozenset]:
        for level in self.faces_by_dimension():
            for mask in level:
                yield self._subset(mask)

    def f_vector(self) -> List[int]:
        """Face counts for dimensions -1, 0, 1, ..."""
        return [len(level) for level in self.faces_by_dimension()]

    def facet_masks(self) -> List[int]:
        result = []
        size = len(self.vertices)
        for level in self.faces_by_dimension():
            for face in level:
                if not any(self.is_face_mask(face | 1 << v) for v in range(size) if not face >> v & 1):
                    result.append(face)
        return result

    def facets(self) -> List[frozenset]:
        return [self._subset(mask) for mask in self.facet_masks()]

    def reduced_euler_characteristic(self) -> int:
        """sum over faces of (-1)^dim, the empty face counting as -1"""
        return sum(count if d % 2 == 1 else -count for d, count in enumerate(self.f_vector()))

    def dump_json(self) -> str:
        """Debug dump; the format is not stable."""
        return json.dumps({
            'vertices': [str(v) for v in self.vertices],
            'nonfaces': [[str(self.vertices[k]) for k in iter_bits(mask)] for mask in self._nonfaces],
        })


def _minimal(masks: Iterable[int]) -> List[int]:
    kept: List[int] = []
    for mask in sorted(set(masks), key=lambda m: (popcount(m), m)):
        if not any(small & mask == small for small in kept):
            kept.append(mask)
    return kept


def _vertex_index(vertices: Sequence[Hashable]) -> Dict[Hashable, int]:
    index: Dict[Hashable, int] = {}
    for v in vertices:
        if v in index:
            raise ComplexError(f"duplicate vertex {v!r}")
        index[v] = len(index)
    return index


def from_nonfaces(vertices: Sequence[Hashable], generators: Iterable[Iterable[Hashable]]) -> SComplex:
    """
    Builds the complex whose Stanley-Reisner ideal is generated by `generators`.

    Only the inclusion-minimal generators are stored; no generators gives the
    full simplex on `vertices`.

    Raises:
        ComplexError: On an unknown vertex, or an empty generator (no faces at all)
    """
    index = _vertex_index(vertices)
    masks = []
    for generator in generators:
        mask = 0
        for v in generator:
            if v not in index:
                raise ComplexError(f"generator mentions unknown vertex {v!r}")
            mask |= 1 << index[v]
        if mask == 0:
            raise ComplexError("the empty nonface leaves no faces at all")
        masks.append(mask)
    return SComplex(vertices, _minimal(masks))


def _nonfaces_from_face_masks(size: int, face_set: set) -> List[int]:
    minimal = set()
    for face in face_set:
        for v in range(size):
            if face >> v & 1:
                continue
            grown = face | 1 << v
            if grown in face_set:
                continue
            if all((grown ^ 1 << u) in face_set for u in iter_bits(grown)):
                minimal.add(grown)
    return sorted(minimal)


def from_faces(vertices: Sequence[Hashable], faces: Iterable[Iterable[Hashable]]) -> SComplex:
    """Builds a complex from a downward closed family of faces (the empty face included)."""
    index = _vertex_index(vertices)
    face_set = set()
    for face in faces:
        mask = 0
        for v in face:
            if v not in index:
                raise ComplexError(f"face mentions unknown vertex {v!r}")
            mask |= 1 << index[v]
        face_set.add(mask)
    if not face_set:
        raise ComplexError("a complex needs at least the empty face")
    return SComplex(vertices, _nonfaces_from_face_masks(len(index), face_set))


def from_facets(vertices: Sequence[Hashable], facets: Iterable[Iterable[Hashable]]) -> SComplex:
    """Builds the complex generated by `facets` (faces are all their subsets)."""
    index = _vertex_index(vertices)
    face_set = set()
    for facet in facets:
        mask = 0
        for v in facet:
            if v not in index:
                raise ComplexError(f"facet mentions unknown vertex {v!r}")
            mask |= 1 << index[v]
        if mask not in face_set:
            face_set.update(iter_submasks(mask))
    if not face_set:
        raise ComplexError("a complex needs at least one facet")
    return SComplex(vertices, _nonfaces_from_face_masks(len(index), face_set))


# --- Homology ---

def _boundary_rank(lower: List[int], upper: List[int], characteristic: int) -> int:
    """Rank of the boundary map from the span of `upper` faces to the span of `lower` faces."""
    if not lower or not upper:
        return 0
    position = {mask: k for k, mask in enumerate(lower)}
    rows = []
    for face in upper:
        row = [0] * len(lower)
        for j, v in enumerate(iter_bits(face)):
            row[position[face ^ 1 << v]] = 1 if j % 2 == 0 else -1
        rows.append(row)
    return rank(rows, len(lower), characteristic)


def reduced_homology(X: SComplex, k: FieldSpec) -> HPoly:
    """
    Reduced homology dimensions of X over the field k.

    Args:
        X (SComplex): The complex
        k (FieldSpec): Coefficient field

    Returns:
        HPoly: coefficient at t^d is dim_k H~_d(X; k); {empty face} gives t^-1

    Raises:
        SizeGuardError: If X has more than config.MAX_FACES faces
    """
    levels = X.faces_by_dimension()
    ranks = [0] * (len(levels) + 1)
    # ranks[m] is the rank of the boundary from level m to level m-1
    for m in range(1, len(levels)):
        ranks[m] = _boundary_rank(levels[m - 1], levels[m], k.characteristic)
    coefficients = {}
    for m, level in enumerate(levels):
        coefficients[m - 1] = len(level) - ranks[m] - ranks[m + 1]
    result = HPoly(coefficients)
    logger.debug("H~ over %s of %r: %s", k, X, result)
    return result


# --- Operations on complexes ---

def restrict(X: SComplex, R: Iterable[Hashable]) -> SComplex:
    """X|_R: vertices R, nonfaces the minimal nonfaces of X inside R."""
    mask = X.mask_of(R)
    keep = [v for k, v in enumerate(X.vertices) if mask >> k & 1]
    inside = [nonface for nonface in X.nonface_masks if nonface & mask == nonface]
    return from_nonfaces(keep, (X._subset(nonface) for nonface in inside))


def join(X: SComplex, Y: SComplex) -> SComplex:
    """The join X * Y on disjoint vertex sets; its nonfaces are those of X and of Y."""
    overlap = set(X.vertices) & set(Y.vertices)
    if overlap:
        raise ComplexError(f"join needs disjoint vertex sets, shared: {sorted(map(str, overlap))}")
    return from_nonfaces(X.vertices + Y.vertices, list(X.nonfaces) + list(Y.nonfaces))


def suspension(X: SComplex) -> SComplex:
    """Join of X with two fresh points forming a nonface pair."""
    depth = 0
    while ('suspension', depth, 0) in X._index or ('suspension', depth, 1) in X._index:
        depth += 1
    north, south = ('suspension', depth, 0), ('suspension', depth, 1)
    return join(X, from_nonfaces([north, south], [[north, south]]))


def _bipartite_graph(X: SComplex, A: Sequence[Hashable], B: Sequence[Hashable]) -> nx.Graph:
    side_a, side_b = set(A), set(B)
    if side_a & side_b:
        raise ComplexError("the two sides must be disjoint")
    if side_a | side_b != set(X.vertices):
        raise ComplexError("the two sides must cover the vertices")
    graph = nx.Graph()
    graph.add_nodes_from(X.vertices)
    for nonface in X.nonfaces:
        if len(nonface) != 2:
            raise ComplexError("nonfaces must be edges between the two sides")
        graph.add_edge(*nonface)
    try:
        split = bipartite.is_bipartite_node_set(graph, side_a)
    except nx.NetworkXException:
        split = False
    if not split:
        raise ComplexError("nonfaces must be edges between the two sides")
    return graph


def reduce_dominated(X: SComplex, A: Iterable[Hashable], B: Iterable[Hashable]) -> SComplex:
    """
    Deletes dominating vertices of a bipartite edge-ideal complex.

    A vertex w is deleted when another vertex u on the same side has
    N(u) contained in N(w); for equal neighbourhoods the later vertex goes.
    Deletions repeat, on both sides, until none apply. The result is
    homotopy equivalent to X.

    Args:
        X (SComplex): Complex whose nonfaces are the edges of a bipartite graph
        A (iterable): One side of the graph
        B (iterable): The other side

    Returns:
        SComplex: The restriction of X to the surviving vertices

    Raises:
        ComplexError: If the nonfaces are not bipartite edges between A and B
    """
    A, B = list(A), list(B)
    graph = _bipartite_graph(X, A, B)
    order = {v: k for k, v in enumerate(X.vertices)}

    def dominated(w, side):
        around = set(graph[w])
        for u in side:
            if u == w or u not in graph:
                continue
            other = set(graph[u])
            if other <= around and (other != around or order[u] < order[w]):
                return True
        return False

    changed = True
    while changed:
        changed = False
        for side in (A, B):
            candidates = [w for w in side if w in graph and dominated(w, side)]
            if candidates:
                victim = max(candidates, key=order.get)
                graph.remove_node(victim)
                logger.debug("Deleted dominating vertex %r", victim)
                changed = True
                break
    if graph.number_of_nodes() == len(X.vertices):
        return X
    return restrict(X, [v for v in X.vertices if v in graph])


def identify_vertices(X: SComplex, a1: Hashable, a2: Hashable, new: Hashable) -> SComplex:
    """
    Identifies a1 and a2 into the single vertex `new`.

    Valid when for every G avoiding a1, a2: G+a1 and G+a2 faces imply G+a1+a2
    is a face; the result is then homotopy equivalent to X.

    Raises:
        ComplexError: If the hypothesis fails or the vertices are invalid
    """
    if a1 == a2 or a1 not in X._index or a2 not in X._index:
        raise ComplexError("identify_vertices needs two distinct vertices of X")
    if new in X._index and new not in (a1, a2):
        raise ComplexError(f"vertex {new!r} already exists")
    b1, b2 = 1 << X._index[a1], 1 << X._index[a2]
    faces = [mask for level in X.faces_by_dimension() for mask in level]
    face_set = set(faces)
    for face in faces:
        if face & b1 and not face & b2:
            rest = face ^ b1
            if rest | b2 in face_set and rest | b1 | b2 not in face_set:
                raise ComplexError(f"cannot identify {a1!r} and {a2!r}: hypothesis fails")

    vertices = [new if v == a1 else v for v in X.vertices if v != a2]
    images = []
    for face in faces:
        members = [X.vertices[k] for k in iter_bits(face)]
        if face & (b1 | b2):
            members = [v for v in members if v not in (a1, a2)] + [new]
        images.append(members)
    return from_faces(vertices, images)
