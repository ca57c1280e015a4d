"""
strand.py - Fast Betti numbers of L(n,P) from Betti polynomials.

For a multidegree R with nonempty layers,

    beta(R, t) = t^n * prod_{i=1}^{n-1} H~(X_i(R), t),

where X_i(R) is the edge-ideal complex of the comparabilities p <= q between
max(R_i) and min(R_{i+1}). The coefficient of t^p is beta_{|R|-p, R}. Each
factor is computed on a complex with at most width(P) vertices: elements
shared by both sides split off as suspensions, and the rest is replaced by
the one-sided complex Y whose suspension is homotopy equivalent to X_i(R).

This module contains:
- x_complex / y_complex / y_reduced_homology
- beta_poly and the graded/multigraded tables
- classify_strands, the structural checks on a computed table
"""

from __future__ import annotations

import logging
from functools import lru_cache, partial
from typing import Dict, Iterator, Optional, Tuple

from . import config
from .betti_table import BettiTable
from .errors import EmptySubsetError, SizeGuardError
from .hochster import Multidegree, consecutive_leq, iter_layer_masks, table_from_multigraded
from .poset import Poset, filter_generated, ideal_generated, maximal_antichain_masks, width
from .report import FAIL, PASS, SKIP, Report
from .simplicial import FieldSpec, HPoly, SComplex, from_facets, from_nonfaces, reduced_homology
from .utils import iter_bits, map_ordered, popcount

logger = logging.getLogger(__name__)


def _adjacent_layers(P: Poset, R: Multidegree, i: int) -> Tuple[int, int]:
    if not 1 <= i < R.n:
        raise ValueError(f"layer index {i} outside 1..{R.n - 1}")
    left, right = P.mask_of(R.layers[i - 1]), P.mask_of(R.layers[i])
    if not left or not right:
        raise EmptySubsetError(f"layers {i} and {i + 1} must be nonempty")
    return P.max_mask(left), P.min_mask(right)


# --- The complexes X_i(R) and Y ---

def x_complex(P: Poset, R: Multidegree, i: int) -> SComplex:
    """
    X_i(R) on tagged copies (i, p) of max(R_i) and (i+1, q) of min(R_{i+1}).

    An element on both sides appears twice; the nonfaces are the pairs
    {(i, p), (i+1, q)} with p <= q.
    """
    top, low = _adjacent_layers(P, R, i)
    left = [(i, p) for p in P.names(top)]
    right = [(i + 1, q) for q in P.names(low)]
    edges = [
        [(i, p), (i + 1, q)]
        for p in P.names(top) for q in P.names(low) if P.leq(p, q)
    ]
    return from_nonfaces(left + right, edges)


def _y_from_masks(P: Poset, top: int, low: int) -> Tuple[Optional[SComplex], int]:
    shared = top & low
    a_rest, b_rest = top & ~shared, low & ~shared
    if not a_rest and not b_rest:
        return from_nonfaces([], []), popcount(shared)
    if not a_rest or not b_rest:
        # a vertex with no partner: X is a cone
        return None, 0
    if popcount(a_rest) <= popcount(b_rest):
        side = a_rest
        facets = [a_rest & ~P.down_mask(y) for y in iter_bits(b_rest)]
    else:
        side = b_rest
        facets = [b_rest & ~P.up_mask(x) for x in iter_bits(a_rest)]
    Y = from_facets(P.names(side), [P.names(facet) for facet in facets])
    return Y, popcount(shared) + 1


def y_complex(P: Poset, R: Multidegree, i: int) -> Tuple[Optional[SComplex], int]:
    """
    The reduced model of X_i(R).

    Returns:
        tuple: (Y, s) with H~(X_i(R), t) = t^s * H~(Y, t), or (None, 0) when
        X_i(R) is contractible
    """
    top, low = _adjacent_layers(P, R, i)
    return _y_from_masks(P, top, low)


@lru_cache(maxsize=65536)
def _pair_homology(P: Poset, top: int, low: int, k: FieldSpec) -> HPoly:
    if not P.leq_masks(top, low):
        return HPoly.zero()
    Y, shift = _y_from_masks(P, top, low)
    if Y is None:
        return HPoly.zero()
    return reduced_homology(Y, k).shift(shift)


def y_reduced_homology(P: Poset, R: Multidegree, i: int, k: FieldSpec) -> HPoly:
    """H~(X_i(R), t) computed through the reduced model; zero when max(R_i) <= min(R_{i+1}) fails."""
    top, low = _adjacent_layers(P, R, i)
    return _pair_homology(P, top, low, k)


# --- Betti polynomials ---

def _beta_poly_masks(n: int, P: Poset, k: FieldSpec, masks: Tuple[int, ...]) -> HPoly:
    if not consecutive_leq(P, masks):
        return HPoly.zero()
    poly = HPoly.monomial(1)
    for i in range(n - 1):
        factor = _pair_homology(P, P.max_mask(masks[i]), P.min_mask(masks[i + 1]), k)
        if not factor:
            return factor
        poly = poly * factor.shift(1)
    return poly


def beta_poly(n: int, P: Poset, R: Multidegree, k: FieldSpec) -> HPoly:
    """
    The Betti polynomial beta(R, t); its t^p coefficient is beta_{|R|-p, R}.

    Raises:
        EmptySubsetError: If some layer of R is empty
    """
    if R.n != n:
        raise ValueError(f"multidegree has {R.n} layers, expected {n}")
    if R.has_empty_layer():
        raise EmptySubsetError("Betti polynomials need nonempty layers")
    return _beta_poly_masks(n, P, k, R.masks(P))


def _check_strand_guard(n: int, P: Poset):
    if not config.strand_within_limits(n, len(P)):
        raise SizeGuardError(
            f"strand engine limited to |P| <= {config.STRAND_MAX_ELEMENTS} and n <= {config.STRAND_MAX_N}, "
            f"got |P|={len(P)}, n={n}")


def beta_polys(n: int, P: Poset, k: FieldSpec, workers: int = 1) -> Dict[Tuple[int, ...], HPoly]:
    """Betti polynomials of every pruned multidegree, keyed by layer masks in enumeration order."""
    _check_strand_guard(n, P)
    all_masks = list(iter_layer_masks(n, P, prune=True))
    logger.debug("Strand engine: %d pruned multidegrees for n=%d, |P|=%d", len(all_masks), n, len(P))
    polys = map_ordered(partial(_beta_poly_masks, n, P, k), all_masks, workers)
    return dict(zip(all_masks, polys))


def multigraded_betti_fast(n: int, P: Poset, k: FieldSpec,
                           workers: int = 1) -> Iterator[Tuple[Multidegree, Dict[int, int]]]:
    """Yields (R, {i: beta_{i,R}}) for every pruned R with a nonzero Betti polynomial."""
    for masks, poly in beta_polys(n, P, k, workers).items():
        if poly:
            size = sum(popcount(mask) for mask in masks)
            yield Multidegree.from_masks(P, masks), {size - p: value for p, value in poly.items()}


def betti_table_fast(n: int, P: Poset, k: FieldSpec, workers: int = 1) -> BettiTable:
    """
    Graded Betti table of L(n,P) (ideal convention) from Betti polynomials.

    Raises:
        SizeGuardError: Beyond the practical guard (|P| <= 12, n <= 5 by default)
    """
    return table_from_multigraded(multigraded_betti_fast(n, P, k, workers))


# --- Structural classification ---

def _all_pairs_comparable(P, masks):
    for i in range(len(masks) - 1):
        for p in iter_bits(masks[i]):
            if P.up_mask(p) & masks[i + 1] != masks[i + 1]:
                return False
    return True


def _perfect_matching(P, masks, c):
    for i in range(len(masks) - 1):
        top, low = P.max_mask(masks[i]), P.min_mask(masks[i + 1])
        if popcount(top) != c or popcount(low) != c:
            return False
        if any(popcount(P.up_mask(x) & low) != 1 for x in iter_bits(top)):
            return False
        if any(popcount(P.down_mask(y) & top) != 1 for y in iter_bits(low)):
            return False
    return True


def _top_degree_shape(P, masks, maximal):
    union = 0
    for mask in masks:
        union |= mask
    if union != P.full_mask:
        return False
    for i in range(len(masks) - 1):
        top = P.max_mask(masks[i])
        if top != P.min_mask(masks[i + 1]) or top not in maximal:
            return False
    return True


def _antichain_witness(n, P, D):
    """Layer masks ideal(D), D, ..., D, filter(D) for a maximal antichain mask D."""
    names = P.names(D)
    low = P.mask_of(ideal_generated(P, names))
    high = P.mask_of(filter_generated(P, names))
    return (low,) + (D,) * (n - 2) + (high,)


def _compare_strand(report, name, n, table, polys, strand_of, predicted):
    """Checks a predicted set of multidegrees against the observed nonzero entries of one strand each."""
    observed = set()
    wrong_values = 0
    expected: Dict[Tuple[int, int], int] = {}
    for masks, poly in polys.items():
        size = sum(popcount(mask) for mask in masks)
        strand = strand_of(size)
        if strand is None:
            continue
        if poly.coefficient(strand):
            observed.add(masks)
        if masks in predicted:
            if poly.coefficient(strand) != 1:
                wrong_values += 1
            key = (size - strand, size)
            expected[key] = expected.get(key, 0) + 1
    graded_ok = all(table.get(i, j) == value for (i, j), value in expected.items())
    missing, extra = predicted - observed, observed - predicted
    if missing or extra or wrong_values or not graded_ok:
        report.add(name, FAIL,
                   f"{len(missing)} predicted but absent, {len(extra)} observed but not predicted, "
                   f"{wrong_values} values other than 1, graded sums {'agree' if graded_ok else 'differ'}",
                   len(predicted))
    else:
        report.add(name, PASS, f"{len(predicted)} multidegrees, each beta = 1", len(predicted))


def classify_strands(n: int, P: Poset, k: FieldSpec, table: BettiTable,
                     polys: Dict[Tuple[int, ...], HPoly] = None) -> Report:
    """
    Checks the structural predictions against a computed table.

    Covers the first strand (all-pairs comparability), the last strand
    (perfect matchings between max(R_i) and min(R_{i+1}) of size width),
    strand starts, the top homological degree, the level criterion, the
    witness ideal(D), D, ..., D, filter(D) of each maximal antichain size,
    the cardinality identity and the first-strand length criterion. Mismatches
    are reported as failures, never raised.

    Args:
        n (int): Number of slots
        P (Poset): The poset
        k (FieldSpec): Coefficient field
        table (BettiTable): The graded table to check (ideal convention)
        polys (dict, optional): Betti polynomials keyed by layer masks, as
            returned by beta_polys; computed when omitted

    Returns:
        Report: One entry per check
    """
    table = table.to_ideal()
    if polys is None:
        polys = beta_polys(n, P, k)
    report = Report()
    size = len(P)
    c = width(P)
    maximal = set(maximal_antichain_masks(P))
    antichain_sizes = sorted({popcount(mask) for mask in maximal})

    first = {m for m in polys if _all_pairs_comparable(P, m)}
    _compare_strand(report, 'first strand', n, table, polys, lambda s: n, first)

    last_strand = c * (n - 1) + 1
    last = {m for m in polys if _perfect_matching(P, m, c)}
    _compare_strand(report, 'last strand', n, table, polys, lambda s: last_strand, last)

    # strand starts
    if n < 2:
        report.add('strand starts', SKIP, 'needs n >= 2')
    else:
        bad = []
        for i in range(1, c):
            strand = (i + 1) * n - i
            if not table.get(i, i + strand) or any(table.get(h, h + strand) for h in range(i)):
                bad.append(f"strand {strand} does not start at degree {i}")
            bound = i * n - (i - 1)
            if any(j - h > bound for (h, j), _ in table.items() if h <= i - 1):
                bad.append(f"strands above {bound} in degrees <= {i - 1}")
        if bad:
            report.add('strand starts', FAIL, "; ".join(bad), c - 1)
        else:
            report.add('strand starts', PASS, f"{c - 1} antichain sizes checked", c - 1)

    top_degree = size - 1
    top = {m for m in polys if _top_degree_shape(P, m, maximal)}
    _compare_strand(report, 'top degree', n, table, polys,
                    lambda s: s - top_degree if s - top_degree >= 1 else None, top)

    # level criterion
    degrees = table.internal_degrees(top_degree)
    predicted_level = n == 1 or len(antichain_sizes) == 1
    observed_level = len(degrees) == 1
    level_degree = size + (n - 1) * c
    if predicted_level != observed_level:
        report.add('level', FAIL, f"predicted level={predicted_level}, top degrees {degrees}")
    elif observed_level and degrees != [level_degree]:
        report.add('level', FAIL, f"level top degree {degrees[0]}, expected {level_degree}")
    else:
        report.add('level', PASS, f"level={observed_level}, top degrees {degrees}")

    # antichain top degrees
    if n < 2:
        report.add('antichain top degrees', SKIP, 'needs n >= 2')
    else:
        bad = []
        for d in antichain_sizes:
            D = min(mask for mask in maximal if popcount(mask) == d)
            witness = _antichain_witness(n, P, D)
            degree = sum(popcount(mask) for mask in witness)
            coefficient = polys.get(witness, HPoly.zero()).coefficient(degree - top_degree)
            if coefficient != 1 or not table.get(top_degree, degree):
                bad.append(f"{{{','.join(P.names(D))}}}: beta_{top_degree},{degree} = {coefficient}")
        if bad:
            report.add('antichain top degrees', FAIL, "; ".join(bad), len(antichain_sizes))
        else:
            degrees_seen = [size + (n - 1) * d for d in antichain_sizes]
            report.add('antichain top degrees', PASS, f"witnesses at top degrees {degrees_seen}",
                       len(antichain_sizes))

    # cardinality identity
    violations = 0
    for masks in polys:
        union = 0
        for mask in masks:
            union |= mask
        overlaps = sum(popcount(masks[i] & masks[i + 1]) for i in range(len(masks) - 1))
        if sum(popcount(mask) for mask in masks) != popcount(union) + overlaps:
            violations += 1
    if violations:
        report.add('cardinality identity', FAIL, f"{violations} violations", len(polys))
    else:
        report.add('cardinality identity', PASS, f"{len(polys)} multidegrees", len(polys))

    # first strand length
    if n < 2:
        report.add('first strand length', SKIP, 'needs n >= 2')
    else:
        length = max((i for (i, j), _ in table.items() if j - i == n), default=-1)
        universal = any(
            P.up_mask(x) | P.down_mask(x) == P.full_mask for x in range(size)
        )
        if (length == size - 1) == universal:
            report.add('first strand length', PASS, f"length {length}, comparable-to-all element: {universal}")
        else:
            report.add('first strand length', FAIL, f"length {length}, comparable-to-all element: {universal}")

    logger.info("STRAND: classified n=%d |P|=%d: %d checks, %d failures",
                n, size, len(report.results), len(report.failures))
    return report
