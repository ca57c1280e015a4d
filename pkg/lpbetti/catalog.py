"""
catalog.py - Named posets and exhaustive small-poset enumeration.

This module contains:
- The seeded posets (V, chains, antichains, the tree examples, the RP^2 poset)
  and a seeding function that writes them into a poset directory
- Enumeration of all posets / rooted forests on k elements up to isomorphism
"""

import logging
import os
from itertools import permutations, product
from string import ascii_lowercase

from . import dal
from .poset import Poset, antichain, canonical_form, chain, format_poset

logger = logging.getLogger(__name__)

# Facets of the 6-vertex triangulation of the real projective plane
RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]


# --- Named posets ---

def v_poset():
    """{a < b, a < c}"""
    return Poset(['a', 'b', 'c'], [('a', 'b'), ('a', 'c')])


def four_element_tree():
    """{b < c < d, b < e}"""
    return Poset(['b', 'c', 'd', 'e'], [('b', 'c'), ('c', 'd'), ('b', 'e')])


def seven_element_forest():
    """The four element tree next to the chain f < g < h."""
    return Poset(['b', 'c', 'd', 'e', 'f', 'g', 'h'],
                 [('b', 'c'), ('c', 'd'), ('b', 'e'), ('f', 'g'), ('g', 'h')])


def eight_element_tree():
    """The seven element forest joined under a new root a."""
    return Poset(['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'],
                 [('a', 'b'), ('a', 'f'), ('b', 'c'), ('b', 'e'), ('c', 'd'), ('f', 'g'), ('g', 'h')])


def rp2_poset():
    """
    Height-one poset of the RP^2 triangulation.

    Minimal elements a1..a6 are the vertices, maximal elements b1..b10 the
    facets, and a_i < b_j iff vertex i is not in facet j.
    """
    minimal = [f"a{i}" for i in range(1, 7)]
    maximal = [f"b{j}" for j in range(1, len(RP2_FACETS) + 1)]
    relations = [
        (f"a{i}", f"b{j}")
        for j, facet in enumerate(RP2_FACETS, start=1)
        for i in range(1, 7) if i not in facet
    ]
    return Poset(minimal + maximal, relations)


def seed_posets():
    """(file name, poset) pairs for the bundled data directory."""
    return [
        ('v.poset', v_poset()),
        ('chain3.poset', chain(3)),
        ('antichain2.poset', antichain(2, ['x', 'y'])),
        ('p1.poset', four_element_tree()),
        ('p7.poset', seven_element_forest()),
        ('p8.poset', eight_element_tree()),
        ('rp2.poset', rp2_poset()),
    ]


def seed_poset_files(directory=None, overwrite=False):
    """
    Writes the seeded posets into `directory` (the bundled data directory by default).

    Returns:
        list: Paths that were written
    """
    directory = directory or dal.POSET_DIR
    os.makedirs(directory, exist_ok=True)
    written = []
    for name, poset in seed_posets():
        path = os.path.join(directory, name)
        if os.path.exists(path) and not overwrite:
            continue
        if dal.write_poset_text(path, format_poset(poset)):
            written.append(path)
    logger.info("Seeded %d poset files into %s", len(written), directory)
    return written


# --- Exhaustive enumeration ---

def _labels(k):
    return list(ascii_lowercase[:k])


def posets_up_to_isomorphism(k):
    """
    One representative of every isomorphism class of posets on k elements.

    Strict orders on k labelled points are enumerated as relation subsets and
    deduplicated by the lexicographically least relabelled relation set.
    """
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
    perms = list(permutations(range(k)))
    seen = set()
    result = []
    for choice in product((False, True), repeat=len(pairs)):
        relation = {pair for pair, chosen in zip(pairs, choice) if chosen}
        if any((j, i) in relation for i, j in relation):
            continue
        if any((i, l) not in relation for i, j in relation for jj, l in relation if j == jj):
            continue
        key = min(tuple(sorted((perm[i], perm[j]) for i, j in relation)) for perm in perms)
        if key in seen:
            continue
        seen.add(key)
        labels = _labels(k)
        result.append(Poset(labels, [(labels[i], labels[j]) for i, j in key]))
    return result


def rooted_forests_up_to_isomorphism(k):
    """One representative of every rooted forest shape on k elements."""
    labels = _labels(k)
    seen = set()
    result = []
    for parents in product(*[range(-1, i) for i in range(k)]):
        relations = [(labels[p], labels[i]) for i, p in enumerate(parents) if p >= 0]
        poset = Poset(labels, relations)
        key = canonical_form(poset)
        if key in seen:
            continue
        seen.add(key)
        result.append(poset)
    return result
