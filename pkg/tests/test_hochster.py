# tests/test_hochster.py

from unittest.mock import patch

import pytest

from lpbetti.betti_table import BettiTable
from lpbetti.catalog import posets_up_to_isomorphism
from lpbetti.errors import SizeGuardError
from lpbetti.hochster import (
    Multidegree,
    beta_R_oracle,
    betti_table_oracle,
    consecutive_leq,
    degree_budget,
    enumerate_multidegrees,
    iter_layer_masks,
    multigraded_betti_oracle,
    table_from_multigraded,
)
from lpbetti.poset import antichain, chain, width
from lpbetti.simplicial import FieldSpec

QQ = FieldSpec(0)
GF2 = FieldSpec(2)

V_TABLE = {(0, 2): 5, (1, 3): 5, (2, 4): 1, (1, 4): 1, (2, 5): 1}

# --- Multidegrees ---

def test_multidegree_views(v):
    R = Multidegree.of({'a'}, {'b', 'c'})
    assert R.n == 2
    assert R.size == 3
    assert R.support == {(1, 'a'), (2, 'b'), (2, 'c')}
    assert R.masks(v) == (0b001, 0b110)
    assert R.format(v) == "a;b,c"
    assert Multidegree.from_masks(v, (0b001, 0b110)) == R


def test_empty_layers(v):
    assert Multidegree.of({'a'}, set()).has_empty_layer()
    assert Multidegree.of(set(), set()).format(v) == ";"


def test_consecutive_leq(v):
    assert consecutive_leq(v, Multidegree.of({'a'}, {'b', 'c'}).masks(v))
    assert not consecutive_leq(v, Multidegree.of({'b'}, {'c'}).masks(v))
    assert not consecutive_leq(v, (0b001, 0))

# --- Enumeration ---

def test_degree_budget(v, p8):
    assert degree_budget(2, v) == 5
    assert degree_budget(2, p8) == 11


def test_pruned_count_for_v(v):
    # every pruned multidegree of a rooted tree carries exactly one Betti number
    assert len(list(enumerate_multidegrees(2, v))) == 13
    assert len(list(enumerate_multidegrees(2, v))) == sum(V_TABLE.values())


def test_pruned_n1_is_nonempty_subsets(v):
    layers = [R.layers[0] for R in enumerate_multidegrees(1, v)]
    assert len(layers) == 7
    assert all(layers)


def test_unpruned_count(v):
    assert len(list(enumerate_multidegrees(2, v, prune=False))) == 64


def test_enumeration_is_lexicographic(v):
    masks = list(iter_layer_masks(2, v))
    assert masks == sorted(masks)


def test_pruned_sequences_satisfy_the_filter(p1):
    budget = degree_budget(3, p1)
    for masks in iter_layer_masks(3, p1):
        assert consecutive_leq(p1, masks)
        assert sum(bin(m).count('1') for m in masks) <= budget

# --- Oracle ---

def test_oracle_generator_multidegree():
    R = Multidegree.of({'1'}, {'1'})
    assert beta_R_oracle(2, chain(2), R, QQ) == {0: 1}


def test_oracle_incomparable_layers_vanish(v):
    assert beta_R_oracle(2, v, Multidegree.of({'b'}, {'c'}), QQ) == {}


def test_oracle_repeated_antichain(v):
    assert beta_R_oracle(2, v, Multidegree.of({'b', 'c'}, {'b', 'c'}), QQ) == {1: 1}


def test_oracle_tables(v, antichain2):
    assert betti_table_oracle(2, chain(2), QQ) == BettiTable({(0, 2): 3, (1, 3): 2})
    assert betti_table_oracle(2, antichain2, QQ) == BettiTable({(0, 2): 2, (1, 4): 1})
    assert betti_table_oracle(2, v, QQ) == BettiTable(V_TABLE)


def test_oracle_table_with_workers(v):
    assert betti_table_oracle(2, v, QQ, workers=2) == BettiTable(V_TABLE)


def test_oracle_streams_nonzero_multidegrees(v):
    pairs = list(multigraded_betti_oracle(2, v, QQ))
    assert len(pairs) == 13
    assert all(betti for _, betti in pairs)
    assert table_from_multigraded(pairs) == BettiTable(V_TABLE)


def test_oracle_guard(v):
    with patch('lpbetti.config.ORACLE_MAX_VERTICES', 4):
        with pytest.raises(SizeGuardError):
            betti_table_oracle(2, v, QQ)


def test_oracle_guard_override_raises_limit(monkeypatch, v):
    monkeypatch.setenv('LP_MAX_VERTICES', '6')
    with patch('lpbetti.config.ORACLE_MAX_VERTICES', 4):
        assert betti_table_oracle(2, v, QQ) == BettiTable(V_TABLE)

# --- Invariants on small posets ---

@pytest.mark.slow
@pytest.mark.parametrize('n', [1, 2])
def test_pruned_and_unpruned_tables_agree(n):
    for P in posets_up_to_isomorphism(3):
        assert betti_table_oracle(n, P, QQ, prune=True) == betti_table_oracle(n, P, QQ, prune=False)


@pytest.mark.parametrize('n', [2, 3])
def test_projective_dimension_and_regularity(n):
    for P in posets_up_to_isomorphism(3):
        table = betti_table_oracle(n, P, QQ)
        assert table.projective_dimension == len(P) - 1
        assert table.regularity == width(P) * (n - 1) + 1


def test_euler_characteristic_per_multidegree_is_field_independent():
    for P in posets_up_to_isomorphism(3) + [antichain(3)]:
        for R in enumerate_multidegrees(2, P):
            over_qq = beta_R_oracle(2, P, R, QQ)
            over_gf2 = beta_R_oracle(2, P, R, GF2)
            assert sum((-1) ** i * b for i, b in over_qq.items()) == \
                sum((-1) ** i * b for i, b in over_gf2.items())
