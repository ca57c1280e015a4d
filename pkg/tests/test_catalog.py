# tests/test_catalog.py

import pytest

from lpbetti import catalog
from lpbetti.poset import canonical_form, is_rooted_forest, width


@pytest.mark.parametrize('k,count', [(0, 1), (1, 1), (2, 2), (3, 5), (4, 16)])
def test_posets_up_to_isomorphism_counts(k, count):
    assert len(catalog.posets_up_to_isomorphism(k)) == count


@pytest.mark.parametrize('k,count', [(1, 1), (2, 2), (3, 4), (4, 9), (5, 20)])
def test_rooted_forest_counts(k, count):
    forests = catalog.rooted_forests_up_to_isomorphism(k)
    assert len(forests) == count
    assert all(is_rooted_forest(P) for P in forests)
    assert len({canonical_form(P) for P in forests}) == count


def test_named_posets():
    assert width(catalog.v_poset()) == 2
    assert len(catalog.eight_element_tree()) == 8
    assert width(catalog.seven_element_forest()) == 3


def test_rp2_poset_shape():
    P = catalog.rp2_poset()
    assert len(P) == 16
    assert len(P.covers) == 30
    assert width(P) == 10
