# tests/conftest.py

import pytest

from lpbetti import catalog
from lpbetti.poset import Poset, antichain, chain


@pytest.fixture
def v():
    return catalog.v_poset()


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def antichain2():
    return antichain(2, ['x', 'y'])


@pytest.fixture
def diamond():
    """a < b < d, a < c < d: the smallest poset that is not a rooted forest."""
    return Poset(['a', 'b', 'c', 'd'], [('a', 'b'), ('a', 'c'), ('b', 'd'), ('c', 'd')])


@pytest.fixture(scope='module')
def p1():
    return catalog.four_element_tree()


@pytest.fixture(scope='module')
def p7():
    return catalog.seven_element_forest()


@pytest.fixture(scope='module')
def p8():
    return catalog.eight_element_tree()


@pytest.fixture(autouse=True)
def no_vertex_override(monkeypatch):
    """Guards must not depend on the caller's LP_MAX_VERTICES."""
    monkeypatch.delenv('LP_MAX_VERTICES', raising=False)
