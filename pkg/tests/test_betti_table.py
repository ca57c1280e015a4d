# tests/test_betti_table.py

import pytest

from lpbetti.betti_table import IDEAL, QUOTIENT, BettiTable
from lpbetti.errors import ConventionError

V_ENTRIES = {(0, 2): 5, (1, 3): 5, (2, 4): 1, (1, 4): 1, (2, 5): 1}


@pytest.fixture
def v_table():
    return BettiTable(V_ENTRIES)


def test_from_rows_reads_strands(v_table):
    assert BettiTable.from_rows({2: [5, 5, 1], 3: [0, 1, 1]}) == v_table


def test_zero_entries_are_dropped():
    table = BettiTable({(0, 2): 1, (1, 3): 0})
    assert len(table) == 1
    assert table.get(1, 3) == 0


def test_invalid_entries():
    with pytest.raises(ValueError):
        BettiTable({(0, 2): -1})
    with pytest.raises(ValueError):
        BettiTable({(-1, 2): 1})
    with pytest.raises(ConventionError):
        BettiTable({}, 'projective')


def test_invariants(v_table):
    assert v_table.total() == 13
    assert v_table.projective_dimension == 2
    assert v_table.regularity == 3
    assert v_table.internal_degrees(1) == [3, 4]


def test_empty_table():
    table = BettiTable()
    assert table.projective_dimension == -1
    assert table.total() == 0
    assert table.to_frame().empty

# --- Conventions ---

def test_quotient_shift(v_table):
    quotient = v_table.to_quotient()
    assert quotient.convention == QUOTIENT
    assert quotient.get(0, 0) == 1
    assert quotient.get(1, 2) == 5
    assert quotient.get(3, 5) == 1
    assert quotient.to_ideal() == v_table
    assert v_table.in_convention(IDEAL) is v_table


def test_quotient_needs_a_single_unit_in_degree_zero():
    with pytest.raises(ConventionError):
        BettiTable({(1, 2): 3}, QUOTIENT)
    with pytest.raises(ConventionError):
        BettiTable({(0, 0): 1, (0, 2): 1}, QUOTIENT)


def test_tables_in_different_conventions_differ(v_table):
    assert v_table != v_table.to_quotient()
    assert BettiTable.trivial().to_ideal() == BettiTable()


def test_addition(v_table):
    doubled = v_table + v_table
    assert doubled.get(0, 2) == 10
    with pytest.raises(ConventionError):
        v_table + v_table.to_quotient()


def test_shift(v_table):
    moved = v_table.shift(1, 1)
    assert moved.get(1, 3) == 5
    assert moved.get(3, 6) == 1
    assert moved.total() == v_table.total()
    with pytest.raises(ConventionError):
        v_table.to_quotient().shift(0, 1)

# --- Serialization ---

def test_json_round_trip(v_table):
    quotient = v_table.to_quotient()
    assert BettiTable.from_json(quotient.to_json()) == quotient


def test_to_frame_layout(v_table):
    frame = v_table.to_frame()
    assert list(frame.index) == [2, 3]
    assert list(frame.columns) == [0, 1, 2]
    assert frame.loc[2].tolist() == [5, 5, 1]
    assert frame.loc[3].tolist() == [0, 1, 1]


def test_to_records(v_table):
    assert v_table.to_records()[0] == {'i': 0, 'j': 2, 'beta': 5}
