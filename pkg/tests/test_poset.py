# tests/test_poset.py

import pytest
from hypothesis import given, settings, strategies as st

from lpbetti.errors import (
    CycleError,
    DuplicateElementError,
    EmptySubsetError,
    NotAForestError,
    PosetParseError,
    SizeGuardError,
    UnknownElementError,
)
from lpbetti.poset import (
    Poset,
    antichain,
    canonical_form,
    chain,
    components,
    count_isotone_maps,
    filter_generated,
    format_poset,
    hasse_graph,
    ideal_generated,
    is_antichain,
    is_rooted_forest,
    isotone_maps,
    max_of,
    maximal_antichains,
    min_of,
    multichains,
    parse_poset,
    remove_element,
    subset_leq,
    unique_min,
    width,
)


@st.composite
def posets(draw, max_size=6):
    """Random posets whose relations only go from lower to higher declaration index."""
    size = draw(st.integers(0, max_size))
    pairs = [(i, j) for i in range(size) for j in range(i + 1, size)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    labels = [f"p{i}" for i in range(size)]
    return Poset(labels, [(labels[i], labels[j]) for i, j in chosen])


def nonempty_subsets(P):
    return [P.subset_of(mask) for mask in range(1, P.full_mask + 1)]

# --- Parsing ---

def test_parse_v_poset():
    P = parse_poset("a\nb\nc\na < b\na < c")
    assert len(P) == 3
    assert len(P.covers) == 2
    assert P.leq('a', 'b')
    assert not P.leq('b', 'c')
    assert P.leq('c', 'c')


def test_parse_comments_chains_and_forward_references():
    P = parse_poset("# a chain\n1 < 2 < 3\n\n1\n2\n3   # last one\n")
    assert P.elements == ('1', '2', '3')
    assert P.covers == frozenset({('1', '2'), ('2', '3')})
    assert P.lt('1', '3')


def test_parse_reduces_relations_to_covers():
    P = parse_poset("x\ny\nz\nx < y\ny < z\nx < z")
    assert P.covers == frozenset({('x', 'y'), ('y', 'z')})
    assert P.leq('x', 'z')


def test_parse_cycle():
    with pytest.raises(CycleError) as excinfo:
        parse_poset("x\ny\nx < y\ny < x")
    assert "cycle detected" in str(excinfo.value)
    assert set(excinfo.value.cycle) == {'x', 'y'}


def test_parse_self_relation_is_a_cycle():
    with pytest.raises(CycleError):
        parse_poset("x\nx < x")


def test_parse_duplicate_element():
    with pytest.raises(DuplicateElementError):
        parse_poset("a\nb\na")


def test_parse_undeclared_element():
    with pytest.raises(UnknownElementError):
        parse_poset("a\na < b")


def test_parse_malformed_relation_reports_line():
    with pytest.raises(PosetParseError) as excinfo:
        parse_poset("a\nb\na <")
    assert excinfo.value.line_number == 3
    assert str(excinfo.value).startswith("line 3:")


def test_parse_rejects_two_names_on_a_line():
    with pytest.raises(PosetParseError):
        parse_poset("a b")


def test_format_poset_parses_back(p8):
    assert parse_poset(format_poset(p8)) == p8

# --- Minimal and maximal elements, antichains ---

def test_min_max_of_v(v):
    assert min_of(v, v.elements) == {'a'}
    assert max_of(v, v.elements) == {'b', 'c'}


def test_min_max_of_chain(chain3):
    assert min_of(chain3, chain3.elements) == {'1'}
    assert max_of(chain3, chain3.elements) == {'3'}


def test_min_max_of_antichain(antichain2):
    assert min_of(antichain2, {'x', 'y'}) == max_of(antichain2, {'x', 'y'}) == {'x', 'y'}


def test_min_of_empty_subset_is_empty(v):
    assert min_of(v, []) == frozenset()


def test_width_and_maximal_antichains(v, p8):
    assert width(v) == 2
    assert maximal_antichains(v) == [frozenset({'a'}), frozenset({'b', 'c'})]
    assert width(chain(4)) == 1
    assert width(p8) == 3
    assert is_antichain(v, {'b', 'c'})
    assert not is_antichain(v, {'a', 'b'})


def test_maximal_antichain_guard():
    with pytest.raises(SizeGuardError):
        maximal_antichains(antichain(21))

# --- The subset order ---

def test_subset_leq_examples(v):
    assert subset_leq(v, {'a'}, {'b', 'c'})
    assert not subset_leq(v, {'b'}, {'c'})
    assert subset_leq(v, {'b', 'c'}, {'b', 'c'})
    assert not subset_leq(v, {'a', 'b'}, {'a', 'b'})


def test_subset_leq_rejects_empty(v):
    with pytest.raises(EmptySubsetError):
        subset_leq(v, set(), {'a'})

# --- Isotone maps ---

def test_isotone_map_counts(v):
    assert len(isotone_maps(v, chain(2))) == 5
    assert len(multichains(2, v)) == 5
    assert multichains(3, chain(1)) == [('1', '1', '1')]


def test_multichains_order(v):
    assert multichains(2, v) == [('a', 'a'), ('a', 'b'), ('a', 'c'), ('b', 'b'), ('c', 'c')]


def test_multichains_need_a_slot(v):
    with pytest.raises(ValueError):
        multichains(0, v)

# --- Rooted forests ---

def test_forest_queries(v, diamond):
    assert is_rooted_forest(v)
    assert unique_min(v) == 'a'
    assert not is_rooted_forest(diamond)
    assert unique_min(antichain(2)) is None


def test_remove_root_of_v(v):
    rest = remove_element(v, 'a')
    assert rest == antichain(2, ['b', 'c'])
    assert components(rest) == [Poset(['b']), Poset(['c'])]


def test_remove_unknown_element(v):
    with pytest.raises(UnknownElementError):
        remove_element(v, 'z')


def test_eight_element_tree_has_root_a(p8):
    assert is_rooted_forest(p8)
    assert unique_min(p8) == 'a'


def test_components_of_forest(p7):
    parts = components(p7)
    assert [len(part) for part in parts] == [4, 3]
    assert parts[1] == chain(3, ['f', 'g', 'h'])


def test_hasse_graph_keeps_only_covers():
    graph = hasse_graph(chain(3, ['x', 'y', 'z']))
    assert set(graph.nodes) == {'x', 'y', 'z'}
    assert {frozenset(edge) for edge in graph.edges} == {frozenset('xy'), frozenset('yz')}


def test_components_follow_declaration_order():
    P = Poset(['d', 'a', 'b', 'c'], [('a', 'b'), ('d', 'c')])
    assert [part.elements for part in components(P)] == [('d', 'c'), ('a', 'b')]


def test_generated_ideal_and_filter(v):
    assert ideal_generated(v, {'b'}) == {'a', 'b'}
    assert filter_generated(v, {'a'}) == {'a', 'b', 'c'}


def test_canonical_form_identifies_isomorphic_forests(v, chain3, diamond):
    relabelled = Poset(['z', 'y', 'x'], [('x', 'y'), ('x', 'z')])
    assert canonical_form(relabelled) == canonical_form(v)
    assert canonical_form(chain3) != canonical_form(v)
    with pytest.raises(NotAForestError):
        canonical_form(diamond)

# --- Properties ---

@settings(max_examples=60, deadline=None)
@given(posets(max_size=8))
def test_leq_is_closure_of_covers(P):
    above = {p: set(P.upper_covers(p)) for p in P.elements}
    for p in P.elements:
        reach, frontier = {p}, [p]
        while frontier:
            node = frontier.pop()
            for q in above[node]:
                if q not in reach:
                    reach.add(q)
                    frontier.append(q)
        assert {q for q in P.elements if P.leq(p, q)} == reach


@settings(max_examples=30, deadline=None)
@given(posets(max_size=4))
def test_subset_leq_is_transitive(P):
    subsets = nonempty_subsets(P)
    below = {(A, B) for A in subsets for B in subsets if subset_leq(P, A, B)}
    for A, B in below:
        for B2, C in below:
            if B2 == B:
                assert (A, C) in below


@settings(max_examples=50, deadline=None)
@given(posets(max_size=6))
def test_min_max_are_antichains_inside_input(P):
    for S in nonempty_subsets(P)[:40]:
        for extreme in (min_of(P, S), max_of(P, S)):
            assert extreme <= S
            assert is_antichain(P, extreme)


@settings(max_examples=50, deadline=None)
@given(posets(max_size=6))
def test_width_is_largest_maximal_antichain(P):
    assert width(P) == max((len(a) for a in maximal_antichains(P)), default=0)


@settings(max_examples=30, deadline=None)
@given(posets(max_size=5))
def test_isotone_counts_grow_with_n(P):
    counts = [count_isotone_maps(P, chain(n)) for n in range(1, 4)]
    assert counts == sorted(counts)
