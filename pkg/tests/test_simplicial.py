# tests/test_simplicial.py

import json
from unittest.mock import patch

import pytest
from hypothesis import given, settings, strategies as st

from lpbetti.catalog import RP2_FACETS
from lpbetti.errors import ComplexError, FieldError, SizeGuardError
from lpbetti.simplicial import (
    FieldSpec,
    HPoly,
    from_faces,
    from_facets,
    from_nonfaces,
    identify_vertices,
    join,
    reduce_dominated,
    reduced_homology,
    restrict,
    suspension,
)

QQ = FieldSpec(0)
GF2 = FieldSpec(2)
FIELDS = [FieldSpec(0), FieldSpec(2), FieldSpec(3)]


@st.composite
def complexes(draw, max_vertices=8, tag='v'):
    size = draw(st.integers(0, max_vertices))
    vertices = [(tag, i) for i in range(size)]
    if not size:
        return from_nonfaces([], [])
    masks = draw(st.lists(st.integers(1, (1 << size) - 1), max_size=6))
    generators = [[vertices[i] for i in range(size) if mask >> i & 1] for mask in masks]
    return from_nonfaces(vertices, generators)


@st.composite
def bipartite_complexes(draw):
    """Edge-ideal complexes of random bipartite graphs, with their two sides."""
    A = [('a', i) for i in range(draw(st.integers(1, 4)))]
    B = [('b', j) for j in range(draw(st.integers(1, 4)))]
    pairs = [(a, b) for a in A for b in B]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return from_nonfaces(A + B, [list(edge) for edge in edges]), A, B


def triangle_boundary(vertices=(1, 2, 3)):
    return from_nonfaces(list(vertices), [list(vertices)])

# --- Fields and homology polynomials ---

def test_field_spec_validation():
    assert str(FieldSpec(0)) == "QQ"
    assert str(FieldSpec(7)) == "GF(7)"
    assert FieldSpec(2 ** 31 - 1).characteristic == 2 ** 31 - 1
    with pytest.raises(FieldError):
        FieldSpec(4)
    with pytest.raises(FieldError):
        FieldSpec(-3)


def test_hpoly_arithmetic():
    p = HPoly({-1: 1, 2: 0})
    assert p.items() == ((-1, 1),)
    assert p.shift(2) == HPoly.monomial(1)
    assert (HPoly.monomial(1) + HPoly.monomial(1)) == HPoly({1: 2})
    assert HPoly({0: 1, 1: 1}) * HPoly({1: 1}) == HPoly({1: 1, 2: 1})
    assert not HPoly.zero()
    assert HPoly({1: 1, 2: 1}).euler_characteristic() == 0
    assert str(HPoly({0: 2, 3: 1})) == "2t^0 + t^3"


def test_hpoly_rejects_low_degree():
    with pytest.raises(ValueError):
        HPoly({-2: 1})

# --- Construction ---

def test_from_nonfaces_triangle_boundary():
    X = triangle_boundary()
    assert X.nonfaces == {frozenset({1, 2, 3})}
    assert X.f_vector() == [1, 3, 3]


def test_from_nonfaces_without_generators_is_a_simplex():
    X = from_nonfaces([1, 2], [])
    assert X.facets() == [frozenset({1, 2})]
    assert reduced_homology(X, QQ).is_zero()


def test_from_nonfaces_keeps_minimal_generators():
    X = from_nonfaces([1, 2, 3], [[1, 2], [1, 2, 3]])
    assert X.nonfaces == {frozenset({1, 2})}


def test_from_nonfaces_rejects_empty_generator():
    with pytest.raises(ComplexError):
        from_nonfaces([1, 2], [[]])


def test_from_nonfaces_rejects_unknown_vertex():
    with pytest.raises(ComplexError):
        from_nonfaces([1, 2], [[1, 5]])


def test_from_faces_and_from_facets_agree():
    by_facets = from_facets([1, 2, 3, 4], [[1, 2], [2, 3], [3, 4]])
    by_faces = from_faces([1, 2, 3, 4], [[], [1], [2], [3], [4], [1, 2], [2, 3], [3, 4]])
    assert by_facets == by_faces
    assert sorted(map(sorted, by_facets.facets())) == [[1, 2], [2, 3], [3, 4]]


def test_dump_json_lists_nonfaces():
    data = json.loads(triangle_boundary().dump_json())
    assert data['vertices'] == ['1', '2', '3']
    assert data['nonfaces'] == [['1', '2', '3']]


def test_face_guard():
    X = from_nonfaces(list(range(6)), [])
    with patch('lpbetti.config.MAX_FACES', 10):
        with pytest.raises(SizeGuardError):
            X.f_vector()

# --- Restriction ---

def test_restrict_triangle_boundary_to_an_edge():
    X = restrict(triangle_boundary(), [1, 2])
    assert X.nonfaces == frozenset()
    assert X.facets() == [frozenset({1, 2})]


def test_restrict_keeps_nonfaces_inside():
    X = from_nonfaces([1, 2, 3, 4], [[1, 2], [3, 4]])
    assert restrict(X, [1, 2, 4]).nonfaces == {frozenset({1, 2})}


def test_restrict_to_nothing_is_the_empty_complex():
    X = restrict(triangle_boundary(), [])
    assert X.vertices == ()
    assert reduced_homology(X, QQ) == HPoly.monomial(-1)

# --- Homology ---

@pytest.mark.parametrize('k', FIELDS, ids=str)
def test_triangle_boundary_is_a_circle(k):
    assert reduced_homology(triangle_boundary(), k) == HPoly.monomial(1)


def test_empty_complex_homology():
    assert reduced_homology(from_nonfaces([], []), QQ) == HPoly.monomial(-1)


def test_projective_plane_depends_on_characteristic():
    X = from_facets(list(range(1, 7)), RP2_FACETS)
    assert X.f_vector() == [1, 6, 15, 10]
    assert reduced_homology(X, GF2) == HPoly({1: 1, 2: 1})
    assert reduced_homology(X, QQ).is_zero()
    assert reduced_homology(X, FieldSpec(3)).is_zero()
    assert X.reduced_euler_characteristic() == 0

# --- Join and suspension ---

def test_join_of_two_circles_is_a_three_sphere():
    X = join(triangle_boundary((1, 2, 3)), triangle_boundary(('a', 'b', 'c')))
    assert reduced_homology(X, QQ) == HPoly.monomial(3)


def test_join_rejects_shared_vertices():
    with pytest.raises(ComplexError):
        join(triangle_boundary(), triangle_boundary())


def test_suspension_of_empty_complex_is_two_points():
    S = suspension(from_nonfaces([], []))
    assert len(S.vertices) == 2
    assert reduced_homology(S, QQ) == HPoly.monomial(0)


def test_double_suspension_uses_fresh_vertices():
    S = suspension(suspension(triangle_boundary()))
    assert len(S.vertices) == 7
    assert reduced_homology(S, QQ) == HPoly.monomial(3)

# --- Reductions ---

def test_reduce_dominated_deletes_later_twin():
    X = from_nonfaces(['a', 'a2', 'b'], [['a', 'b'], ['a2', 'b']])
    Y = reduce_dominated(X, ['a', 'a2'], ['b'])
    assert Y.vertices == ('a', 'b')
    assert reduced_homology(Y, QQ) == reduced_homology(X, QQ) == HPoly.monomial(0)


def test_reduce_dominated_without_domination_returns_input():
    X = from_nonfaces([1, 2, 3, 4], [[1, 3], [2, 4]])
    assert reduce_dominated(X, [1, 2], [3, 4]) is X


def test_reduce_dominated_on_v_comparabilities():
    # R_1 = {a, b} against R_2 = {b, c} in V, tagged by slot
    A = [(1, 'a'), (1, 'b')]
    B = [(2, 'b'), (2, 'c')]
    edges = [[(1, 'a'), (2, 'b')], [(1, 'a'), (2, 'c')], [(1, 'b'), (2, 'b')]]
    X = from_nonfaces(A + B, edges)
    Y = reduce_dominated(X, A, B)
    assert set(Y.vertices) == {(1, 'b'), (2, 'c')}
    assert reduced_homology(X, QQ) == reduced_homology(Y, QQ) == HPoly.zero()


def test_reduce_dominated_rejects_non_bipartite_nonfaces():
    with pytest.raises(ComplexError):
        reduce_dominated(triangle_boundary(), [1], [2, 3])


@pytest.mark.parametrize('nonfaces,A,B', [
    ([[1, 2], [2, 3]], [1, 2], [3]),
    ([[1], [2, 3]], [1, 2], [3]),
    ([[1, 3]], [1, 2], [2, 3]),
    ([[1, 3]], [1], [3]),
])
def test_reduce_dominated_rejects_bad_sides(nonfaces, A, B):
    X = from_nonfaces([1, 2, 3], nonfaces)
    with pytest.raises(ComplexError):
        reduce_dominated(X, A, B)


def test_reduce_dominated_keeps_isolated_vertex():
    # N(2) is empty, so 1 dominates it and goes
    X = from_nonfaces([1, 2, 3], [[1, 3]])
    Y = reduce_dominated(X, [1, 2], [3])
    assert Y.vertices == (2, 3)
    assert reduced_homology(Y, QQ) == reduced_homology(X, QQ) == HPoly.zero()


def test_identify_vertices_on_a_path():
    X = from_facets([1, 2, 3], [[1, 2], [2, 3]])
    Y = identify_vertices(X, 1, 2, 'n')
    assert Y.vertices == ('n', 3)
    assert Y.facets() == [frozenset({'n', 3})]
    assert reduced_homology(Y, QQ) == reduced_homology(X, QQ)


def test_identify_vertices_checks_hypothesis():
    X = from_nonfaces([1, 2], [[1, 2]])
    with pytest.raises(ComplexError):
        identify_vertices(X, 1, 2, 'n')

# --- Properties ---

@pytest.mark.parametrize('k', FIELDS, ids=str)
@settings(max_examples=50, deadline=None)
@given(complexes(max_vertices=6, tag='x'), complexes(max_vertices=6, tag='y'))
def test_join_product_law(k, X, Y):
    lhs = reduced_homology(join(X, Y), k).shift(1)
    rhs = reduced_homology(X, k).shift(1) * reduced_homology(Y, k).shift(1)
    assert lhs == rhs


@pytest.mark.parametrize('k', FIELDS, ids=str)
@settings(max_examples=50, deadline=None)
@given(complexes())
def test_suspension_shifts_homology(k, X):
    assert reduced_homology(suspension(X), k) == reduced_homology(X, k).shift(1)


@pytest.mark.parametrize('k', FIELDS, ids=str)
@settings(max_examples=50, deadline=None)
@given(bipartite_complexes())
def test_reduce_dominated_preserves_homology(k, case):
    X, A, B = case
    assert reduced_homology(reduce_dominated(X, A, B), k) == reduced_homology(X, k)


@pytest.mark.parametrize('k', FIELDS, ids=str)
@settings(max_examples=50, deadline=None)
@given(complexes())
def test_euler_characteristic_matches_homology(k, X):
    assert X.reduced_euler_characteristic() == reduced_homology(X, k).euler_characteristic()


@settings(max_examples=50, deadline=None)
@given(complexes())
def test_euler_characteristic_is_field_independent(X):
    values = {reduced_homology(X, k).euler_characteristic() for k in FIELDS}
    assert len(values) == 1
