from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from gcdcomplex.divisor import build_common, build_prime
from gcdcomplex.errors import ComplexError, DisconnectedError, EmptyComplexError
from gcdcomplex.simplicial import SimplicialComplex, spanning_tree, tree_edges

from conftest import BOWTIE
from oracles import union_find_components

TETRA = SimplicialComplex.from_facets([2, 3, 5, 7], [[2, 3, 5, 7]])
SOLID = SimplicialComplex.from_facets([2, 4, 8], [[2, 4, 8]])


def test_from_facets_absorbs_subsets():
    K = SimplicialComplex.from_facets([2, 4, 8], [[2, 4, 8], [2, 4]])
    assert K.facets == ((2, 4, 8),)


def test_from_facets_isolated_points():
    K = SimplicialComplex.from_facets([2, 3], [[2], [3]])
    assert K.facets == ((2,), (3,))
    assert K.dimension == 0


def test_from_facets_keeps_uncovered_vertices():
    K = SimplicialComplex.from_facets([2, 3, 5], [[2, 3]])
    assert K.facets == ((2, 3), (5,))


def test_from_facets_bowtie_edges():
    edges = [(22, 210), (33, 210), (65, 210), (91, 210), (22, 33), (65, 91)]
    K = SimplicialComplex.from_facets(BOWTIE, edges + [(22,), (210,)])
    assert K.facets == tuple(sorted(edges))


def test_from_facets_unknown_vertex():
    with pytest.raises(ComplexError):
        SimplicialComplex.from_facets([2, 3], [[2, 5]])


def test_contains_simplex():
    assert SOLID.contains_simplex((2, 8))
    assert not build_common(BOWTIE).contains_simplex((22, 33, 210))
    assert build_prime(BOWTIE).contains_simplex((2, 3, 5, 7))


def test_skeleton_of_tetrahedron():
    assert TETRA.skeleton(2).facets == tuple(combinations((2, 3, 5, 7), 3))


def test_skeleton_zero_and_noop():
    assert SOLID.skeleton(0).facets == ((2,), (4,), (8,))
    edge = SimplicialComplex.from_facets([2, 11], [[2, 11]])
    assert edge.skeleton(2) == edge


def test_connectivity():
    assert build_common(BOWTIE).is_connected()
    assert not build_common([2, 3]).is_connected()
    assert SimplicialComplex.from_facets([7], []).is_connected()
    with pytest.raises(EmptyComplexError, match="connectivity undefined on empty complex"):
        SimplicialComplex.empty().is_connected()


def test_enumerate_simplices():
    D = build_prime(BOWTIE)
    assert len(D.simplices(1)) == 10
    assert build_common(BOWTIE).simplices(2) == []
    assert SOLID.simplices(5) == []


def test_spanning_tree_requires_connected():
    with pytest.raises(DisconnectedError):
        spanning_tree(build_common([2, 3]))


def test_spanning_tree_size():
    parent = spanning_tree(build_prime(BOWTIE))
    assert len(tree_edges(parent)) == 5


# random complexes on a small vertex pool
facet_lists = st.lists(
    st.sets(st.integers(2, 9), min_size=1, max_size=5), min_size=1, max_size=5
)


def make(facets):
    verts = set().union(*facets)
    return SimplicialComplex.from_facets(verts, facets)


@given(facet_lists)
def test_downward_closure(facets):
    K = make(facets)
    for f in K.facets:
        for k in range(1, len(f) + 1):
            for sub in combinations(f, k):
                assert K.contains_simplex(sub)


@given(facet_lists)
def test_no_facet_contains_another(facets):
    K = make(facets)
    sets = [set(f) for f in K.facets]
    assert not any(a < b for a in sets for b in sets)


@given(facet_lists, st.integers(0, 4), st.integers(0, 4))
def test_skeleton_composes(facets, j, k):
    K = make(facets)
    assert K.skeleton(j).skeleton(k) == K.skeleton(min(j, k))


@given(facet_lists)
def test_vertex_count(facets):
    K = make(facets)
    assert len(K.simplices(0)) == len(K.vertices)


@given(facet_lists)
def test_connectivity_agrees_with_union_find(facets):
    K = make(facets)
    comps = union_find_components(K.vertices, K.simplices(1))
    assert K.is_connected() == (comps == 1)
    assert len(K.components()) == comps
