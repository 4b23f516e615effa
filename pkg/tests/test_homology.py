import pytest
from hypothesis import assume, given, settings, strategies as st

from gcdcomplex.divisor import IntegerSet, build_common, build_prime
from gcdcomplex.errors import DisconnectedError, EmptyComplexError
from gcdcomplex.homology import H1Basis, boundary_matrices, h1, induced_h1_map, loop_chain
from gcdcomplex.paths import EdgePath, eta_star
from gcdcomplex.simplicial import SimplicialComplex
from gcdcomplex.smith import determinant

from conftest import BOWTIE, RP2
from oracles import betti1_oracle, brute_common_simplices, brute_prime_simplices, rational_rank, torsion_oracle

HOLLOW = SimplicialComplex.from_facets([2, 3, 5], [[2, 3], [3, 5], [2, 5]])
SOLID = SimplicialComplex.from_facets([2, 3, 5], [[2, 3, 5]])

sets = st.lists(st.integers(2, 600), min_size=1, max_size=7)


def connected_set(values):
    X = IntegerSet.of(values)
    assume(build_common(X).is_connected())
    return X


def test_boundary_hollow_triangle():
    d1, d2 = boundary_matrices(HOLLOW)
    assert d1.shape == (3, 3) and d2.shape == (3, 0)
    assert rational_rank(d1.data) == 2


def test_boundary_solid_triangle():
    d1, d2 = boundary_matrices(SOLID)
    assert d2.shape == (3, 1)
    assert d2.column(0) == [1, -1, 1]
    assert (d1 @ d2).is_zero()


def test_boundary_bowtie_prime():
    d1, d2 = boundary_matrices(build_prime(BOWTIE))
    assert d1.shape == (6, 10) and d2.shape == (10, 4)


def test_boundary_empty():
    with pytest.raises(EmptyComplexError):
        boundary_matrices(SimplicialComplex.empty())


@given(sets)
def test_boundary_of_boundary(values):
    for K in (build_common(values), build_prime(values)):
        d1, d2 = boundary_matrices(K)
        assert (d1 @ d2).is_zero()


def test_h1_bowtie():
    assert h1(build_common(BOWTIE)) == h1(build_prime(BOWTIE))
    s = h1(build_common(BOWTIE))
    assert (s.betti1, s.torsion) == (2, [])
    s = h1(build_prime(BOWTIE))
    assert (s.betti1, s.torsion) == (2, [])


def test_h1_contractible():
    assert h1(build_common([2, 4, 8])).is_trivial
    assert h1(SOLID).is_trivial


def test_h1_hollow_triangle():
    s = h1(HOLLOW)
    assert (s.betti1, s.torsion) == (1, [])


def test_h1_torsion_projective_plane():
    for K in (build_common(RP2), build_prime(RP2)):
        s = h1(K)
        assert (s.betti1, s.torsion) == (0, [2])
        basis = H1Basis(K)
        gen = s.generator_cycles[0]
        assert basis.class_of(gen) == (1,)
        doubled = {e: 2 * c for e, c in gen.items()}
        assert basis.class_of(doubled) == (0,)


def test_h1_rejects_disconnected():
    with pytest.raises(DisconnectedError, match="compute per component"):
        h1(build_common([2, 3]))


def test_h1_rejects_empty():
    with pytest.raises(EmptyComplexError):
        h1(SimplicialComplex.empty())


@given(sets)
@settings(max_examples=80)
def test_h1_matches_rank_oracle(values):
    X = connected_set(values)
    for K, brute in ((build_common(X), brute_common_simplices(X.star)),
                     (build_prime(X), brute_prime_simplices(X.star))):
        s = h1(K)
        assert s.betti1 == betti1_oracle(brute)
        assert s.torsion == torsion_oracle(brute)


def test_h1_torsion_matches_oracle_rp2():
    assert h1(build_prime(RP2)).torsion == torsion_oracle(brute_prime_simplices(RP2))


@given(sets)
def test_generator_cycles_are_cycles(values):
    X = connected_set(values)
    for K in (build_common(X), build_prime(X)):
        basis = H1Basis(K)
        s = basis.summary
        assert len(s.generator_cycles) == s.betti1 + len(s.torsion)
        for i, gen in enumerate(s.generator_cycles):
            assert not any(basis.d1.apply(basis.chain_to_vector(gen)))
            expected = [0] * len(s.generator_cycles)
            expected[i] = 1
            assert basis.class_of(gen) == tuple(expected)


def test_class_of_rejects_non_cycle():
    basis = H1Basis(HOLLOW)
    with pytest.raises(ValueError, match="not a cycle"):
        basis.class_of({(2, 3): 1})


def test_loop_chain_orientation():
    chain = loop_chain(EdgePath((5, 3, 2, 5)))
    assert chain == {(2, 3): -1, (2, 5): 1, (3, 5): -1}


def test_induced_map_bowtie():
    rep = induced_h1_map(BOWTIE)
    assert rep.matrix.shape == (2, 2)
    assert abs(determinant(rep.matrix)) == 1
    assert rep.surjective and rep.isomorphism


def test_induced_map_trivial():
    rep = induced_h1_map([2, 4, 8])
    assert rep.matrix.shape == (0, 0)
    assert rep.isomorphism


def test_induced_map_hollow_triangles():
    rep = induced_h1_map([6, 10, 15])
    assert rep.matrix.shape == (1, 1)
    assert abs(rep.matrix[0, 0]) == 1
    assert rep.isomorphism


def test_induced_map_torsion():
    rep = induced_h1_map(RP2)
    assert rep.matrix.tolist() == [[1]]
    assert rep.isomorphism


def test_induced_map_disconnected():
    with pytest.raises(DisconnectedError):
        induced_h1_map([2, 3])


@given(sets)
@settings(max_examples=80)
def test_main_theorem_shadow(values):
    X = connected_set(values)
    rep = induced_h1_map(X)
    assert rep.source == rep.target
    assert rep.isomorphism


@given(sets)
def test_triangle_boundaries_map_to_trivial_class(values):
    X = connected_set(values)
    G, D = build_common(X), build_prime(X)
    hd = H1Basis(D)
    zero = (0,) * (hd.summary.betti1 + len(hd.summary.torsion))
    for a, b, c in G.simplices(2)[:20]:
        assert hd.class_of_loop(eta_star(X, EdgePath((a, b, c, a)))) == zero
