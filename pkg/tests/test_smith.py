from math import gcd
from itertools import combinations

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from gcdcomplex.smith import IntMatrix, cokernel, determinant, smith_normal_form


def minor_gcd_factors(rows):
    """Invariant factors from determinantal divisors (gcd of k x k minors)."""
    m, n = len(rows), len(rows[0]) if rows else 0
    out, prev = [], 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for r in combinations(range(m), k):
            for c in combinations(range(n), k):
                g = gcd(g, int(Matrix([[rows[i][j] for j in c] for i in r]).det()))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def check_snf(A, res):
    assert res.U @ A @ res.V == res.D
    assert abs(determinant(res.U)) == 1 and abs(determinant(res.V)) == 1
    assert res.U @ res.U_inv == IntMatrix.identity(A.rows)
    assert res.V @ res.V_inv == IntMatrix.identity(A.cols)
    diag = res.diagonal
    for i in range(A.rows):
        for j in range(A.cols):
            if i != j:
                assert res.D[i, j] == 0
    assert all(d >= 0 for d in diag)
    r = res.rank
    assert all(d == 0 for d in diag[r:])
    assert all(diag[i + 1] % diag[i] == 0 for i in range(r - 1))


def test_identity():
    A = IntMatrix.identity(3)
    res = smith_normal_form(A)
    assert res.D == A
    check_snf(A, res)


def test_small_example():
    A = IntMatrix([[2, 4], [6, 8]])
    res = smith_normal_form(A)
    assert res.diagonal == [2, 4]
    assert minor_gcd_factors(A.data) == [2, 4]
    check_snf(A, res)


def test_zero_matrix():
    A = IntMatrix.zeros(2, 3)
    res = smith_normal_form(A)
    assert res.D.is_zero()
    check_snf(A, res)


def test_empty_shapes():
    for shape in [(0, 3), (3, 0), (0, 0)]:
        A = IntMatrix.zeros(*shape)
        res = smith_normal_form(A)
        assert res.D.shape == shape
        assert res.rank == 0


def test_needs_divisibility_fix():
    # diag(2, 3) is diagonal but not in Smith form
    A = IntMatrix([[2, 0], [0, 3]])
    res = smith_normal_form(A)
    assert res.diagonal == [1, 6]
    check_snf(A, res)


def test_deterministic():
    A = IntMatrix([[4, -6, 2], [8, 3, 0], [1, 1, 1]])
    a, b = smith_normal_form(A), smith_normal_form(A)
    assert (a.U, a.V, a.D) == (b.U, b.V, b.D)


def test_determinant():
    assert determinant(IntMatrix([[2, 4], [6, 8]])) == -8
    assert determinant(IntMatrix([[0, 1], [1, 0]])) == -1
    assert determinant(IntMatrix.zeros(0, 0)) == 1


matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-12, 12), min_size=n, max_size=n), min_size=m, max_size=m
        )
    )
)


@given(matrices)
def test_snf_properties(rows):
    A = IntMatrix(rows)
    check_snf(A, smith_normal_form(A))


@given(matrices)
def test_snf_matches_sympy(rows):
    A = IntMatrix(rows)
    ours = smith_normal_form(A).invariant_factors
    D = sympy_snf(Matrix(rows), domain=ZZ)
    theirs = sorted(abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0)
    assert sorted(ours) == theirs


def test_cokernel_cyclic():
    torsion, betti, basis, coords = cokernel(IntMatrix([[2]]))
    assert (torsion, betti) == ([2], 0)
    assert coords([3]) == (1,)
    assert coords([4]) == (0,)


def test_cokernel_free():
    torsion, betti, basis, coords = cokernel(IntMatrix.zeros(2, 0))
    assert (torsion, betti) == ([], 2)
    e1, e2 = coords([1, 0]), coords([0, 1])
    assert abs(determinant(IntMatrix([e1, e2]))) == 1
    assert coords([5, -1]) == tuple(5 * a - b for a, b in zip(e1, e2))
