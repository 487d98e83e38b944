from fractions import Fraction

import pytest
from conftest import random_unimodular
from hypothesis import given, settings
from hypothesis import strategies as st

from lvmbkit import intlin as L
from lvmbkit.errors import NotSaturated, NotSplit
from lvmbkit.intlin import GaussRat, LatticeBasis


def is_hnf(H):
    """Lower echelon, positive pivots, entries left of a pivot reduced mod it."""
    rows, cols = len(H), len(H[0]) if H else 0
    last = -1
    for c in range(cols):
        col = [H[r][c] for r in range(rows)]
        nz = [r for r in range(rows) if col[r]]
        if not nz:
            continue
        p = nz[0]
        if p <= last or H[p][c] <= 0:
            return False
        for c2 in range(c):
            if not 0 <= H[p][c2] < H[p][c]:
                return False
        last = p
    return True


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def test_hnf_identity():
    H, U = L.hermite_normal_form(L.identity(3))
    assert H == L.identity(3) and U == L.identity(3)


def test_hnf_small():
    A = [[2, 4], [0, 2]]
    H, U = L.hermite_normal_form(A)
    assert H == [[2, 0], [0, 2]]
    assert L.matmul(A, U) == H and abs(L.det(U)) == 1


def test_hnf_tall():
    A = [[1, 0], [1, 1], [1, 0]]
    H, U = L.hermite_normal_form(A, 2)
    assert L.matmul(A, U) == H and is_hnf(H)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_hnf_predicates(A):
    ncols = len(A[0])
    H, U = L.hermite_normal_form(A, ncols)
    assert L.matmul(A, U, ncols) == H
    assert abs(L.det(U)) == 1
    assert is_hnf(H)


def test_hnf_canonical_under_unimodular(rng):
    for _ in range(40):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        A = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]
        W = random_unimodular(c, rng) if c > 1 else [[rng.choice((1, -1))]]
        H1, _ = L.hermite_normal_form(A, c)
        H2, _ = L.hermite_normal_form(L.matmul(A, W, c), c)
        assert H1 == H2


def test_snf_examples():
    S, U, V = L.smith_normal_form(L.identity(3))
    assert S == L.identity(3)
    S, U, V = L.smith_normal_form([[2, 0], [0, 3]])
    assert S == [[1, 0], [0, 6]]
    assert L.matmul(L.matmul(U, [[2, 0], [0, 3]]), V) == S
    S, U, V = L.smith_normal_form([[0, 0], [0, 0]])
    assert S == [[0, 0], [0, 0]]


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_snf_predicates(A):
    ncols = len(A[0])
    S, U, V = L.smith_normal_form(A, ncols)
    assert L.matmul(L.matmul(U, A, len(A)), V, ncols) == S
    assert abs(L.det(U)) == 1 and abs(L.det(V)) == 1
    diag = [S[i][i] for i in range(min(len(A), ncols))]
    for i in range(len(A)):
        for j in range(ncols):
            if i != j:
                assert S[i][j] == 0
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert diag[:len(nz)] == nz


def _saturated(basis, n):
    if not basis:
        return True
    divs = L.smith_divisors(L.from_columns([list(b) for b in basis], n), len(basis))
    return len(divs) == len(basis) and all(d == 1 for d in divs)


def test_kernel_examples(octant3):
    cfg, _ = octant3
    K = L.kernel_lattice_basis(cfg.vector_matrix(), 6)
    assert K.rank == 3
    for v in [(1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, 1)]:
        assert K.coordinates(v) is not None
    K = L.kernel_lattice_basis([[1, 1]], 2)
    assert K.basis in (((1, -1),), ((-1, 1),))
    K = L.kernel_lattice_basis([[1, 2, 3]], 3)
    assert K.rank == 2
    assert all(L.matvec([[1, 2, 3]], b) == [0] for b in K.basis)
    assert _saturated(K.basis, 3)


@settings(max_examples=50, deadline=None)
@given(matrices)
def test_kernel_saturated(A):
    n = len(A[0])
    K = L.kernel_lattice_basis(A, n)
    assert K.rank == n - L.rank_rational(A, n)
    for b in K.basis:
        assert not any(L.matvec(A, b))
    assert _saturated(K.basis, n)


def test_complete_basis(octant3):
    cfg, _ = octant3
    K = L.kernel_lattice_basis(cfg.vector_matrix(), 6)
    sub = LatticeBasis(6, ((0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, 1)), True)
    full = L.complete_lattice_basis(sub, K)
    assert full.basis[-2:] == sub.basis
    coords = [K.coordinates(b) for b in full.basis]
    assert abs(L.det(L.from_columns(coords, 3))) == 1

    same = L.complete_lattice_basis(K, K)
    assert same.basis == K.basis


def test_complete_basis_not_saturated():
    amb = LatticeBasis(2, ((1, 0), (0, 1)), True)
    with pytest.raises(NotSaturated):
        L.complete_lattice_basis(LatticeBasis(2, ((2, 0),)), amb)


def test_left_inverse(octant3):
    _, gd = octant3
    M = gd.matrix()
    Linv = L.integer_left_inverse(M, 3)
    assert L.matmul(Linv, M) == L.identity(3)
    assert Linv == [[0, 0, 0, 0, 1, 0], [1, 0, 0, 0, -1, 0], [0, 0, 1, 0, -1, 0]]
    assert L.integer_left_inverse(L.identity(3)) == L.identity(3)
    with pytest.raises(NotSplit):
        L.integer_left_inverse([[2]], 1)


def test_left_inverse_random(rng):
    for _ in range(30):
        n, r = rng.randint(2, 5), None
        r = rng.randint(1, n)
        W = random_unimodular(n, rng)
        A = [row[:r] for row in W]
        Linv = L.integer_left_inverse(A, r)
        assert L.matmul(Linv, A, n) == L.identity(r)


def test_reducer_membership():
    red = L.LatticeReducer([[2, 0, 0], [0, 3, 3]], 3)
    assert red.contains([4, 3, 3])
    assert not red.contains([1, 0, 0])
    assert red.reduce([3, 3, 4]) == red.reduce([1, 0, 1])


def test_gaussian_arithmetic():
    a = GaussRat(1, 2)
    b = GaussRat(Fraction(1, 2), -1)
    assert a * b == GaussRat(Fraction(5, 2), 0)
    assert (a / b) * b == a
    assert L.rank_gaussian([[GaussRat(1), L.I_UNIT], [L.I_UNIT, GaussRat(-1)]]) == 1
    assert L.rank_gaussian([[GaussRat(1), GaussRat(0)], [GaussRat(0), L.I_UNIT]]) == 2


def test_no_floats_anywhere(octant3):
    _, gd = octant3
    Linv = L.integer_left_inverse(gd.matrix(), 3)
    assert all(type(x) is int for row in Linv for x in row)
