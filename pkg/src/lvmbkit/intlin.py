"""Exact integer and rational linear algebra.

Matrices are lists of rows of Python ints (or Fractions where noted).
Nothing in here ever touches a float.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import NotSaturated, NotSplit, ShapeMismatch

# Row subsets tried before integer_left_inverse falls back to the SNF route.
_MINOR_SEARCH_LIMIT = 20000


# ---------------------------------------------------------------------------
# small helpers

def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def shape(A, ncols=None):
    rows = len(A)
    cols = len(A[0]) if rows else (ncols or 0)
    return rows, cols


def transpose(A, ncols=None):
    r, c = shape(A, ncols)
    return [[A[i][j] for i in range(r)] for j in range(c)]


def matmul(A, B, inner=None):
    if not A:
        return []
    n = len(B) if B else (inner or 0)
    c = len(B[0]) if B else 0
    out = []
    for row in A:
        if len(row) != n:
            raise ShapeMismatch("inner dimensions differ")
        acc = [0] * c
        for k, a in enumerate(row):
            if a:
                Bk = B[k]
                for j in range(c):
                    acc[j] += a * Bk[j]
        out.append(acc)
    return out


def matvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def columns(A, ncols=None):
    return transpose(A, ncols)


def from_columns(cols, nrows=None):
    if not cols:
        return [[] for _ in range(nrows or 0)]
    return [list(r) for r in zip(*cols)]


def _xgcd(a, b):
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def det(A):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rref_rational(A, ncols=None):
    """Reduced row echelon form over Q. Returns (R, pivot_columns)."""
    r, c = shape(A, ncols)
    R = [[Fraction(x) for x in row] for row in A]
    pivots = []
    row = 0
    for col in range(c):
        if row == r:
            break
        piv = next((i for i in range(row, r) if R[i][col] != 0), None)
        if piv is None:
            continue
        R[row], R[piv] = R[piv], R[row]
        p = R[row][col]
        R[row] = [x / p for x in R[row]]
        for i in range(r):
            if i != row and R[i][col] != 0:
                f = R[i][col]
                R[i] = [a - f * b for a, b in zip(R[i], R[row])]
        pivots.append(col)
        row += 1
    return R, pivots


def rank_rational(A, ncols=None):
    return len(rref_rational(A, ncols)[1])


def solve_rational(A, B, ncols=None):
    """Solve A X = B exactly over Q for a full-column-rank A.

    B is a matrix (list of rows). Returns X as rows of Fractions, or None
    when the system is inconsistent or A has a kernel.
    """
    r, c = shape(A, ncols)
    bc = len(B[0]) if B else 0
    aug = [list(A[i]) + list(B[i]) for i in range(r)]
    R, piv = rref_rational(aug, c + bc)
    if piv != list(range(c)):
        return None
    for i in range(c, r):
        if any(R[i][c:]):
            return None
    return [R[i][c:] for i in range(c)]


def inverse_rational(A):
    n = len(A)
    X = solve_rational(A, identity(n), n)
    if X is None:
        raise ValueError("matrix is singular")
    return X


def as_integer_matrix(X):
    out = []
    for row in X:
        new = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                return None
            new.append(x.numerator)
        out.append(new)
    return out


# ---------------------------------------------------------------------------
# normal forms

def _col_combine(M, i, j, a, b, c, d):
    """Replace columns (i, j) by (a*ci + b*cj, c*ci + d*cj)."""
    for row in M:
        x, y = row[i], row[j]
        row[i] = a * x + b * y
        row[j] = c * x + d * y


def _col_addmul(M, dst, src, q):
    if q:
        for row in M:
            row[dst] += q * row[src]


def _col_neg(M, i):
    for row in M:
        row[i] = -row[i]


def hermite_normal_form(A, ncols=None):
    """Column-style Hermite normal form.

    Returns (H, U) with H = A U, U unimodular. H is lower echelon: the
    pivot of column j sits in a strictly lower row than the pivot of
    column j-1, pivots are positive, entries left of a pivot are reduced
    into [0, pivot), and zero columns come last.
    """
    m, n = shape(A, ncols)
    H = [list(row) for row in A]
    U = identity(n)
    piv = 0
    for r in range(m):
        if piv == n:
            break
        for c in range(piv + 1, n):
            b = H[r][c]
            if b == 0:
                continue
            a = H[r][piv]
            g, x, y = _xgcd(a, b)
            # [x -b/g; y a/g] has determinant one
            for M in (H, U):
                _col_combine(M, piv, c, x, y, -b // g, a // g)
        p = H[r][piv]
        if p == 0:
            continue
        if p < 0:
            _col_neg(H, piv)
            _col_neg(U, piv)
            p = -p
        for c in range(piv):
            q = H[r][c] // p
            if q:
                _col_addmul(H, c, piv, -q)
                _col_addmul(U, c, piv, -q)
        piv += 1
    return H, U


def hnf_rank(H):
    """Number of nonzero columns of a matrix already in column HNF."""
    if not H:
        return 0
    return sum(1 for j in range(len(H[0])) if any(row[j] for row in H))


def smith_normal_form(A, ncols=None):
    """Return (S, U, V) with S = U A V diagonal and d_i | d_(i+1)."""
    m, n = shape(A, ncols)
    S = [list(row) for row in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        if i != j:
            S[i], S[j] = S[j], S[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for M in (S, V):
                for row in M:
                    row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        if q:
            S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = S[t][t]
            for i in range(t + 1, m):
                add_row(i, t, -(S[i][t] // p))
            for j in range(t + 1, n):
                q = S[t][j] // p
                if q:
                    _col_addmul(S, j, t, -q)
                    _col_addmul(V, j, t, -q)
            rest = [(abs(S[i][t]), i, t) for i in range(t + 1, m) if S[i][t]]
            rest += [(abs(S[t][j]), t, j) for j in range(t + 1, n) if S[t][j]]
            if rest:
                _, i, j = min(rest)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if S[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
    return S, U, V


def smith_divisors(A, ncols=None):
    S, _, _ = smith_normal_form(A, ncols)
    m, n = shape(S, ncols)
    return [S[i][i] for i in range(min(m, n)) if S[i][i]]


# ---------------------------------------------------------------------------
# lattices

@dataclass(frozen=True)
class LatticeBasis:
    """A sublattice of Z^ambient given by basis columns."""

    ambient: int
    basis: tuple  # tuple of column vectors (tuples of ints)
    saturated: bool = False

    @property
    def rank(self):
        return len(self.basis)

    def matrix(self):
        """The ambient x rank matrix whose columns are the basis vectors."""
        return from_columns([list(b) for b in self.basis], self.ambient)

    def coordinates(self, v):
        """Integer coordinates of v in this basis, or None if v is outside."""
        if self.rank == 0:
            return [] if not any(v) else None
        X = solve_rational(self.matrix(), [[x] for x in v], self.rank)
        if X is None:
            return None
        col = as_integer_matrix(X)
        return None if col is None else [row[0] for row in col]


def canonical_basis(vectors, ambient):
    """Canonical (column HNF) basis of the lattice spanned by vectors."""
    if not vectors:
        return ()
    H, _ = hermite_normal_form(from_columns([list(v) for v in vectors], ambient), len(vectors))
    r = hnf_rank(H)
    return tuple(tuple(col) for col in transpose(H, len(vectors))[:r])


def kernel_lattice_basis(A, ncols=None):
    """Saturated lattice ker(A) ∩ Z^n, returned in canonical HNF basis."""
    _, n = shape(A, ncols)
    H, U = hermite_normal_form(A, n)
    r = hnf_rank(H)
    kern = [col for col in transpose(U, n)[r:]]
    return LatticeBasis(n, canonical_basis(kern, n), saturated=True)


def is_saturated_in(sub_coords):
    """True when the columns of sub_coords span a saturated sublattice."""
    return all(d == 1 for d in smith_divisors(sub_coords))


def complete_lattice_basis(sub, ambient):
    """Extend a basis of a saturated sublattice to a basis of the ambient.

    The returned basis ends with exactly the vectors of ``sub``.
    """
    r, t = ambient.rank, sub.rank
    coords = []
    for v in sub.basis:
        c = ambient.coordinates(v)
        if c is None:
            raise NotSaturated("sub is not contained in the ambient lattice")
        coords.append(c)
    if t == 0:
        return LatticeBasis(ambient.ambient, ambient.basis, ambient.saturated)
    Sc = from_columns(coords, r)
    D, U, V = smith_normal_form(Sc, t)
    divisors = [D[i][i] for i in range(min(r, t))]
    if len(divisors) < t or any(d != 1 for d in divisors):
        raise NotSaturated("sublattice is not saturated", divisors=divisors)
    Uinv = as_integer_matrix(inverse_rational(U))
    comp = transpose(Uinv, r)[t:]
    A = ambient.matrix()
    out = [tuple(matvec(A, c)) for c in comp] + [tuple(v) for v in sub.basis]
    return LatticeBasis(ambient.ambient, tuple(out), ambient.saturated)


def integer_left_inverse(A, ncols=None):
    """Integer matrix L with L A = I for a split monomorphism A.

    The lexicographically first set of rows forming a unimodular maximal
    minor is inverted when such a set exists within a bounded search;
    otherwise the Smith form gives L = V [I 0] U.
    """
    n, r = shape(A, ncols)
    if r == 0:
        return []
    if r > n:
        raise NotSplit("more columns than rows")
    for count, rows in enumerate(combinations(range(n), r)):
        if count >= _MINOR_SEARCH_LIMIT:
            break
        sub = [A[i] for i in rows]
        if abs(det(sub)) == 1:
            inv = as_integer_matrix(inverse_rational(sub))
            L = zeros(r, n)
            for a, i in enumerate(rows):
                for b in range(r):
                    L[b][i] = inv[b][a]
            return L
    S, U, V = smith_normal_form(A, r)
    if any(S[i][i] != 1 for i in range(r)):
        raise NotSplit("no integer left inverse", divisors=[S[i][i] for i in range(r)])
    return matmul(V, U[:r])


class LatticeReducer:
    """Canonical residues modulo an integer lattice of relations.

    Reduction eliminates trailing coordinates first, so residues keep the
    lowest-index generators. Two vectors are congruent iff their residues
    coincide.
    """

    def __init__(self, generators, dim):
        self.dim = dim
        rev = [list(reversed(g)) for g in generators]
        if rev:
            H, _ = hermite_normal_form(from_columns(rev, dim), len(rev))
            r = hnf_rank(H)
            cols = transpose(H, len(rev))[:r]
        else:
            cols = []
        self._cols = []
        for col in cols:
            p_row = next(i for i, x in enumerate(col) if x)
            self._cols.append((p_row, col[p_row], col))
        self.rank = len(self._cols)

    def reduce(self, v):
        w = list(reversed(list(v)))
        for p_row, p, col in self._cols:
            q = w[p_row] // p
            if q:
                for i in range(p_row, self.dim):
                    w[i] -= q * col[i]
        return tuple(reversed(w))

    def contains(self, v):
        return not any(self.reduce(v))

    def pivot_positions(self):
        """Original-coordinate indices eliminated by the reduction."""
        return sorted(self.dim - 1 - p for p, _, _ in self._cols)


# ---------------------------------------------------------------------------
# Gaussian rationals

class GaussRat:
    """Exact complex number re + i*im with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def of(x):
        return x if isinstance(x, GaussRat) else GaussRat(x)

    def __add__(self, o):
        o = GaussRat.of(o)
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-GaussRat.of(o))

    def __rsub__(self, o):
        return GaussRat.of(o) - self

    def __mul__(self, o):
        o = GaussRat.of(o)
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __truediv__(self, o):
        o = GaussRat.of(o)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        p = self * o.conjugate()
        return GaussRat(p.re / n, p.im / n)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = GaussRat(o)
        if not isinstance(o, GaussRat):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussRat({self.re}, {self.im})"


I_UNIT = GaussRat(0, 1)


def rank_gaussian(rows):
    """Rank over Q(i) via the real 2x2 block embedding."""
    if not rows:
        return 0
    real = []
    for row in rows:
        z = [GaussRat.of(x) for x in row]
        real.append([x.re for x in z] + [-x.im for x in z])
        real.append([x.im for x in z] + [x.re for x in z])
    return rank_rational(real) // 2
