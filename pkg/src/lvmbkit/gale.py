"""Gale duals, virtual chambers and period matrices."""

from dataclasses import dataclass
from fractions import Fraction

from . import intlin
from .config import validate
from .errors import (InvalidPeriod, NotGaleDatum, NotGaleEquivalent, NotOddBalanced,
                     NotRegular, ShapeMismatch)
from .intlin import GaussRat, LatticeBasis


@dataclass(frozen=True)
class GaleDatum:
    """Ordered relation basis (f0, ..., f_2m), stored as columns."""

    columns: tuple
    good: bool = False
    ghost_block: tuple = ()
    h_block: tuple = ()
    lattice: str = "K"

    @property
    def n(self):
        return len(self.columns[0])

    @property
    def m(self):
        return (len(self.columns) - 1) // 2

    def matrix(self):
        return intlin.from_columns([list(c) for c in self.columns], self.n)

    def real_points(self):
        """Rows of M with the leading 1 trimmed (the configuration Λ^R)."""
        return [row[1:] for row in self.matrix()]

    def to_json(self):
        return {
            "columns": [list(c) for c in self.columns],
            "good": self.good,
            "ghost_block": [j for j in self.ghost_block],
            "h_block": [j for j in self.h_block],
            "lattice": self.lattice,
        }


def gale_from_columns(columns, **meta):
    return GaleDatum(tuple(tuple(c) for c in columns), **meta)


def _require_odd_balanced(cfg):
    rep = validate(cfg)
    if not rep.regular:
        raise NotRegular("configuration is not regular", **rep.witnesses)
    if not (rep.odd and rep.balanced):
        raise NotOddBalanced("configuration must be odd and balanced")
    if cfg.n - cfg.dim < 3:
        raise NotOddBalanced("codimension n - d must be at least 3")
    return rep


def relations_lattices(cfg):
    """Return (K, K_Sigma zero-padded, iota) for an odd balanced configuration.

    iota is the rank(K) x rank(K_Sigma) integer matrix expressing the
    K_Sigma basis in the K basis.
    """
    _require_odd_balanced(cfg)
    return _relations(cfg)


def _relations(cfg):
    n, k = cfg.n, cfg.k
    K = intlin.kernel_lattice_basis(cfg.vector_matrix(), n)
    ks = intlin.kernel_lattice_basis(cfg.ray_matrix(), cfg.s)
    padded = tuple((0,) * k + tuple(b) for b in ks.basis)
    KS = LatticeBasis(n, padded, saturated=True)
    iota_cols = [K.coordinates(b) for b in padded]
    iota = intlin.from_columns(iota_cols, K.rank)
    return K, KS, iota


def good_gale_dual(cfg):
    """A good Gale dual: f0 = 1s, a ghost block, then a basis of K_Sigma."""
    _require_odd_balanced(cfg)
    n, k, d = cfg.n, cfg.k, cfg.dim
    K, KS, _ = _relations(cfg)
    ones = (1,) * n
    if k == 0:
        cols = _complete_ones(K)
        return GaleDatum(cols, good=True, ghost_block=(), h_block=tuple(range(len(cols))))
    lifts = []
    if d > 0:
        sigma = cfg.simplices[0]
        B = intlin.from_columns([list(cfg.vectors[i]) for i in sigma], d)
        Binv = intlin.as_integer_matrix(intlin.inverse_rational(B))
    for g in range(1, k):
        col = [0] * n
        col[g] = 1
        if d > 0:
            c = intlin.matvec(Binv, cfg.vectors[g])
            for pos, i in enumerate(sigma):
                col[i] -= c[pos]
        lifts.append(tuple(col))
    cols = (ones,) + tuple(lifts) + KS.basis
    return GaleDatum(cols, good=True, ghost_block=tuple(range(1, k)),
                     h_block=tuple(range(k, len(cols))))


def _complete_ones(K):
    ones = (1,) * K.ambient
    c = K.coordinates(ones)
    for i in reversed(range(K.rank)):
        if abs(c[i]) == 1:
            rest = K.basis[:i] + K.basis[i + 1:]
            return (ones,) + rest
    sub = LatticeBasis(K.ambient, (ones,), saturated=True)
    full = intlin.complete_lattice_basis(sub, K)
    return (ones,) + full.basis[:-1]


def check_gale_datum(cfg, gd):
    """Raise NotGaleDatum unless gd is a basis of K with f0 = 1s."""
    n = cfg.n
    if any(len(c) != n for c in gd.columns):
        raise NotGaleDatum("column length differs from the number of vectors")
    if len(gd.columns) != n - cfg.dim:
        raise NotGaleDatum("Gale datum must have n - d columns")
    if tuple(gd.columns[0]) != (1,) * n:
        raise NotGaleDatum("f0 must be the all-ones vector")
    V = cfg.vector_matrix()
    for c in gd.columns:
        if any(intlin.matvec(V, c)):
            raise NotGaleDatum("a column is not a linear relation")
    K = intlin.kernel_lattice_basis(V, n)
    coords = [K.coordinates(c) for c in gd.columns]
    if any(c is None for c in coords) or abs(intlin.det(intlin.from_columns(coords, K.rank))) != 1:
        raise NotGaleDatum("columns are not a basis of the relation lattice")
    return gd


def virtual_chamber(cfg):
    """Complements of the maximal simplices, as sorted 0-based tuples."""
    full = set(range(cfg.n))
    return tuple(sorted(tuple(sorted(full - set(s))) for s in cfg.simplices))


# ---------------------------------------------------------------------------
# period matrices

@dataclass(frozen=True)
class PeriodMatrix:
    rows: tuple  # m rows of 2m GaussRat entries

    @property
    def m(self):
        return len(self.rows)

    def real_block(self):
        """The 2m x 2m rational matrix [Re Π^T | Im Π^T]."""
        m = self.m
        return [[self.rows[a][j].re for a in range(m)] + [self.rows[a][j].im for a in range(m)]
                for j in range(2 * m)]

    def normalized_left_block(self):
        """P in the normal form [P | I_m] = R^{-1} Π, or None if R is singular."""
        m = self.m
        R = [list(r[m:]) for r in self.rows]
        inv = _gauss_inverse(R)
        if inv is None:
            return None
        return [[sum((inv[i][t] * self.rows[t][j] for t in range(m)), GaussRat())
                 for j in range(m)] for i in range(m)]

    def to_json(self):
        return [[x for x in row] for row in self.rows]


def period_matrix(rows):
    m = len(rows)
    if m == 0 or any(len(r) != 2 * m for r in rows):
        raise InvalidPeriod("period matrix must have shape m x 2m with m >= 1")
    P = PeriodMatrix(tuple(tuple(GaussRat.of(x) for x in r) for r in rows))
    if intlin.rank_rational(P.real_block()) != 2 * m:
        raise InvalidPeriod("real and imaginary parts are not independent")
    return P


def standard_period(m):
    """Π_std = [I_m | i I_m]."""
    rows = []
    for a in range(m):
        row = [GaussRat(int(a == j)) for j in range(m)]
        row += [GaussRat(0, int(a == j)) for j in range(m)]
        rows.append(row)
    return period_matrix(rows)


def _gauss_inverse(A):
    n = len(A)
    M = [[GaussRat.of(x) for x in row] + [GaussRat(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return None
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return [row[n:] for row in M]


def complex_points(gd, Pi):
    """Λ_j = Λ^R_j Π^T with exact Gaussian-rational arithmetic."""
    if 2 * Pi.m != len(gd.columns) - 1:
        raise ShapeMismatch("period matrix size does not match the Gale datum")
    return apply_period(gd.real_points(), Pi)


def apply_period(real_points, Pi):
    out = []
    for row in real_points:
        out.append(tuple(sum((Pi.rows[a][j] * row[j] for j in range(len(row))), GaussRat())
                         for a in range(Pi.m)))
    return out


def change_of_duality(LR, Pi, LRt):
    """Period Π' with Λ^R Π^T = Λ̃^R Π'^T, via Λ^R T = Λ̃^R and Π' = Π (T^T)^{-1}."""
    if len(LR) != len(LRt) or 2 * Pi.m != (len(LR[0]) if LR else 0):
        raise ShapeMismatch("incompatible shapes")
    T = intlin.solve_rational(LR, LRt, 2 * Pi.m)
    if T is None or intlin.rank_rational(T) != 2 * Pi.m:
        raise NotGaleEquivalent("no invertible T with Λ^R T = Λ̃^R")
    TtInv = intlin.inverse_rational(intlin.transpose(T))
    rows = [[sum((row[t] * TtInv[t][j] for t in range(len(row))), GaussRat())
             for j in range(2 * Pi.m)] for row in Pi.rows]
    try:
        return period_matrix(rows)
    except InvalidPeriod as exc:  # cannot happen for invertible T
        raise InvalidPeriod("transformed period is degenerate") from exc


def change_of_duality_inv(LR, Pi, Pi2):
    """Λ̃^R = Λ^R [ReΠ^T|ImΠ^T] [ReΠ'^T|ImΠ'^T]^{-1}."""
    if Pi.m != Pi2.m:
        raise ShapeMismatch("period matrices have different sizes")
    A = Pi.real_block()
    A2inv = intlin.inverse_rational(Pi2.real_block())
    return intlin.matmul(intlin.matmul(LR, A), A2inv)


def extend_gale_after_ghost_pair(gd, cfg):
    """The (n+2) x (2m+3) matrix M' for the configuration with two extra zero ghosts."""
    if gd.n != cfg.n:
        raise ShapeMismatch("Gale datum does not match the configuration")
    width = len(gd.columns)
    rows = [[1, 0] + [0] * width, [1, 1] + [0] * width]
    for row in gd.matrix():
        rows.append([1, 0] + list(row))
    return gale_from_columns(intlin.transpose(rows), good=False, lattice=gd.lattice)


def real_points_json(LR):
    return [[Fraction(x) for x in row] for row in LR]
