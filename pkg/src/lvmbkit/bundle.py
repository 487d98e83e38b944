"""Characteristic class of the torus bundle N -> X and derived invariants."""

from dataclasses import dataclass
from itertools import combinations
from math import comb

import flint

from . import intlin
from .errors import FormulaMismatch, NotSameLattice, ShapeMismatch
from .gale import check_gale_datum, standard_period
from .intlin import GaussRat
from .toric_cohomology import (RationalCohomologyRing, _to_fmpq, class_of_functional,
                               presentation, reduce2)


@dataclass(frozen=True)
class CharacteristicClass:
    """γ(π) = Σ_{j>=1} q_j ⊗ f_j, with q_0 = ι^∨(f_0^*) kept for c1."""

    classes: tuple      # q_0, ..., q_2m as canonical w-coordinate tuples
    gale: object
    pres: object
    left_inverse: tuple

    @property
    def pairs(self):
        return tuple(zip(self.classes[1:], self.gale.columns[1:]))

    @property
    def m(self):
        return self.gale.m


def _iota_dual(pres, L, k):
    """Rows g_j (j = 0..2m): ι^∨(f_j^*) in the dual basis of K_Sigma."""
    width = len(L)
    g = [[0] * pres.ksigma.rank for _ in range(width)]
    for t, h in enumerate(pres.ksigma.basis):
        padded = (0,) * k + tuple(h)
        coords = intlin.matvec(L, padded)
        for j in range(width):
            g[j][t] = coords[j]
    return g


def characteristic_class(cfg, gd, pres=None):
    check_gale_datum(cfg, gd)
    pres = pres or presentation(cfg)
    L = intlin.integer_left_inverse(gd.matrix(), len(gd.columns))
    g = _iota_dual(pres, L, cfg.k)
    classes = tuple(class_of_functional(gj, pres) for gj in g)
    return CharacteristicClass(classes, gd, pres, tuple(tuple(r) for r in L))


def characteristic_class_from_rows(cfg, gd, pres):
    """Alternative route: restrict the rows of a left inverse of M to the rays."""
    L = intlin.integer_left_inverse(gd.matrix(), len(gd.columns))
    k = cfg.k
    return tuple(reduce2(tuple(row[k:]), pres) for row in L)


def verify_basis_independence(cfg, gd1, gd2, pres=None):
    """Compare the two classes as maps into H^2 ⊗ K/Z f0 after the change of basis."""
    if gd1.n != gd2.n or len(gd1.columns) != len(gd2.columns) or gd1.n != cfg.n:
        raise NotSameLattice("Gale data have different shapes")
    M1 = gd1.matrix()
    width = len(gd1.columns)
    Phi = intlin.solve_rational(M1, gd2.matrix(), width)
    Phi = intlin.as_integer_matrix(Phi) if Phi is not None else None
    if Phi is None or abs(intlin.det(Phi)) != 1:
        raise NotSameLattice("Gale data span different lattices")
    if [Phi[i][0] for i in range(width)] != [1] + [0] * (width - 1):
        raise NotSameLattice("change of basis does not fix f0")
    pres = pres or presentation(cfg)
    c1 = characteristic_class(cfg, gd1, pres)
    c2 = characteristic_class(cfg, gd2, pres)
    s = pres.s
    for i in range(1, width):
        combo = [sum(Phi[i][j] * c2.classes[j][a] for j in range(1, width)) for a in range(s)]
        if reduce2(combo, pres) != c1.classes[i]:
            return False
    return True


# ---------------------------------------------------------------------------
# first Chern class and H^1

@dataclass(frozen=True)
class ChernOne:
    status: str                 # "Zero" or "NonZero"
    coefficient: int = 0
    generator: tuple = ()
    free_rank: int = 0
    torsion: tuple = ()
    index: object = None
    generator_is_basis: bool = True


def _rank_in_h2(vectors, pres):
    rows = [list(r) for r in pres.linear] + [list(v) for v in vectors]
    return intlin.rank_rational(rows, pres.s) - intlin.rank_rational(
        [list(r) for r in pres.linear], pres.s)


def _quotient_order(gens, dim):
    """|Z^dim / span(gens)| when finite, else None."""
    if not gens:
        return 1 if dim == 0 else None
    divs = intlin.smith_divisors(intlin.from_columns(gens, dim), len(gens))
    if len(divs) < dim:
        return None
    out = 1
    for x in divs:
        out *= x
    return out


def chern1_de_rham(cfg, gd, cc=None):
    cc = cc or characteristic_class(cfg, gd)
    if cfg.k >= 1:
        return ChernOne("Zero")
    pres = cc.pres
    s = pres.s
    rel = [list(r) for r in pres.linear] + [list(q) for q in cc.classes[1:]]
    divs = intlin.smith_divisors(intlin.from_columns(rel, s), len(rel))
    free = s - len(divs)
    torsion = tuple(x for x in divs if x > 1)
    q0 = cc.classes[0]
    c1 = [cfg.n * x for x in q0]
    index = _quotient_order(rel + [c1], s)
    gen_order = _quotient_order(rel + [list(q0)], s)
    return ChernOne("NonZero", cfg.n, q0, free, torsion, index, gen_order == 1)


def h1_rank(cfg, gd, cc=None):
    cc = cc or characteristic_class(cfg, gd)
    rank = 2 * cc.m - _rank_in_h2(cc.classes[1:], cc.pres)
    closed = 0 if cfg.k == 0 else cfg.k - 1
    if rank != closed:
        raise FormulaMismatch("rank of H^1 disagrees with the closed form",
                              computed=rank, expected=closed)
    return rank


# ---------------------------------------------------------------------------
# total space cohomology via the Koszul model

@dataclass(frozen=True)
class TotalSpaceCohomology:
    ranks: tuple
    provenance: tuple
    poincare_symmetric: bool


def _rank_block(entries, nrows, ncols):
    if nrows == 0 or ncols == 0 or not entries:
        return 0
    M = flint.fmpq_mat(nrows, ncols)
    for (i, j), x in entries.items():
        if x:
            M[i, j] = _to_fmpq(x)
    return M.rank()


def koszul_ranks(forms_mult, base_dims, width):
    """Betti numbers of Λ(x_1..x_width) ⊗ A with d x_j = q_j.

    forms_mult[j][p] is the matrix of multiplication by q_j from A^p to
    A^(p+1) (rows index the target). base_dims[p] = dim A^p (A^p sits in
    cohomological degree 2p).
    """
    top = len(base_dims) - 1
    subsets = {q: list(combinations(range(width), q)) for q in range(width + 1)}
    pos = {q: {J: i for i, J in enumerate(subsets[q])} for q in subsets}
    rk = {}
    for q in range(1, width + 1):
        for p in range(top):
            src_b, tgt_b = base_dims[p], base_dims[p + 1]
            entries = {}
            for ci, J in enumerate(subsets[q]):
                for l, j in enumerate(J):
                    sign = -1 if (q - 1 - l) % 2 else 1
                    tj = pos[q - 1][J[:l] + J[l + 1:]]
                    M = forms_mult[j][p]
                    for a in range(tgt_b):
                        row = M[a]
                        for b in range(src_b):
                            x = row[b]
                            if x:
                                key = (tj * tgt_b + a, ci * src_b + b)
                                entries[key] = entries.get(key, 0) + sign * x
            rk[(q, p)] = _rank_block(entries, len(subsets[q - 1]) * tgt_b,
                                     len(subsets[q]) * src_b)
    total = width + 2 * top
    ranks = []
    for t in range(total + 1):
        h = 0
        for p in range(top + 1):
            q = t - 2 * p
            if 0 <= q <= width:
                dim = comb(width, q) * base_dims[p]
                h += dim - rk.get((q, p), 0) - rk.get((q + 1, p - 1), 0)
        ranks.append(h)
    return ranks, rk


def total_space_cohomology(cfg, gd, cc=None, ring=None):
    cc = cc or characteristic_class(cfg, gd)
    ring = ring or RationalCohomologyRing(cfg)
    width = 2 * cc.m
    top = cfg.dim
    dims = ring.dims()
    forms = [ring.w_form(q) for q in cc.classes[1:]]
    mult = [[ring.multiplication_matrix(f, p) for p in range(top)] for f in forms]
    ranks, rk = koszul_ranks(mult, dims, width)

    # degrees 1 and 2 from the E2 page: coker/ker of the transgression
    span = _rank_in_h2(cc.classes[1:], cc.pres)
    h1 = width - span
    b2 = dims[1] if top >= 1 else 0
    h2 = (b2 - span) + (comb(width, 2) - rk.get((2, 0), 0))
    if len(ranks) > 1 and ranks[1] != h1:
        raise FormulaMismatch("H^1 from the model disagrees with the E2 page")
    if len(ranks) > 2 and ranks[2] != h2:
        raise FormulaMismatch("H^2 from the model disagrees with the E2 page")
    prov = tuple("guaranteed" if j <= 2 else "model" for j in range(len(ranks)))
    sym = all(ranks[j] == ranks[-1 - j] for j in range(len(ranks)))
    return TotalSpaceCohomology(tuple(ranks), prov, sym)


# ---------------------------------------------------------------------------
# the (1,0) part and Hodge numbers

@dataclass(frozen=True)
class GammaOneZero:
    classes: tuple   # m tuples of GaussRat over w_1..w_s


def gamma_one_zero(cfg, gd, Pi=None, cc=None):
    cc = cc or characteristic_class(cfg, gd)
    m = cc.m
    Pi = Pi or standard_period(m)
    if Pi.m != m:
        raise ShapeMismatch("period matrix size does not match m")
    qs = cc.classes[1:]
    s = cc.pres.s
    out = []
    for a in range(m):
        out.append(tuple(sum((Pi.rows[a][j] * qs[j][i] for j in range(2 * m)), GaussRat())
                         for i in range(s)))
    return GammaOneZero(tuple(out))


def hodge_h10_h01(cfg, gd, Pi=None, cc=None):
    cc = cc or characteristic_class(cfg, gd)
    g = gamma_one_zero(cfg, gd, Pi, cc)
    lin = [list(r) for r in cc.pres.linear]
    rank = intlin.rank_gaussian(lin + [list(c) for c in g.classes]) - intlin.rank_gaussian(lin)
    return cc.m - rank, cc.m


# ---------------------------------------------------------------------------
# class verdicts

def class_verdicts(cfg, gd, cc=None):
    cc = cc or characteristic_class(cfg, gd)
    return {
        "ddbar_lemma": cfg.dim == 0,
        "bott_chern_c1_vanishes": cfg.dim == 0,
        "aeppli_c1": chern1_de_rham(cfg, gd, cc),
        "chern_vanishing_above": cfg.dim,
    }
