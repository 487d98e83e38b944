"""Integral presentation of H^2 and H^4 of a smooth complete toric variety.

Generators w_1..w_s are indexed by the rays (non-ghost vectors). The
ring is Z[w]/(I + J) with I the d linear relations and J the
Stanley-Reisner ideal of the triangulation.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb

import flint

from . import intlin
from .config import faces, require_regular_complete, skeleton_counts


@dataclass(frozen=True)
class CohomPresentation:
    cfg: object
    linear: tuple           # d rows over w_1..w_s
    sr2: tuple              # non-edges (a, b), 0-based, a < b
    ksigma: object          # LatticeBasis of K_Sigma inside Z^s
    retraction: tuple       # integer left inverse of the K_Sigma basis matrix
    monomials: tuple        # (a, b) with a <= b, lexicographic
    h2: object              # LatticeReducer for I
    h4: object              # LatticeReducer for R4

    @property
    def s(self):
        return self.cfg.s

    @property
    def h2_rank(self):
        return self.s - self.h2.rank

    @property
    def h4_rank(self):
        return len(self.monomials) - self.h4.rank

    def monomial_index(self, a, b):
        if a > b:
            a, b = b, a
        return self.monomials.index((a, b))


def presentation(cfg):
    """Build the degree <= 4 presentation (raises NotRegular / NotComplete)."""
    require_regular_complete(cfg)
    s, d = cfg.s, cfg.dim
    rays = cfg.rays
    linear = tuple(tuple(rays[i][j] for i in range(s)) for j in range(d))
    fs = faces(cfg)
    sr2 = tuple((a, b) for a, b in combinations(range(s), 2) if frozenset((a, b)) not in fs)
    ks = intlin.kernel_lattice_basis(cfg.ray_matrix(), s)
    retraction = tuple(tuple(r) for r in intlin.integer_left_inverse(ks.matrix(), ks.rank))
    mons = tuple(combinations_with_replacement(range(s), 2))
    index = {mn: i for i, mn in enumerate(mons)}
    gens = []
    for a, b in sr2:
        v = [0] * len(mons)
        v[index[(a, b)]] = 1
        gens.append(v)
    for row in linear:
        for a in range(s):
            v = [0] * len(mons)
            for i, c in enumerate(row):
                if c:
                    v[index[(min(a, i), max(a, i))]] += c
            if any(v):
                gens.append(v)
    return CohomPresentation(
        cfg, linear, sr2, ks, retraction, mons,
        intlin.LatticeReducer(linear, s),
        intlin.LatticeReducer(gens, len(mons)),
    )


def reduce2(c, pres):
    """Canonical representative of a degree-2 class."""
    return pres.h2.reduce(c)


def class_of_functional(g, pres, canonical=True, retraction=None):
    """Torus-invariant representative r^∨(g) of g ∈ K_Sigma^∨.

    g is given in the dual basis of pres.ksigma.
    """
    R = pres.retraction if retraction is None else retraction
    if len(g) != len(R):
        raise ValueError("functional has the wrong length")
    raw = tuple(sum(g[t] * R[t][i] for t in range(len(R))) for i in range(pres.s))
    return reduce2(raw, pres) if canonical else raw


def cup_product(a, b, pres):
    s = pres.s
    v = [0] * len(pres.monomials)
    for i in range(s):
        if not a[i]:
            continue
        for j in range(s):
            if b[j]:
                v[pres.monomial_index(i, j)] += a[i] * b[j]
    return pres.h4.reduce(v)


def is_zero_h4(c, pres):
    return pres.h4.contains(c)


def betti_stanley(cfg, j):
    """Even Betti number b_2j from face counts; odd ones vanish."""
    d = cfg.dim
    if j < 0 or j > d:
        return 0
    f = skeleton_counts(cfg)
    return sum((-1) ** (i - j) * comb(i, j) * f[d - i] for i in range(j, d + 1))


def anticanonical_class(pres):
    return reduce2((1,) * pres.s, pres)


def is_toric_calabi_yau(pres):
    """c1 of the toric base vanishes exactly when d = 0."""
    return not any(anticanonical_class(pres))


# ---------------------------------------------------------------------------
# serialization helpers

def class2_to_json(c):
    return {f"w{i + 1}": int(x) for i, x in enumerate(c) if x}


def _mon_name(a, b):
    return f"w{a + 1}^2" if a == b else f"w{a + 1}*w{b + 1}"


def class4_to_json(c, pres):
    return {_mon_name(a, b): int(x) for (a, b), x in zip(pres.monomials, c) if x}


def _fmt_terms(terms):
    out = ""
    for coef, name in terms:
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        body = name if mag == 1 else f"{mag}{name}"
        out += (("-" if sign == "-" else "") + body) if not out else f" {sign} {body}"
    return out or "0"


def class2_text(c):
    return _fmt_terms([(x, f"w{i + 1}") for i, x in enumerate(c) if x])


def class4_text(c, pres):
    terms = []
    for (a, b), x in zip(pres.monomials, c):
        if x:
            terms.append((x, _mon_name(a, b)))
    return _fmt_terms(terms)


# ---------------------------------------------------------------------------
# rational cohomology in all degrees

def minimal_nonfaces(cfg):
    fs = faces(cfg)
    out = set()
    for f in fs:
        for v in range(cfg.s):
            if v in f:
                continue
            g = f | {v}
            if g in fs:
                continue
            if all((g - {x}) in fs for x in g):
                out.add(g)
    return sorted(tuple(sorted(g)) for g in out)


def _to_fmpq(x):
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


class RationalCohomologyRing:
    """H^*(X; Q) as graded vector spaces with multiplication by H^2.

    The linear relations eliminate the variables of the first maximal
    cone. Degree p+1 is then built from degree p as the quotient of
    V_1 (x) A^p by the commutation relations and the substituted
    Stanley-Reisner generators of degree p+1, which keeps every matrix
    of width r * dim A^p.
    """

    def __init__(self, cfg):
        self.cfg = cfg
        s, d = cfg.s, cfg.dim
        sigma = cfg.ray_simplices()[0] if d else ()
        free = [i for i in range(s) if i not in sigma]
        self.r = len(free)
        forms = [[Fraction(0)] * self.r for _ in range(s)]
        for pos, i in enumerate(free):
            forms[i][pos] = Fraction(1)
        if d:
            B = intlin.from_columns([list(cfg.rays[i]) for i in sigma], d)
            Binv = intlin.inverse_rational(B)
            for pos, i in enumerate(free):
                c = intlin.matvec(Binv, cfg.rays[i])
                for a, j in enumerate(sigma):
                    forms[j][pos] -= c[a]
        self.forms = forms
        self.nonfaces = minimal_nonfaces(cfg)
        gens = [self._product([forms[i] for i in S]) for S in self.nonfaces]
        self._gens = {}
        for S, g in zip(self.nonfaces, gens):
            self._gens.setdefault(len(S), []).append(g)
        self._dims = [1]
        self._mul = []                       # _mul[p][i]: x_i : A^p -> A^(p+1)
        self._nf = {(0,) * self.r: [Fraction(1)]}   # monomial -> coords, current degree
        for p in range(d):
            self._step(p)

    def _product(self, linear_forms):
        poly = {(0,) * self.r: Fraction(1)}
        for lf in linear_forms:
            new = {}
            for mon, c in poly.items():
                for i, a in enumerate(lf):
                    if a:
                        e = list(mon)
                        e[i] += 1
                        e = tuple(e)
                        new[e] = new.get(e, 0) + c * a
            poly = {k: v for k, v in new.items() if v}
        return poly

    def _step(self, p):
        r, dp = self.r, self._dims[p]
        width = r * dp
        nf = self._nf

        def lift(mu, i):
            """x_i (x) nf(mu / x_i) as a vector in V_1 (x) A^p."""
            nu = list(mu)
            nu[i] -= 1
            v = [0] * width
            for a, x in enumerate(nf[tuple(nu)]):
                v[i * dp + a] = x
            return v

        targets = {}
        for nu in nf:
            for i in range(r):
                mu = list(nu)
                mu[i] += 1
                targets.setdefault(tuple(mu), None)
        rows = []
        for mu in targets:
            supp = [i for i in range(r) if mu[i]]
            base = lift(mu, supp[0])
            for i in supp[1:]:
                other = lift(mu, i)
                diff = [a - b for a, b in zip(other, base)]
                if any(diff):
                    rows.append(diff)
        for g in self._gens.get(p + 1, []):
            v = [0] * width
            for mu, c in g.items():
                i = next(j for j in range(r) if mu[j])
                for a, x in enumerate(lift(mu, i)):
                    v[a] += c * x
            if any(v):
                rows.append(v)

        rank, dense = 0, []
        if rows:
            M = flint.fmpq_mat(len(rows), width)
            for a, row in enumerate(rows):
                for b, x in enumerate(row):
                    if x:
                        M[a, b] = _to_fmpq(x)
            R, rank = M.rref()
            flat = R.entries()
            dense = [[Fraction(int(x.p), int(x.q)) for x in flat[a * width:(a + 1) * width]]
                     for a in range(rank)]
        pivots = [next(j for j, x in enumerate(row) if x) for row in dense]
        pivset = set(pivots)
        basis = [j for j in range(width) if j not in pivset]
        bpos = {j: a for a, j in enumerate(basis)}
        proj = {j: {bpos[j]: Fraction(1)} for j in basis}
        for row, j in zip(dense, pivots):
            proj[j] = {bpos[b]: -row[b] for b in basis if row[b]}

        def reduce(v):
            out = [Fraction(0)] * len(basis)
            for j, x in enumerate(v):
                if x:
                    for b, y in proj[j].items():
                        out[b] += x * y
            return out

        mul = []
        for i in range(r):
            M = [[Fraction(0)] * dp for _ in range(len(basis))]
            for a in range(dp):
                for b, y in proj[i * dp + a].items():
                    M[b][a] = y
            mul.append(M)
        self._mul.append(mul)
        self._dims.append(len(basis))
        self._nf = {mu: reduce(lift(mu, next(j for j in range(r) if mu[j]))) for mu in targets}

    def dim(self, p):
        return self._dims[p] if 0 <= p < len(self._dims) else 0

    def dims(self):
        return list(self._dims)

    def w_form(self, c):
        """Linear form in the free variables for a w-coordinate class."""
        out = [Fraction(0)] * self.r
        for i, a in enumerate(c):
            if a:
                for j in range(self.r):
                    out[j] += a * self.forms[i][j]
        return out

    def multiplication_matrix(self, form, p):
        """Matrix (rows: basis of degree p+1, cols: basis of degree p)."""
        src, tgt = self.dim(p), self.dim(p + 1)
        M = [[Fraction(0)] * src for _ in range(tgt)]
        if p + 1 > self.cfg.dim:
            return M
        for i, a in enumerate(form):
            if a:
                Mi = self._mul[p][i]
                for row in range(tgt):
                    for col in range(src):
                        if Mi[row][col]:
                            M[row][col] += a * Mi[row][col]
        return M
