"""Balanced and SKT verdicts, and the exact polytopality test."""

from dataclasses import dataclass, field
from fractions import Fraction

from . import intlin
from .bundle import characteristic_class
from .config import _walls, require_regular_complete, validate
from .errors import NotComplete, NotOddBalanced, NotRegular
from .toric_cohomology import class4_text, class4_to_json, cup_product, is_zero_h4

EXISTS = "Exists"
OBSTRUCTED = "Obstructed"
SILENT = "CriterionSilent"


# ---------------------------------------------------------------------------
# exact simplex

def maximize(c, A, b):
    """Maximize c.x subject to A x <= b, x >= 0, with b >= 0.

    Dictionary simplex over Fractions with Bland's rule. Returns
    (status, value, x) where status is "optimal" or "unbounded".
    """
    m, n = len(A), len(c)
    if any(x < 0 for x in b):
        raise ValueError("origin must be feasible")
    T = [[Fraction(x) for x in row] for row in A]
    rhs = [Fraction(x) for x in b]
    obj = [Fraction(x) for x in c]
    z = Fraction(0)
    nonbasic = list(range(n))
    basic = list(range(n, n + m))
    while True:
        cand = [j for j in range(n) if obj[j] > 0]
        if not cand:
            break
        e = min(cand, key=lambda j: nonbasic[j])
        rows = [i for i in range(m) if T[i][e] > 0]
        if not rows:
            return "unbounded", None, None
        lv = min(rows, key=lambda i: (rhs[i] / T[i][e], basic[i]))
        p = T[lv][e]
        prow = [x / p for x in T[lv]]
        prow[e] = 1 / p
        prhs = rhs[lv] / p
        T[lv], rhs[lv] = prow, prhs
        for i in range(m):
            if i == lv:
                continue
            f = T[i][e]
            if f:
                row = T[i]
                for j in range(n):
                    if j != e and prow[j]:
                        row[j] -= f * prow[j]
                row[e] = -f / p
                rhs[i] -= f * prhs
        f = obj[e]
        for j in range(n):
            if j != e and prow[j]:
                obj[j] -= f * prow[j]
        obj[e] = -f / p
        z += f * prhs
        basic[lv], nonbasic[e] = nonbasic[e], basic[lv]
    x = [Fraction(0)] * n
    for i, var in enumerate(basic):
        if var < n:
            x[var] = rhs[i]
    return "optimal", z, x


def _split_free(rows, nfree):
    """Replace the first nfree (free) variables by differences of nonnegatives."""
    return [list(r[:nfree]) + [-x for x in r[:nfree]] + list(r[nfree:]) for r in rows]


def separation_lp(common, left, right, dim):
    """Is there h vanishing on common, positive on left, negative on right?"""
    rows, rhs = [], []
    for v in common:
        rows.append(list(v) + [0])
        rows.append([-x for x in v] + [0])
        rhs += [0, 0]
    for v in left:
        rows.append([-x for x in v] + [1])
        rhs.append(0)
    for v in right:
        rows.append(list(v) + [1])
        rhs.append(0)
    rows.append([0] * dim + [1])
    rhs.append(1)
    A = _split_free(rows, dim)
    c = [0] * (2 * dim) + [1]
    status, value, _ = maximize(c, A, rhs)
    return status == "optimal" and value > 0


# ---------------------------------------------------------------------------
# polytopality

def wall_constraints(cfg):
    """One strict-convexity row per wall over variables (a_1..a_s, t)."""
    k, s, d = cfg.k, cfg.s, cfg.dim
    out = []
    for wall, owners in sorted(_walls(cfg).items()):
        if len(owners) != 2:
            raise NotComplete("wall not shared by exactly two cones")
        sig, sig2 = (cfg.simplices[o] for o in owners)
        u2 = next(i for i in sig2 if i not in wall)
        B = intlin.from_columns([list(cfg.vectors[i]) for i in sig], d)
        coef = intlin.solve_rational(B, [[x] for x in cfg.vectors[u2]], d)
        row = [Fraction(0)] * (s + 1)
        for i, cf in zip(sig, coef):
            row[i - k] += cf[0]
        row[u2 - k] -= 1
        row[s] = Fraction(1)
        out.append(row)
    return out


def support_heights(cfg, constraint_order=None):
    """Heights on the rays of a strictly convex support function, or None."""
    require_regular_complete(cfg)
    s = cfg.s
    if cfg.dim == 0:
        return []
    rows = wall_constraints(cfg)
    if constraint_order is not None:
        rows = [rows[i] for i in constraint_order]
    rows = rows + [[0] * s + [1]]
    rhs = [0] * (len(rows) - 1) + [1]
    status, value, x = maximize([0] * (2 * s) + [1], _split_free(rows, s), rhs)
    if status != "optimal" or value <= 0:
        return None
    return [x[i] - x[s + i] for i in range(s)]


def is_polytopal(cfg, constraint_order=None):
    return support_heights(cfg, constraint_order) is not None


# ---------------------------------------------------------------------------
# verdicts

@dataclass(frozen=True)
class MetricVerdict:
    kind: str
    status: str
    clause: str
    witness: dict = field(default_factory=dict)
    projective: object = None
    note: str = ""

    def to_json(self):
        out = {"kind": self.kind, "status": self.status, "clause": self.clause,
               "witness": self.witness}
        if self.projective is not None:
            out["projective"] = self.projective
        if self.note:
            out["note"] = self.note
        return out


def _require_odd_balanced(cfg):
    rep = validate(cfg)
    if not rep.regular:
        raise NotRegular("configuration is not regular", **rep.witnesses)
    if not rep.complete:
        raise NotComplete("configuration is not complete", **rep.witnesses)
    if not (rep.odd and rep.balanced):
        raise NotOddBalanced("configuration must be odd and balanced")
    if cfg.m < 1:
        raise NotOddBalanced("configuration has m = 0; add a ghost pair")


def _is_odd_cross_fan(cfg):
    d = cfg.dim
    if cfg.k or d % 2 == 0 or d < 3:
        return False
    want = set()
    for j in range(d):
        e = [0] * d
        e[j] = 1
        want.add(tuple(e))
        want.add(tuple(-x for x in e))
    if set(cfg.vectors) != want or len(cfg.simplices) != 2 ** d:
        return False
    return all(all(cfg.vectors[a] != tuple(-x for x in cfg.vectors[b]) for a in s for b in s)
               for s in cfg.simplices)


def balanced_verdict(cfg):
    _require_odd_balanced(cfg)
    if cfg.dim == 0:
        return MetricVerdict("balanced", EXISTS, "complex torus: flat Kähler metric")
    if cfg.k >= 1:
        return MetricVerdict("balanced", OBSTRUCTED, "ghost vector present and not a torus",
                             {"ghosts": cfg.k})
    note = ""
    if _is_odd_cross_fan(cfg):
        note = ("base (CP^1)^l with l odd: an explicit balanced submersion metric "
                "is known for the pairing Gale datum")
    return MetricVerdict("balanced", SILENT, "no ghost vectors; obstruction does not apply",
                         note=note)


def skt_obstruction_class(cfg, gd, cc=None):
    cc = cc or characteristic_class(cfg, gd)
    pres = cc.pres
    total = [0] * len(pres.monomials)
    for q in cc.classes[1:]:
        sq = cup_product(q, q, pres)
        total = [a + b for a, b in zip(total, sq)]
    return pres.h4.reduce(total)


def skt_verdict(cfg, gd, cc=None, polytopal=None):
    _require_odd_balanced(cfg)
    cc = cc or characteristic_class(cfg, gd)
    pres = cc.pres
    w = skt_obstruction_class(cfg, gd, cc)
    witness = {"class": class4_to_json(w, pres), "text": class4_text(w, pres),
               "zero": is_zero_h4(w, pres)}
    if not witness["zero"]:
        return MetricVerdict("SKT", OBSTRUCTED, "sum of squared bundle classes is nonzero in H^4",
                             witness)
    proj = is_polytopal(cfg) if polytopal is None else polytopal
    if proj:
        return MetricVerdict("SKT", EXISTS, "obstruction vanishes and the base is projective",
                             witness, projective=True)
    return MetricVerdict("SKT", SILENT, "obstruction vanishes but the base is not projective",
                         witness, projective=False)
