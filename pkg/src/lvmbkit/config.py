"""Triangulated vector configurations and the fans they encode.

Indices are 0-based internally. The JSON layer converts to and from the
1-based convention used in external formats.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import intlin
from .errors import MalformedInput, NotComplete, NotRegular


@dataclass(frozen=True)
class VectorConfiguration:
    dim: int
    vectors: tuple
    ghosts: int
    simplices: tuple
    index_shift: int = 0

    @property
    def n(self):
        return len(self.vectors)

    @property
    def k(self):
        return self.ghosts

    @property
    def s(self):
        return self.n - self.ghosts

    @property
    def m(self):
        c = self.n - self.dim
        return (c - 1) // 2 if c % 2 == 1 else None

    @property
    def rays(self):
        return self.vectors[self.ghosts:]

    def ray_simplices(self):
        """Maximal simplices re-indexed over the rays only."""
        k = self.ghosts
        return tuple(tuple(i - k for i in s) for s in self.simplices)

    def vector_matrix(self):
        """d x n matrix whose columns are the vectors."""
        return intlin.from_columns([list(v) for v in self.vectors], self.dim)

    def ray_matrix(self):
        return intlin.from_columns([list(v) for v in self.rays], self.dim)


def make_configuration(dim, vectors, ghosts, simplices, index_shift=0):
    """Build a configuration, checking the structural contract.

    Simplices are 0-based. Raises MalformedInput on anything the schema
    forbids.
    """
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise MalformedInput("dim must be a nonnegative integer")
    vecs = []
    for v in vectors:
        if len(v) != dim:
            raise MalformedInput("vector length differs from dim", vector=list(v))
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            raise MalformedInput("vector entries must be integers")
        vecs.append(tuple(v))
    n = len(vecs)
    if n == 0:
        raise MalformedInput("empty vector list")
    if not isinstance(ghosts, int) or not 0 <= ghosts <= n:
        raise MalformedInput("ghost count out of range")
    simps = set()
    for s in simplices:
        s = tuple(sorted(s))
        if len(s) != dim or len(set(s)) != dim:
            raise MalformedInput("simplex size differs from dim", simplex=list(s))
        for i in s:
            if not isinstance(i, int) or not 0 <= i < n:
                raise MalformedInput("simplex index out of range", simplex=list(s))
            if i < ghosts:
                raise MalformedInput("ghost index inside a simplex", simplex=list(s))
        simps.add(s)
    if dim == 0:
        simps = {()}
    used = set(i for s in simps for i in s)
    for i in range(ghosts, n):
        if i not in used:
            raise MalformedInput("non-ghost vector in no simplex; ghosts must come first",
                                 index=i + 1)
    rays = vecs[ghosts:]
    if len(set(rays)) != len(rays):
        raise MalformedInput("duplicate non-ghost rays")
    return VectorConfiguration(dim, tuple(vecs), ghosts, tuple(sorted(simps)), index_shift)


# ---------------------------------------------------------------------------
# cones

@dataclass(frozen=True)
class _Cone:
    rays: tuple          # indices into cfg.vectors
    dual: tuple          # rows r_i with r_i . v_j = delta_ij (Fractions)


def _cones(cfg):
    out = []
    for s in cfg.simplices:
        B = intlin.from_columns([list(cfg.vectors[i]) for i in s], cfg.dim)
        if intlin.det(B) == 0:
            out.append(None)
            continue
        Binv = intlin.inverse_rational(B)
        if all(x.denominator == 1 for r in Binv for x in r):
            Binv = [[int(x) for x in r] for r in Binv]
        out.append(_Cone(s, tuple(tuple(r) for r in Binv)))
    return out


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _in_cone(cone, x):
    return all(_dot(r, x) >= 0 for r in cone.dual)


def _separated(cfg, c1, c2):
    """Exact test of cone(c1) ∩ cone(c2) = cone(common rays)."""
    common = set(c1.rays) & set(c2.rays)
    V = cfg.vectors
    for a, b in ((c1, c2), (c2, c1)):
        h = [sum(r[j] for i, r in zip(a.rays, a.dual) if i not in common)
             for j in range(cfg.dim)]
        if all(_dot(h, V[i]) < 0 for i in b.rays if i not in common):
            return True
    from .metrics import separation_lp
    return separation_lp(
        [V[i] for i in common],
        [V[i] for i in c1.rays if i not in common],
        [V[i] for i in c2.rays if i not in common],
        cfg.dim,
    )


def _walls(cfg):
    walls = {}
    for idx, s in enumerate(cfg.simplices):
        for i in range(len(s)):
            walls.setdefault(s[:i] + s[i + 1:], []).append(idx)
    return walls


def _covered(cones, x):
    return any(c is not None and _in_cone(c, x) for c in cones)


def _uncovered_direction(cfg, cones, walls):
    d = cfg.dim
    for j in range(d):
        for sgn in (1, -1):
            e = [0] * d
            e[j] = sgn
            if not _covered(cones, e):
                return e
    for wall, owners in sorted(walls.items()):
        if len(owners) != 1:
            continue
        cone = cones[owners[0]]
        opp = next(i for i in cfg.simplices[owners[0]] if i not in wall)
        u = cone.dual[cone.rays.index(opp)]  # vanishes on the wall, positive inside
        p = [sum(cfg.vectors[i][j] for i in wall) for j in range(d)]
        t = Fraction(1)
        for _ in range(64):
            x = [Fraction(a) - t * b for a, b in zip(p, u)]
            if not _covered(cones, x):
                den = 1
                for c in x:
                    den = den * c.denominator // _gcd(den, c.denominator)
                return [int(c * den) for c in x]
            t /= 2
    return None


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class ValidationReport:
    simplicial: bool
    complete: object  # bool, or None when simpliciality fails
    rational: bool
    smooth: bool
    regular: bool
    balanced: bool
    odd: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "simplicial": self.simplicial,
            "complete": self.complete,
            "rational": self.rational,
            "smooth": self.smooth,
            "regular": self.regular,
            "balanced": self.balanced,
            "odd": self.odd,
            "witnesses": dict(self.witnesses),
        }


@lru_cache(maxsize=256)
def validate(cfg):
    """Check the fan axioms, smoothness, balance and parity of cfg."""
    d = cfg.dim
    wit = {}
    balanced = all(sum(v[j] for v in cfg.vectors) == 0 for j in range(d))
    odd = (cfg.n - d) % 2 == 1
    if d == 0:
        return ValidationReport(True, True, True, True, True, balanced, odd, wit)

    cones = _cones(cfg)
    simplicial = True
    bad = [cfg.simplices[i] for i, c in enumerate(cones) if c is None]
    if bad:
        simplicial = False
        wit["dependent_simplex"] = [i + 1 for i in bad[0]]
    else:
        for (i, a), (j, b) in combinations(enumerate(cones), 2):
            if not _separated(cfg, a, b):
                simplicial = False
                wit["overlapping_simplices"] = [[x + 1 for x in a.rays], [x + 1 for x in b.rays]]
                break

    smooth = True
    for s in cfg.simplices:
        B = intlin.from_columns([list(cfg.vectors[i]) for i in s], d)
        if abs(intlin.det(B)) != 1:
            smooth = False
            wit["non_unimodular_simplex"] = [i + 1 for i in s]
            break

    complete = None
    if simplicial:
        walls = _walls(cfg)
        complete = bool(cfg.simplices)
        if complete:
            if any(len(o) != 2 for o in walls.values()):
                complete = False
            elif not _dual_graph_connected(cfg, walls):
                complete = False
            else:
                probe = [3 ** j for j in range(d)]
                complete = _covered(cones, probe) and _covered(cones, [-x for x in probe])
        if not complete:
            direction = _uncovered_direction(cfg, cones, walls)
            if direction is not None:
                wit["uncovered_direction"] = direction

    regular = simplicial and smooth
    return ValidationReport(simplicial, complete, True, smooth, regular, balanced, odd, wit)


def _dual_graph_connected(cfg, walls):
    n = len(cfg.simplices)
    adj = [[] for _ in range(n)]
    for owners in walls.values():
        for a, b in combinations(owners, 2):
            adj[a].append(b)
            adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def require_regular_complete(cfg):
    rep = validate(cfg)
    if not rep.regular:
        raise NotRegular("configuration is not regular", **rep.witnesses)
    if not rep.complete:
        raise NotComplete("configuration is not complete", **rep.witnesses)
    return rep


# ---------------------------------------------------------------------------
# ghosts and normalization

def _prepend(cfg, new_vectors):
    t = len(new_vectors)
    return VectorConfiguration(
        cfg.dim,
        tuple(tuple(v) for v in new_vectors) + cfg.vectors,
        cfg.ghosts + t,
        tuple(tuple(i + t for i in s) for s in cfg.simplices),
        cfg.index_shift + t,
    )


def normalize_to_odd_balanced(cfg):
    """Prepend ghosts until the configuration is odd, balanced, m >= 1."""
    rep = validate(cfg)
    if not rep.regular:
        raise NotRegular("configuration is not regular", **rep.witnesses)
    out = cfg
    total = [sum(v[j] for v in cfg.vectors) for j in range(cfg.dim)]
    if any(total):
        out = _prepend(out, [[-x for x in total]])
    codim = out.n - out.dim
    extra = 0
    if codim % 2 == 0:
        extra = 1
    if codim + extra < 3:
        extra += 2
    if extra:
        out = _prepend(out, [[0] * cfg.dim] * extra)
    return out


def add_ghost_pair(cfg):
    """Prepend two zero ghosts: n, k grow by 2 and m by 1."""
    return _prepend(cfg, [[0] * cfg.dim] * 2)


def faces(cfg):
    """All faces of the maximal simplices as frozensets of ray-local indices."""
    out = {frozenset()}
    for s in cfg.ray_simplices():
        for r in range(1, len(s) + 1):
            for sub in combinations(s, r):
                out.add(frozenset(sub))
    return out


def skeleton_counts(cfg):
    counts = [0] * (cfg.dim + 1)
    for f in faces(cfg):
        counts[len(f)] += 1
    return counts
