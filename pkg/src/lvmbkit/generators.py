"""Deterministic example data: tori, Hopf and Calabi-Eckmann manifolds, N_l."""

from itertools import combinations, product

from .config import make_configuration
from .gale import gale_from_columns, good_gale_dual


def _unit(d, j, sign=1):
    e = [0] * d
    e[j] = sign
    return e


def _projective_rays(d, offset, total):
    """Rays of the CP^d fan placed on coordinates offset..offset+d-1 of Z^total."""
    rays = [_unit(total, offset + j) for j in range(d)]
    last = [0] * total
    for j in range(d):
        last[offset + j] = -1
    return rays + [last]


def torus(m):
    if m < 1:
        raise ValueError("m must be at least 1")
    n = 2 * m + 1
    cfg = make_configuration(0, [()] * n, n, [()])
    return cfg, good_gale_dual(cfg)


def hopf(d):
    """CP^d fan with two zero ghosts; Λ = (0, 1, i, ..., i) for Π = [1, i]."""
    if d < 1:
        raise ValueError("d must be at least 1")
    vectors = [[0] * d, [0] * d] + _projective_rays(d, 0, d)
    rays = range(2, d + 3)
    cfg = make_configuration(d, vectors, 2, list(combinations(rays, d)))
    n = d + 3
    f1 = [0, 1] + [0] * (d + 1)
    f2 = [0, 0] + [1] * (d + 1)
    gd = gale_from_columns([[1] * n, f1, f2], good=True, ghost_block=(1,), h_block=(2,))
    return cfg, gd


def calabi_eckmann(a, b):
    """CP^a x CP^b fan plus one zero ghost.

    A factor with parameter 0 contributes one extra zero ghost, moved to
    the front; (0, 0) is therefore the three-ghost torus.
    """
    if a < 0 or b < 0:
        raise ValueError("need a, b >= 0")
    d = a + b
    zero = [0] * d
    if a == 0 and b == 0:
        cfg = make_configuration(0, [()] * 3, 3, [()])
        gd = gale_from_columns([[1, 1, 1], [0, 1, 0], [0, 0, 1]], good=True,
                               ghost_block=(1, 2), h_block=())
        return cfg, gd
    if b == 0:
        vectors = [zero, zero] + _projective_rays(a, 0, d)
        simplices = list(combinations(range(2, a + 3), a))
        f1 = [0, 0] + [1] * (a + 1)
        f2 = [0, 1] + [0] * (a + 1)
        cfg = make_configuration(d, vectors, 2, simplices)
        return cfg, gale_from_columns([[1] * (a + 3), f1, f2])
    if a == 0:
        vectors = [zero, zero] + _projective_rays(b, 0, d)
        simplices = list(combinations(range(2, b + 3), b))
        f1 = [0, 1] + [0] * (b + 1)
        f2 = [0, 0] + [1] * (b + 1)
        cfg = make_configuration(d, vectors, 2, simplices)
        return cfg, gale_from_columns([[1] * (b + 3), f1, f2], good=True,
                                      ghost_block=(1,), h_block=(2,))
    vectors = [zero] + _projective_rays(a, 0, d) + _projective_rays(b, a, d)
    ra = range(1, a + 2)
    rb = range(a + 2, a + b + 3)
    simplices = [sa + sb for sa in combinations(ra, a) for sb in combinations(rb, b)]
    cfg = make_configuration(d, vectors, 1, simplices)
    n = a + b + 3
    f1 = [0] + [1] * (a + 1) + [0] * (b + 1)
    f2 = [0] + [0] * (a + 1) + [1] * (b + 1)
    gd = gale_from_columns([[1] * n, f1, f2], good=True, ghost_block=(), h_block=(1, 2))
    return cfg, gd


def cp1_power(l):
    """Base (CP^1)^l with the pairing Gale datum; one zero ghost when l is even."""
    if l < 2:
        raise ValueError("l must be at least 2")
    rays = []
    for j in range(l):
        rays += [_unit(l, j), _unit(l, j, -1)]
    g = 1 if l % 2 == 0 else 0
    vectors = [[0] * l] * g + rays
    simplices = [tuple(g + 2 * j + c for j, c in enumerate(choice))
                 for choice in product((0, 1), repeat=l)]
    cfg = make_configuration(l, vectors, g, simplices)
    n = len(vectors)
    npairs = l if g else l - 1
    cols = [[1] * n]
    for j in range(npairs):
        col = [0] * n
        col[g + 2 * j] = col[g + 2 * j + 1] = 1
        cols.append(col)
    gd = gale_from_columns(cols, good=True, ghost_block=(),
                           h_block=tuple(range(1, len(cols))) if g else tuple(range(len(cols))))
    return cfg, gd


def octant3():
    return cp1_power(3)


def total_dimension(cfg):
    """Complex dimension of N: d + m."""
    return cfg.dim + cfg.m


EXAMPLES = {
    "torus": (torus, 1),
    "hopf": (hopf, 1),
    "calabi-eckmann": (calabi_eckmann, 2),
    "cp1-power": (cp1_power, 1),
    "octant3": (octant3, 0),
}


def by_name(name, params):
    if name not in EXAMPLES:
        raise KeyError(name)
    fn, arity = EXAMPLES[name]
    if len(params) != arity:
        raise ValueError(f"{name} takes {arity} integer parameter(s)")
    return fn(*params)
