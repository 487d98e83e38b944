import random
from itertools import combinations, product

import pytest

from lvmbkit import generators, intlin
from lvmbkit.config import make_configuration


def projective_fan(d):
    """Fan of CP^d without ghosts."""
    rays = []
    for j in range(d):
        e = [0] * d
        e[j] = 1
        rays.append(e)
    rays.append([-1] * d)
    return make_configuration(d, rays, 0, list(combinations(range(d + 1), d)))


def hirzebruch(a):
    """Fan of the Hirzebruch surface F_a: rays e1, e2, -e1 + a e2, -e2."""
    rays = [[1, 0], [0, 1], [-1, a], [0, -1]]
    return make_configuration(2, rays, 0, [(0, 1), (1, 2), (2, 3), (3, 0)])


def cube_fan(l):
    """Fan of (CP^1)^l, no ghosts."""
    cfg, _ = generators.cp1_power(l)
    k = cfg.k
    return make_configuration(l, cfg.rays, 0, [tuple(i - k for i in s) for s in cfg.simplices])


def random_unimodular(n, rng, steps=12, fix_first=False):
    """Product of random elementary column operations (det = +-1)."""
    if n == 1:
        return [[1 if fix_first else rng.choice((1, -1))]]
    W = [[int(i == j) for j in range(n)] for i in range(n)]
    lo = 1 if fix_first else 0
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        if fix_first and i == 0:
            continue
        q = rng.randint(-2, 2)
        for r in range(n):
            W[r][i] += q * W[r][j]
        if rng.random() < 0.2 and i >= lo:
            for r in range(n):
                W[r][i] = -W[r][i]
    return W


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def octant3():
    return generators.octant3()


ALL_EXAMPLES = (
    [("torus", (m,)) for m in (1, 2)]
    + [("hopf", (d,)) for d in (1, 2, 3)]
    + [("calabi-eckmann", (a, b)) for a in range(3) for b in range(3)]
    + [("cp1-power", (l,)) for l in (2, 3, 4, 5)]
    + [("octant3", ())]
)


# ---------------------------------------------------------------------------
# independent Koszul oracle over a product of truncated polynomial rings

def koszul_oracle(trunc, qs):
    """Betti numbers of Λ(x_1..x_r) ⊗ Q[a_1..a_t]/(a_i^{p_i+1}), d x_j = q_j.

    trunc lists the p_i; qs lists each q_j as a coefficient vector over a_i.
    Builds the whole complex as one dense matrix and ranks its graded pieces.
    """
    r = len(qs)
    mons = list(product(*[range(p + 1) for p in trunc]))
    basis = [(J, mu) for q in range(r + 1) for J in combinations(range(r), q) for mu in mons]
    index = {b: i for i, b in enumerate(basis)}
    deg = [len(J) + 2 * sum(mu) for J, mu in basis]
    top = max(deg)
    D = [[0] * len(basis) for _ in basis]
    for col, (J, mu) in enumerate(basis):
        for l, j in enumerate(J):
            sign = (-1) ** l
            rest = J[:l] + J[l + 1:]
            for a, c in enumerate(qs[j]):
                if not c:
                    continue
                nu = list(mu)
                nu[a] += 1
                if nu[a] > trunc[a]:
                    continue
                D[index[(rest, tuple(nu))]][col] += sign * c
    assert intlin.matmul(D, D) == [[0] * len(basis) for _ in basis]
    betti = []
    for t in range(top + 1):
        src = [i for i, g in enumerate(deg) if g == t]
        tgt = [i for i, g in enumerate(deg) if g == t + 1]
        prev = [i for i, g in enumerate(deg) if g == t - 1]
        out_rank = intlin.rank_rational([[D[i][j] for j in src] for i in tgt], len(src)) \
            if src and tgt else 0
        in_rank = intlin.rank_rational([[D[i][j] for j in prev] for i in src], len(prev)) \
            if src and prev else 0
        betti.append(len(src) - out_rank - in_rank)
    return tuple(betti)
