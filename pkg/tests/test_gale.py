from fractions import Fraction

import pytest
from conftest import ALL_EXAMPLES, hirzebruch, random_unimodular

from lvmbkit import generators, intlin
from lvmbkit.config import add_ghost_pair, normalize_to_odd_balanced
from lvmbkit.errors import InvalidPeriod, NotGaleDatum, NotGaleEquivalent, ShapeMismatch
from lvmbkit.gale import (apply_period, change_of_duality, change_of_duality_inv, check_gale_datum,
                          complex_points, extend_gale_after_ghost_pair, gale_from_columns,
                          good_gale_dual, period_matrix, relations_lattices, standard_period,
                          virtual_chamber)
from lvmbkit.intlin import GaussRat, I_UNIT


def _k_det(cfg, gd):
    K, _, _ = relations_lattices(cfg)
    coords = [K.coordinates(c) for c in gd.columns]
    return intlin.det(intlin.from_columns(coords, K.rank))


def test_relations_ranks(octant3):
    cfg, _ = octant3
    K, KS, iota = relations_lattices(cfg)
    assert K.rank == KS.rank == 3 and abs(intlin.det(iota)) == 1
    for d in (1, 2, 3):
        cfg, _ = generators.hopf(d)
        K, KS, _ = relations_lattices(cfg)
        assert (K.rank, KS.rank) == (3, 1)
    cfg, _ = generators.torus(2)
    K, KS, _ = relations_lattices(cfg)
    assert (K.rank, KS.rank) == (5, 0)


@pytest.mark.parametrize("name,params", ALL_EXAMPLES)
def test_good_dual_is_basis(name, params):
    cfg, _ = generators.by_name(name, params)
    gd = good_gale_dual(cfg)
    assert gd.good and gd.columns[0] == (1,) * cfg.n
    check_gale_datum(cfg, gd)
    assert abs(_k_det(cfg, gd)) == 1
    V = cfg.vector_matrix()
    for c in gd.columns:
        assert not any(intlin.matvec(V, c))


@pytest.mark.parametrize("name,params", ALL_EXAMPLES)
def test_generator_datum_is_basis(name, params):
    cfg, gd = generators.by_name(name, params)
    check_gale_datum(cfg, gd)


def test_good_dual_block_shape():
    cfg, _ = generators.hopf(2)
    gd = good_gale_dual(cfg)
    M = gd.matrix()
    assert [row[1] for row in M[:2]] == [0, 1]
    # h-block vanishes on ghost rows and spans K_Sigma
    _, KS, _ = relations_lattices(cfg)
    hcols = [gd.columns[j] for j in gd.h_block]
    assert all(c[:cfg.k] == (0,) * cfg.k for c in hcols)
    coords = [KS.coordinates(c) for c in hcols]
    divs = intlin.smith_divisors(intlin.from_columns(coords, KS.rank), len(coords))
    assert divs == [1] * KS.rank


def test_good_dual_octant_matches_printed(octant3):
    cfg, gd = octant3
    assert good_gale_dual(cfg).columns == gd.columns


def test_good_dual_unbalanced_hirzebruch():
    cfg = normalize_to_odd_balanced(hirzebruch(2))
    gd = good_gale_dual(cfg)
    assert abs(_k_det(cfg, gd)) == 1


def test_check_gale_rejects(octant3):
    cfg, gd = octant3
    bad = gale_from_columns([gd.columns[0], gd.columns[1], tuple(2 * x for x in gd.columns[2])])
    with pytest.raises(NotGaleDatum):
        check_gale_datum(cfg, bad)
    with pytest.raises(NotGaleDatum):
        check_gale_datum(cfg, gale_from_columns(gd.columns[:2]))
    swapped = gale_from_columns([gd.columns[1], gd.columns[0], gd.columns[2]])
    with pytest.raises(NotGaleDatum):
        check_gale_datum(cfg, swapped)


def test_virtual_chamber(octant3):
    cfg, _ = octant3
    ch = virtual_chamber(cfg)
    assert len(ch) == 8 and all(len(e) == 3 for e in ch)
    assert (1, 3, 5) in ch  # 0-based; {2,4,6} is the complement of simplex {1,3,5}
    cfg, _ = generators.hopf(2)
    ch = virtual_chamber(cfg)
    assert len(ch) == 3 and all({0, 1} <= set(e) for e in ch)
    cfg, _ = generators.torus(2)
    assert virtual_chamber(cfg) == ((0, 1, 2, 3, 4),)


def test_ghosts_in_every_chamber():
    for name, params in ALL_EXAMPLES:
        cfg, _ = generators.by_name(name, params)
        for e in virtual_chamber(cfg):
            assert set(range(cfg.k)) <= set(e)


def test_hopf_points():
    for d in (1, 2, 3):
        cfg, gd = generators.hopf(d)
        pts = complex_points(gd, period_matrix([[1, I_UNIT]]))
        assert pts == [(GaussRat(0),), (GaussRat(1),)] + [(I_UNIT,)] * (d + 1)


def test_calabi_eckmann_points():
    a, b = 2, 3
    cfg, gd = generators.calabi_eckmann(a, b)
    pts = complex_points(gd, standard_period(1))
    assert pts == [(GaussRat(0),)] + [(GaussRat(1),)] * (a + 1) + [(I_UNIT,)] * (b + 1)


def test_standard_period_splits_coordinates(octant3):
    cfg, gd = octant3
    pts = complex_points(gd, standard_period(1))
    for pt, row in zip(pts, gd.real_points()):
        assert pt[0] == GaussRat(row[0], row[1])


def test_period_validation():
    with pytest.raises(InvalidPeriod):
        period_matrix([[1, 1]])
    with pytest.raises(InvalidPeriod):
        period_matrix([[1, I_UNIT, 0]])
    P = period_matrix([[GaussRat(1, 1), 1]])
    assert P.normalized_left_block() == [[GaussRat(1, 1)]]


def test_points_shape_mismatch(octant3):
    _, gd = octant3
    with pytest.raises(ShapeMismatch):
        complex_points(gd, standard_period(2))


def _check_equation(LR, Pi, LRt, Pi2):
    assert [list(p) for p in _apply(LR, Pi)] == [list(p) for p in _apply(LRt, Pi2)]


def _apply(LR, Pi):
    return apply_period(LR, Pi)


def test_change_of_duality_example():
    LR = [[0, 0], [1, 0], [0, 1], [0, 1]]
    Pi = period_matrix([[1, I_UNIT]])
    T = [[1, 1], [0, 1]]
    LRt = intlin.matmul(LR, T)
    Pi2 = change_of_duality(LR, Pi, LRt)
    assert list(Pi2.rows[0]) == [GaussRat(1, -1), I_UNIT]
    _check_equation(LR, Pi, LRt, Pi2)
    assert change_of_duality(LR, Pi, LR).rows == Pi.rows
    assert change_of_duality_inv(LR, Pi, Pi) == [[Fraction(x) for x in r] for r in LR]


def test_change_of_duality_not_equivalent():
    LR = [[0, 0], [1, 0], [0, 1]]
    with pytest.raises(NotGaleEquivalent):
        change_of_duality(LR, standard_period(1), [[1, 0], [1, 0], [0, 1]])


def test_change_of_duality_roundtrip(rng):
    cfg, gd = generators.octant3()
    LR = gd.real_points()
    for _ in range(20):
        T = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(2)] for _ in range(2)]
        if intlin.det(T) == 0:
            continue
        LRt = intlin.matmul(LR, T)
        Pi = standard_period(1)
        Pi2 = change_of_duality(LR, Pi, LRt)
        back = change_of_duality_inv(LR, Pi, Pi2)
        assert back == LRt


def test_extend_after_ghost_pair(octant3):
    cfg, gd = octant3
    cfg2 = add_ghost_pair(cfg)
    gd2 = extend_gale_after_ghost_pair(gd, cfg)
    M = gd2.matrix()
    assert len(M) == 8 and len(M[0]) == 5
    assert M[0] == [1, 0, 0, 0, 0] and M[1] == [1, 1, 0, 0, 0]
    assert M[2:] == [[1, 0] + row for row in gd.matrix()]
    check_gale_datum(cfg2, gd2)
    cfg3 = add_ghost_pair(cfg2)
    gd3 = extend_gale_after_ghost_pair(gd2, cfg2)
    assert (gd3.n, gd3.m) == (10, 3)
    check_gale_datum(cfg3, gd3)
    t1, g1 = generators.torus(1)
    check_gale_datum(add_ghost_pair(t1), extend_gale_after_ghost_pair(g1, t1))


def test_gale_round_trip_rows(octant3):
    _, gd = octant3
    for row, pt in zip(gd.matrix(), gd.real_points()):
        assert [1] + list(pt) == list(row)


def test_random_relabel_still_basis(rng):
    cfg, gd = generators.octant3()
    for _ in range(10):
        W = random_unimodular(3, rng, fix_first=True)
        M2 = intlin.matmul(gd.matrix(), W)
        cols = intlin.transpose(M2)
        if cols[0] != [1] * 6:
            continue
        check_gale_datum(cfg, gale_from_columns(cols))
