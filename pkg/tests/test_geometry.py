import itertools
import math
from fractions import Fraction

import pytest

from twodist.catalog import PAIR_LOWER, PAIR_UPPER, build_g5, build_g7, build_g19, extreme_vertex
from twodist.exactnum import HexC, Q5, Q33
from twodist.geometry import (
    COS72,
    COS144,
    D_SQ,
    HEXAGON,
    PENTAGON,
    R_SQ,
    FamilyMismatch,
    HexPoint,
    PentPoint,
    PointSet,
    chord_sq_around_pivot,
    disk_filter,
    dist_sq,
    minkowski_power,
    minkowski_sum,
    norm_sq,
    pent_dist_sq,
    point_xy,
    rotate_hex,
)


def test_constants():
    assert R_SQ == Q5(Fraction(1, 2), Fraction(1, 10))
    assert D_SQ == Q5(Fraction(3, 2), Fraction(1, 2))
    assert abs(float(COS72) - math.cos(2 * math.pi / 5)) < 1e-15
    assert abs(float(COS144) - math.cos(4 * math.pi / 5)) < 1e-15


def test_pentagon_sides_and_diagonals():
    g = [PentPoint.generator(k) for k in range(5)]
    for k in range(5):
        assert pent_dist_sq(g[k], g[(k + 1) % 5]) == 1
        assert pent_dist_sq(g[k], g[(k + 2) % 5]) == D_SQ
        assert norm_sq(g[k]) == R_SQ


def test_lattice_kernel():
    # u_0 + ... + u_4 = 0, so (1,1,1,1,1) is the origin
    assert PentPoint.from_counts((1, 1, 1, 1, 1)) == PentPoint.origin()
    assert norm_sq(PentPoint.from_counts((3, 2, 2, 2, 2))) == R_SQ


def test_extreme_vertex_radius():
    for k in range(5):
        assert norm_sq(extreme_vertex(k)) == 25 * R_SQ
    assert 25 * R_SQ == Q5(Fraction(25, 2), Fraction(5, 2))


def test_minkowski_counts():
    g5 = build_g5()
    assert len(minkowski_sum(g5, g5)) == 15
    assert len(minkowski_power(g5, 5)) == 126
    with pytest.raises(FamilyMismatch):
        minkowski_sum(g5, build_g7())


def test_point_xy_matches_trig():
    r = math.sqrt(float(R_SQ))
    for k in range(5):
        x, y = point_xy(PentPoint.generator(k))
        assert abs(x - r * math.sin(2 * math.pi * k / 5)) < 1e-12
        assert abs(y - r * math.cos(2 * math.pi * k / 5)) < 1e-12


def test_float_distances_agree():
    pts = list(minkowski_power(build_g5(), 2))
    for p, q in itertools.combinations(pts, 2):
        (x1, y1), (x2, y2) = point_xy(p), point_xy(q)
        assert abs((x1 - x2) ** 2 + (y1 - y2) ** 2 - float(dist_sq(p, q))) < 1e-9


def test_hex_g7_structure():
    g7 = build_g7()
    assert len(g7) == 7
    d = [dist_sq(p, q) for p, q in itertools.combinations(g7, 2)]
    assert d.count(Q33(1)) == 12
    assert d.count(Q33(4)) == 3
    assert d.count(Q33(3)) == 6


def test_g19_and_rotors():
    assert len(build_g19()) == 19
    with pytest.raises(ValueError):
        rotate_hex(build_g7(), HexC(2))


def test_disk_filter_is_closed():
    pts = PointSet.of(HEXAGON, [HexPoint(HexC(0)), HexPoint(HexC(0, 1)), HexPoint(HexC(2))])
    # |i sqrt3|^2 = 3 sits on the boundary and stays
    assert len(disk_filter(pts, Fraction(3))) == 2


def test_pair_points():
    assert norm_sq(PAIR_UPPER) == Q33(Fraction(7, 3))
    assert dist_sq(PAIR_UPPER, PAIR_LOWER) == Q33(Fraction(25, 3))


def test_chord_identities():
    r_sq = 25 * R_SQ
    assert chord_sq_around_pivot(r_sq, Q5(Fraction(19, 20), Fraction(1, 100))) == 1
    assert chord_sq_around_pivot(r_sq, Q5(Fraction(19, 20), Fraction(-1, 100))) == D_SQ
    assert chord_sq_around_pivot(Q33(Fraction(25, 3)), Q33(Fraction(47, 50))) == 1
    assert chord_sq_around_pivot(Q33(Fraction(25, 3)), Q33(Fraction(19, 25))) == 4


def test_family_mismatch():
    with pytest.raises(FamilyMismatch):
        dist_sq(PentPoint.origin(), HexPoint(HexC()))


def test_pointset_dedup_and_index():
    s = PointSet.of(PENTAGON, [PentPoint.generator(0), PentPoint.from_counts((2, 1, 1, 1, 1))])
    assert len(s) == 1
    assert s.index(PentPoint.generator(0)) == 0
