"""Exact point sets for the pentagon and hexagon families.

Pentagon-family points are integer combinations of the five generators
``u_k = R (sin 2πk/5, cos 2πk/5)`` with ``R^2 = (5+√5)/10``; squared
distances between them land in Q(√5).  Hexagon-family points are ``HexC``
values; their squared distances land in Q(√33).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .exactnum import (
    DEFAULT_PRECISION,
    HexC,
    Interval,
    Q5,
    Q33,
    interval_sqrt,
)

PENTAGON = "pentagon"
HEXAGON = "hexagon"

R_SQ = Q5(Fraction(1, 2), Fraction(1, 10))
COS72 = Q5(Fraction(-1, 4), Fraction(1, 4))
COS144 = Q5(Fraction(-1, 4), Fraction(-1, 4))
D_SQ = Q5(Fraction(3, 2), Fraction(1, 2))

OMEGA = HexC(Fraction(1, 2), Fraction(1, 2))
RHO = HexC(Fraction(5, 6), 0, Fraction(1, 6))


class FamilyMismatch(TypeError):
    pass


@dataclass(frozen=True, order=True)
class PentPoint:
    """Point sum(n_k u_k), stored with min(n) subtracted.

    ``level`` is the original multiplicity total and is ignored by equality.
    """

    n: tuple[int, int, int, int, int]
    level: int = field(default=0, compare=False)

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "PentPoint":
        counts = tuple(int(c) for c in counts)
        if len(counts) != 5:
            raise ValueError("pentagon points need 5 multiplicities")
        m = min(counts)
        return cls(tuple(c - m for c in counts), sum(counts))

    @classmethod
    def generator(cls, k: int) -> "PentPoint":
        counts = [0] * 5
        counts[k % 5] = 1
        return cls.from_counts(counts)

    @classmethod
    def origin(cls) -> "PentPoint":
        return cls((0, 0, 0, 0, 0), 0)

    def __add__(self, other: "PentPoint") -> "PentPoint":
        if not isinstance(other, PentPoint):
            raise FamilyMismatch("cannot add pentagon and hexagon points")
        p = PentPoint.from_counts([x + y for x, y in zip(self.n, other.n)])
        return PentPoint(p.n, self.level + other.level)

    def key(self):
        return self.n


@dataclass(frozen=True, order=True)
class HexPoint:
    z: HexC

    def __add__(self, other: "HexPoint") -> "HexPoint":
        if not isinstance(other, HexPoint):
            raise FamilyMismatch("cannot add hexagon and pentagon points")
        return HexPoint(self.z + other.z)

    def key(self):
        z = self.z
        return (z.a, z.b, z.c, z.d)


Point = Union[PentPoint, HexPoint]


def family_of(p: Point) -> str:
    if isinstance(p, PentPoint):
        return PENTAGON
    if isinstance(p, HexPoint):
        return HEXAGON
    raise TypeError(f"not a point: {p!r}")


@dataclass(frozen=True)
class PointSet:
    family: str
    points: tuple

    @classmethod
    def of(cls, family: str, points: Iterable[Point]) -> "PointSet":
        uniq = {}
        for p in points:
            if family_of(p) != family:
                raise FamilyMismatch(f"{p!r} is not a {family} point")
            uniq.setdefault(p, p)
        return cls(family, tuple(sorted(uniq.values(), key=lambda p: p.key())))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return p in set(self.points)

    def index(self, p: Point) -> int:
        return self.points.index(p)

    def origin(self) -> Point:
        return PentPoint.origin() if self.family == PENTAGON else HexPoint(HexC())


@lru_cache(maxsize=None)
def _pent_quadratic(c: tuple[int, ...]) -> Q5:
    s0 = sum(x * x for x in c)
    s1 = sum(c[j] * c[(j + 1) % 5] for j in range(5))
    s2 = sum(c[j] * c[(j + 2) % 5] for j in range(5))
    return R_SQ * (s0 + 2 * s1 * COS72 + 2 * s2 * COS144)


def pent_norm_sq_counts(c: Sequence[int]) -> Q5:
    """|sum c_k u_k|^2 for an integer 5-vector (kernel-shift invariant)."""
    m = min(c)
    return _pent_quadratic(tuple(x - m for x in c))


def pent_dist_sq(p: PentPoint, q: PentPoint) -> Q5:
    return pent_norm_sq_counts([x - y for x, y in zip(p.n, q.n)])


def hex_dist_sq(p: HexPoint, q: HexPoint) -> Q33:
    return (p.z - q.z).norm_sq()


def dist_sq(p: Point, q: Point):
    if isinstance(p, PentPoint) and isinstance(q, PentPoint):
        return pent_dist_sq(p, q)
    if isinstance(p, HexPoint) and isinstance(q, HexPoint):
        return hex_dist_sq(p, q)
    raise FamilyMismatch(f"cannot measure {p!r} against {q!r}")


def norm_sq(p: Point):
    if isinstance(p, PentPoint):
        return pent_norm_sq_counts(p.n)
    return p.z.norm_sq()


def minkowski_sum(A: PointSet, B: PointSet) -> PointSet:
    if A.family != B.family:
        raise FamilyMismatch(f"{A.family} ⊕ {B.family}")
    return PointSet.of(A.family, (a + b for a in A for b in B))


def minkowski_power(A: PointSet, times: int) -> PointSet:
    out = PointSet.of(A.family, [A.origin()])
    for _ in range(times):
        out = minkowski_sum(out, A)
    return out


def rotate_hex(A: PointSet, rotor: HexC) -> PointSet:
    if A.family != HEXAGON:
        raise FamilyMismatch("rotate_hex needs a hexagon point set")
    if rotor.norm_sq() != Q33(1):
        raise ValueError(f"rotor {rotor!r} does not have unit norm")
    return PointSet.of(HEXAGON, (HexPoint(p.z * rotor) for p in A))


def disk_filter(A: PointSet, r_sq) -> PointSet:
    """Keep points with |p|^2 <= r_sq (closed disk)."""
    return PointSet.of(A.family, (p for p in A if norm_sq(p) <= r_sq))


def chord_sq_around_pivot(radius_sq, cos_angle):
    """Squared distance between a point at ``radius_sq`` from a pivot and its
    image under rotation about the pivot by an angle with cosine ``cos_angle``."""
    return 2 * radius_sq * (1 - cos_angle)


# ---------------------------------------------------------------------------
# numeric enclosures (derived on demand, never stored)


@lru_cache(maxsize=64)
def _pent_constants(precision: int):
    r = interval_sqrt(R_SQ.approx(precision))
    s1 = interval_sqrt(Q5(Fraction(5, 8), Fraction(1, 8)).approx(precision))
    s2 = interval_sqrt(Q5(Fraction(5, 8), Fraction(-1, 8)).approx(precision))
    c1 = COS72.approx(precision)
    c2 = COS144.approx(precision)
    return r, s1, s2, c1, c2


def point_enclosure(p: Point, precision: int = DEFAULT_PRECISION) -> tuple[Interval, Interval]:
    """(x, y) enclosures of a point's plane coordinates."""
    if isinstance(p, PentPoint):
        r, s1, s2, c1, c2 = _pent_constants(precision)
        n0, n1, n2, n3, n4 = p.n
        x = r * (s1 * (n1 - n4) + s2 * (n2 - n3))
        y = r * (Interval.from_rational(n0, precision) + c1 * (n1 + n4) + c2 * (n2 + n3))
        return x, y
    return p.z.approx(precision)


def point_xy(p: Point) -> tuple[float, float]:
    x, y = point_enclosure(p, 64)
    return x.midpoint(), y.midpoint()


