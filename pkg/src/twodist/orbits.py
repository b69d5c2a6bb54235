"""Symmetry orbits of hexagon-family graphs and orbit-union search.

The hexagon family is closed under the dihedral group of order 12
generated by the rotation OMEGA (60 degrees) and complex conjugation, so a
centred point set splits into orbits of size 1, 6 and 12.  A subgraph with
that full symmetry is a union of orbits; ``orbit_unions`` enumerates the
unions with a prescribed vertex count and edge counts.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .geometry import HEXAGON, OMEGA, HexPoint
from .graphs import TwoDistGraph


def d6_images(p: HexPoint) -> list[HexPoint]:
    out = []
    z = p.z
    for _ in range(6):
        out.append(HexPoint(z))
        out.append(HexPoint(z.conj()))
        z = z * OMEGA
    return out


def d6_orbits(G: TwoDistGraph) -> list[list[int]]:
    """Vertex orbits in order of their smallest member.  Raises if the
    vertex set is not closed under the group."""
    if G.family != HEXAGON:
        raise ValueError("dihedral orbits are defined for the hexagon family")
    seen: set[int] = set()
    orbits = []
    for i, p in enumerate(G.vertices):
        if i in seen:
            continue
        try:
            orb = sorted({G.index_of(q) for q in d6_images(p)})
        except ValueError:
            raise ValueError(f"vertex {i} has a rotated image outside the graph") from None
        seen.update(orb)
        orbits.append(orb)
    return orbits


def orbit_edge_matrices(G: TwoDistGraph, orbits: list[list[int]]) -> tuple[np.ndarray, np.ndarray]:
    """Upper-triangular counts of E1 and E2 edges between (and within) orbits."""
    m = len(orbits)
    oid = np.empty(G.n, np.int64)
    for k, orb in enumerate(orbits):
        oid[orb] = k
    mats = []
    for edges in (G.e1, G.e2):
        M = np.zeros((m, m), np.int64)
        for a, b in edges:
            x, y = sorted((oid[a], oid[b]))
            M[x, y] += 1
        mats.append(M)
    return mats[0], mats[1]


@njit(cache=True)
def _search(k, n, e1, e2, sel, E1, E2, size, required, target, rest, res, cnt):
    m = size.shape[0]
    if n > target[0] or e1 > target[1] or e2 > target[2] or n + rest[k] < target[0]:
        return cnt
    if k == m:
        if n == target[0] and e1 == target[1] and e2 == target[2]:
            if cnt < res.shape[0]:
                res[cnt, :] = sel
            cnt += 1
        return cnt
    a1 = E1[k, k]
    a2 = E2[k, k]
    for j in range(k):
        if sel[j]:
            a1 += E1[j, k]
            a2 += E2[j, k]
    sel[k] = 1
    cnt = _search(k + 1, n + size[k], e1 + a1, e2 + a2, sel, E1, E2, size, required, target, rest, res, cnt)
    sel[k] = 0
    if not required[k]:
        cnt = _search(k + 1, n, e1, e2, sel, E1, E2, size, required, target, rest, res, cnt)
    return cnt


def orbit_unions(
    G: TwoDistGraph,
    n: int,
    e1: int,
    e2: int,
    required: tuple[int, ...] = (),
    limit: int = 10_000,
) -> list[list[int]]:
    """All unions of D6 orbits with exactly ``n`` vertices, ``e1`` unit edges
    and ``e2`` second-distance edges whose vertex set contains ``required``.

    Each union is returned as a sorted vertex list.  Edge counts only grow
    as orbits are added, which keeps the depth-first search small.
    """
    orbits = d6_orbits(G)
    E1, E2 = orbit_edge_matrices(G, orbits)
    size = np.array([len(o) for o in orbits], np.int64)
    req = np.zeros(len(orbits), np.int64)
    for v in required:
        req[next(k for k, o in enumerate(orbits) if v in o)] = 1
    rest = np.zeros(len(orbits) + 1, np.int64)
    for k in range(len(orbits) - 1, -1, -1):
        rest[k] = rest[k + 1] + size[k]
    res = np.zeros((limit, len(orbits)), np.int64)
    target = np.array([n, e1, e2], np.int64)
    cnt = _search(0, 0, 0, 0, np.zeros(len(orbits), np.int64), E1, E2, size, req, target, rest, res, 0)
    if cnt > limit:
        raise ValueError(f"{cnt} unions exceed limit={limit}")
    return [sorted(v for k in np.flatnonzero(row) for v in orbits[k]) for row in res[:cnt]]
