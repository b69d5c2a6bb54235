from fractions import Fraction

import pytest

from twodist import catalog
from twodist.exactnum import Q33, Q5
from twodist.geometry import PentPoint, dist_sq
from twodist.graphs import automorphism_report, build_edges, edge_audit


def test_g126_counts_and_degrees():
    G = catalog.build_g126()
    assert (G.n, len(G.e1), len(G.e2)) == (126, 350, 350)
    origin = G.index_of(PentPoint.origin())
    # ±(u_j - u_{j+1}) at unit length, ±(u_j - u_{j+2}) at length d
    assert sorted(G.edge_type(origin, w) for w in G.adjacency[origin]) == [1] * 10 + [2] * 10
    assert sum(G.degree(v) for v in range(G.n)) == 2 * 700


def test_extreme_vertices():
    G = catalog.build_g126()
    for k in range(5):
        p = catalog.extreme_vertex(k)
        assert p in G.vertices
        assert dist_sq(p, PentPoint.origin()) == 25 * Q5(Fraction(1, 2), Fraction(1, 10))
    a, b = catalog.extreme_vertex(0), catalog.extreme_vertex(1)
    assert dist_sq(a, b) == 25


def test_g16_anchoring():
    emb = catalog.g16_embedding()
    G126 = catalog.build_g126()
    assert G126.vertices[emb[1]] == PentPoint.origin()
    assert G126.vertices[emb[16]] == catalog.extreme_vertex(0)
    assert len(set(emb.values())) == 16


def test_g16_is_induced():
    G = catalog.build_g16()
    H = build_edges(G.vertices, *catalog.PENT_TARGETS)
    assert H.e1 == G.e1 and H.e2 == G.e2


def test_g31_structure():
    for S, cos in ((catalog.build_g31(), Q5(Fraction(19, 20), Fraction(1, 100))),
                   (catalog.build_g31_alt(), Q5(Fraction(19, 20), Fraction(-1, 100)))):
        assert S.n == 31 and S.cos_angle == cos
        i, j = S.cross_edge
        assert S.graph.edge_type(i, j)


def test_hex_small_graphs():
    G7 = build_edges(catalog.build_g7(), *catalog.HEX_TARGETS)
    assert (G7.n, len(G7.e1), len(G7.e2)) == (7, 12, 3)
    assert len(catalog.build_g19()) == 19
    assert catalog.SIGMA.norm_sq() == 1 and catalog.RHO.norm_sq() == 1
    assert catalog.SIGMA * catalog.SIGMA == catalog.RHO


def test_g313_and_pair():
    G = catalog.build_g313()
    assert G.n == 313
    u, v = catalog.g313_pair(G)
    assert not G.edge_type(u, v)
    assert dist_sq(G.vertices[u], G.vertices[v]) == Q33(Fraction(25, 3))
    assert G.vertices[u].z.norm_sq() == Q33(Fraction(7, 3))


def test_g313_audit():
    rep = edge_audit(catalog.build_g313())
    assert rep["pairs"] == 313 * 312 // 2
    assert rep["e1"] == len(catalog.build_g313().e1)


def test_g313_has_pair_reflection():
    # complex conjugation preserves the vertex set and swaps the pair
    G = catalog.build_g313()
    u, v = catalog.g313_pair(G)
    conj = [G.index_of(type(p)(p.z.conj())) for p in G.vertices]
    assert sorted(conj) == list(range(G.n))
    assert conj[u] == v
    edges = set(G.e1)
    assert all(tuple(sorted((conj[a], conj[b]))) in edges for a, b in G.e1)


def test_symmetry_orders_small():
    rep = automorphism_report(catalog.build_g16())
    assert rep.matches(48) == ["uncolored"]


def test_build_g397_rejects_unknown_variant():
    with pytest.raises(ValueError):
        catalog.build_g397(catalog.build_g16(), variant="triple")
