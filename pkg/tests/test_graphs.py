import itertools
import random
from fractions import Fraction

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from twodist import catalog
from twodist.exactnum import Q5, Q33
from twodist.geometry import D_SQ, R_SQ, PentPoint, dist_sq
from twodist.graphs import (
    AuditError,
    NoEmbedding,
    SpindleError,
    TwoDistGraph,
    automorphism_report,
    build_edges,
    classify_pair,
    clique_check,
    edge_audit,
    format_edge_list,
    greedy_max_clique,
    locate_subgraph,
    non_edges_within,
    spindle,
    vertex_xy,
)


def g5_graph():
    return build_edges(catalog.build_g5(), *catalog.PENT_TARGETS, label="G5")


def to_nx(G: TwoDistGraph, typed=True) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    for t, edges in ((1, G.e1), (2, G.e2)):
        for i, j in edges:
            H.add_edge(i, j, t=t if typed else 0)
    return H


def nx_aut_count(G, typed=True):
    H = to_nx(G, typed)
    em = (lambda a, b: a["t"] == b["t"]) if typed else None
    return sum(1 for _ in GraphMatcher(H, H, edge_match=em).isomorphisms_iter())


def test_g5_edges():
    G = g5_graph()
    assert (G.n, len(G.e1), len(G.e2)) == (5, 5, 5)
    assert clique_check(G, range(5))


def test_build_edges_rejects_bad_targets():
    with pytest.raises(ValueError):
        build_edges(catalog.build_g5(), Q5(1), Q5(1))


def test_build_edges_keeps_given_order():
    pts = list(catalog.build_g5())[::-1]
    G = build_edges(pts, *catalog.PENT_TARGETS)
    assert list(G.vertices) == pts


def test_subgraph_and_relabel_invariance():
    G = catalog.build_g16()
    rng = random.Random(3)
    perm = list(range(G.n))
    rng.shuffle(perm)
    H = G.subgraph(perm, keep_order=True)
    rebuilt = build_edges(list(H.vertices), G.t1, G.t2)
    assert rebuilt.e1 == H.e1 and rebuilt.e2 == H.e2
    assert sorted(H.degree(v) for v in range(H.n)) == sorted(G.degree(v) for v in range(G.n))
    assert automorphism_report(H) == automorphism_report(G)


def test_with_edges_mutation():
    G = catalog.build_g16()
    H = G.with_edges(add=[(1, (3, 12))], remove=[(13, 15)])
    assert H.edge_type(3, 12) == 1 and H.edge_type(13, 15) == 0
    assert G.edge_type(3, 12) == 0


def test_edge_audit_catches_corruption():
    G = catalog.build_g16()
    rep = edge_audit(G)
    assert rep["pairs"] == 120 and rep["e1"] == rep["e2"] == 28
    with pytest.raises(AuditError):
        edge_audit(G.with_edges(add=[(1, (3, 12))]))
    with pytest.raises(AuditError):
        edge_audit(G.with_edges(remove=[(0, 1)]))


def test_greedy_clique_and_non_edges():
    G = catalog.build_g16()
    clique = greedy_max_clique(G)
    assert len(clique) == 5 and clique_check(G, clique)
    assert sorted(non_edges_within(G, [3, 6, 7, 8, 9, 12])) == [(3, 12), (6, 7), (8, 9)]
    assert greedy_max_clique(G, containing=15)[:1] != [] and 15 in greedy_max_clique(G, containing=15)


def test_format_edge_list():
    assert format_edge_list([(0, 1), (2, 5)]) == "{1,2}, {3,6}"
    assert format_edge_list([(0, 1)], one_based=False) == "{0,1}"


@pytest.mark.parametrize("builder", [g5_graph, catalog.build_g16])
def test_automorphisms_agree_with_networkx(builder):
    G = builder()
    rep = automorphism_report(G)
    assert rep.order_color_preserving == nx_aut_count(G, typed=True)
    assert rep.order_uncolored == nx_aut_count(G, typed=False)
    assert rep.order_color_preserving <= rep.order_color_permuting <= rep.order_uncolored


def test_g5_automorphisms():
    rep = automorphism_report(g5_graph())
    # dihedral group of the pentagon; the golden-ratio swap maps sides to diagonals
    assert rep.order_color_preserving == 10
    assert rep.order_color_permuting == 20
    assert rep.order_uncolored == 120


def test_g126_automorphisms():
    rep = automorphism_report(catalog.build_g126())
    assert (rep.order_color_preserving, rep.order_color_permuting) == (10, 20)


def test_locate_subgraph_anchor_failure():
    host = catalog.build_g126()
    # vertex 1 anchored to the origin but 16 anchored next to it: impossible
    origin = host.index_of(PentPoint.origin())
    nb = next(iter(host.adjacency[origin]))
    with pytest.raises(NoEmbedding):
        locate_subgraph(catalog.G16_E1, catalog.G16_ED, host, {1: origin, 16: nb}, induced=True)


def test_spindle_g31():
    S = catalog.build_g31()
    assert S.n == 31
    assert (len(S.graph.e1), len(S.graph.e2)) == (57, 56)
    assert S.cos_angle == Q5(Fraction(19, 20), Fraction(1, 100))
    assert S.graph.edge_type(*S.cross_edge) == 1
    alt = catalog.build_g31_alt()
    assert (len(alt.graph.e1), len(alt.graph.e2)) == (56, 57)
    assert alt.graph.edge_type(*alt.cross_edge) == 2
    assert S.index(0, 0) == 0 and S.index(1, 15) == S.cross_edge[1]


def test_spindle_positions_are_rotations():
    S = catalog.build_g31()
    pivot = vertex_xy(S.graph.vertices[0])
    for b in range(1, 16):
        p = vertex_xy(S.graph.vertices[S.index(0, b)])
        q = vertex_xy(S.graph.vertices[S.index(1, b)])
        r0 = (p[0] - pivot[0]) ** 2 + (p[1] - pivot[1]) ** 2
        r1 = (q[0] - pivot[0]) ** 2 + (q[1] - pivot[1]) ** 2
        assert abs(r0 - r1) < 1e-9
        if r0 > 0:
            dot = (p[0] - pivot[0]) * (q[0] - pivot[0]) + (p[1] - pivot[1]) * (q[1] - pivot[1])
            assert abs(dot / r0 - float(S.cos_angle)) < 1e-9


def test_spindle_edges_match_float_geometry():
    S = catalog.build_g31()
    xy = [vertex_xy(v) for v in S.graph.vertices]
    for i, j in itertools.combinations(range(S.n), 2):
        d = (xy[i][0] - xy[j][0]) ** 2 + (xy[i][1] - xy[j][1]) ** 2
        t = S.graph.edge_type(i, j)
        if t == 1:
            assert abs(d - 1) < 1e-9
        elif t == 2:
            assert abs(d - float(D_SQ)) < 1e-9
        else:
            assert abs(d - 1) > 1e-9 and abs(d - float(D_SQ)) > 1e-9


def test_spindle_errors():
    G = catalog.build_g16()
    with pytest.raises(SpindleError):
        spindle(G, 0, 0, Q5(1))
    with pytest.raises(SpindleError):
        spindle(G, 0, 15, 100 * R_SQ)


def test_classify_pair_exact():
    g = [PentPoint.generator(k) for k in range(5)]
    assert classify_pair(g[0], g[1], Q5(1), D_SQ) == 1
    assert classify_pair(g[0], g[2], Q5(1), D_SQ) == 2
    assert classify_pair(g[0], PentPoint.origin(), Q5(1), D_SQ) == 0
    with pytest.raises(AuditError):
        classify_pair(g[0], g[0], Q5(1), D_SQ)


def test_g31_audit():
    rep = edge_audit(catalog.build_g31().graph)
    assert rep["pairs"] == 31 * 30 // 2
    assert rep["interval_certified"] > 0
