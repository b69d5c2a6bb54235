import itertools
import random

import pytest

from twodist import catalog
from twodist.graphs import TwoDistGraph, build_edges
from twodist.solver.cdcl import Solver, luby, solve_cnf
from twodist.solver.coloring import (
    SAT,
    UNSAT,
    ColoringQuery,
    Indeterminate,
    check_coloring,
    color_decide,
    color_enumerate,
    encode,
    export_dimacs,
    forces_mono_pair,
    parse_dimacs,
)
from twodist.solver.fastcdcl import FastSolver
from twodist.verify import brute_force_colorable, small_test_graphs

SOLVERS = [Solver, FastSolver]


def random_cnf(seed, n, m, width=3):
    rng = random.Random(seed)
    return [[v * rng.choice((1, -1)) for v in rng.sample(range(1, n + 1), width)] for _ in range(m)]


def brute_sat(n, clauses):
    for bits in itertools.product((False, True), repeat=n):
        if all(any(bits[abs(x) - 1] == (x > 0) for x in c) for c in clauses):
            return True
    return False


def pigeonhole(p, h):
    var = lambda i, j: i * h + j + 1
    cls = [[var(i, j) for j in range(h)] for i in range(p)]
    for j in range(h):
        for a, b in itertools.combinations(range(p), 2):
            cls.append([-var(a, j), -var(b, j)])
    return p * h, cls


def test_luby():
    assert [luby(i) for i in range(1, 16)] == [1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8]


@pytest.mark.parametrize("S", SOLVERS)
def test_trivial_formulas(S):
    s = S(0)
    assert s.solve() is True
    s = S(2)
    s.add_clause([1])
    s.add_clause([-1])
    assert s.solve() is False
    assert solve_cnf([[1, 2], []], 2)[0] == "UNSAT"
    assert solve_cnf([], 0)[0] == "SAT"


@pytest.mark.parametrize("S", SOLVERS)
def test_random_3sat_against_brute_force(S):
    for seed in range(150):
        rng = random.Random(seed)
        n = rng.randint(3, 11)
        cls = random_cnf(seed, n, int(n * rng.uniform(2.5, 6)))
        s = S(n)
        for c in cls:
            s.add_clause(c)
        r = s.solve()
        assert r == brute_sat(n, cls), seed
        if r:
            assert all(any(s.value(x) for x in c) for c in cls)


@pytest.mark.parametrize("S", SOLVERS)
def test_pigeonhole(S):
    for p in (4, 6, 7):
        n, cls = pigeonhole(p, p - 1)
        s = S(n)
        for c in cls:
            s.add_clause(c)
        assert s.solve() is False
    n, cls = pigeonhole(5, 5)
    s = S(n)
    for c in cls:
        s.add_clause(c)
    assert s.solve() is True


@pytest.mark.parametrize("S", SOLVERS)
def test_assumptions_and_cores(S):
    for seed in range(60):
        rng = random.Random(seed)
        n = 10
        cls = random_cnf(seed + 500, n, 38)
        s = S(n)
        for c in cls:
            s.add_clause(c)
        for _ in range(4):
            ass = [v * rng.choice((1, -1)) for v in rng.sample(range(1, n + 1), 4)]
            r = s.solve(ass)
            assert r == brute_sat(n, cls + [[a] for a in ass])
            if r is False and s.core:
                assert set(s.core) <= set(ass)
                assert not brute_sat(n, cls + [[a] for a in s.core])


@pytest.mark.parametrize("S", SOLVERS)
def test_budget_gives_none(S):
    n, cls = pigeonhole(9, 8)
    s = S(n)
    for c in cls:
        s.add_clause(c)
    assert s.solve(conflict_budget=50) is None


def test_backends_agree_on_conflict_counts_being_deterministic():
    n, cls = pigeonhole(7, 6)
    counts = []
    for _ in range(2):
        s = FastSolver(n)
        for c in cls:
            s.add_clause(c)
        s.solve()
        counts.append(s.stats.conflicts)
    assert counts[0] == counts[1]


def test_incremental_clauses_after_solve():
    s = FastSolver(3)
    s.add_clause([1, 2])
    assert s.solve() is True
    s.add_clause([-1])
    s.add_clause([-2, 3])
    assert s.solve() is True and s.value(2) and s.value(3)
    s.add_clause([-3])
    assert s.solve() is False


# colouring -------------------------------------------------------------------


def triangle():
    g5 = build_edges(catalog.build_g5(), *catalog.PENT_TARGETS)
    return g5.subgraph([0, 1, 2])


def test_triangle_k2_unsat():
    assert color_decide(ColoringQuery(triangle(), 2)).verdict == UNSAT
    out = color_decide(ColoringQuery(triangle(), 3))
    assert out.verdict == SAT and check_coloring(triangle(), out.coloring, 3)


def test_query_validation():
    G = triangle()
    with pytest.raises(ValueError):
        ColoringQuery(G, 0)
    with pytest.raises(ValueError):
        ColoringQuery(G, 3, ((0, 0),))
    with pytest.raises(ValueError):
        ColoringQuery(G, 3, precolored={0: 1, 1: 1})
    with pytest.raises(ValueError):
        forces_mono_pair(G, 0, 1, 3)


def test_g16_sat_and_forcing():
    G = catalog.build_g16()
    out = color_decide(ColoringQuery(G, 5))
    assert out.sat and check_coloring(G, out.coloring, 5)
    assert forces_mono_pair(G, 0, 15, 5)
    assert not forces_mono_pair(G, 0, 10, 5)


def test_precolouring_respected():
    G = catalog.build_g16()
    out = color_decide(ColoringQuery(G, 5, precolored={15: 4, 0: 4}))
    assert out.sat and out.coloring[15] == 4
    assert color_decide(ColoringQuery(G, 5, precolored={15: 4, 0: 3})).verdict == UNSAT


def test_g31_unsat_both_angles():
    for S in (catalog.build_g31(), catalog.build_g31_alt()):
        assert color_decide(ColoringQuery(S.graph, 5)).verdict == UNSAT
        assert color_decide(ColoringQuery(S.graph, 6)).verdict == SAT


def test_g126_forcing():
    from twodist.geometry import PentPoint

    G = catalog.build_g126()
    c = G.index_of(PentPoint.origin())
    x = [G.index_of(catalog.extreme_vertex(k)) for k in range(5)]
    assert forces_mono_pair(G, c, x[0], 5)
    assert forces_mono_pair(G, x[0], x[1], 5)
    assert forces_mono_pair(G, x[2], x[4], 5)


def test_timeout_is_not_unsat():
    G = catalog.build_g313()
    u, v = catalog.g313_pair(G)
    out = color_decide(ColoringQuery(G, 5, ((u, v),)), timeout=0.5)
    assert out.verdict in (UNSAT, "UNKNOWN")
    if out.verdict == "UNKNOWN":
        with pytest.raises(Indeterminate):
            forces_mono_pair(G, u, v, 5, timeout=0.5)


def test_oracle_equivalence_small_graphs():
    for H, k in small_test_graphs(60, seed=11):
        assert color_decide(ColoringQuery(H, k)).sat == brute_force_colorable(H, k), H.label
        non = [(a, b) for a, b in itertools.combinations(range(H.n), 2) if not H.edge_type(a, b)]
        for a, b in non[:2]:
            want = brute_force_colorable(H, k, [(a, b)])
            assert color_decide(ColoringQuery(H, k, ((a, b),))).sat == want


def test_monotone_forcing_under_supergraphs():
    G126 = catalog.build_g126()
    from twodist.geometry import PentPoint

    emb = catalog.g16_embedding()
    base = [emb[i] for i in range(1, 17)]
    rng = random.Random(5)
    rest = [v for v in range(G126.n) if v not in base]
    for _ in range(5):
        extra = rng.sample(rest, rng.randint(1, 30))
        H = G126.subgraph(base + extra, keep_order=True)
        assert forces_mono_pair(H, 0, 15, 5)


def test_enumeration():
    G = catalog.build_g16()
    cols = list(color_enumerate(G, 5))
    assert len(cols) == 12
    assert all(c[0] == c[15] and check_coloring(G, c, 5) for c in cols)
    assert len({tuple(c) for c in cols}) == 12
    # without the quotient every class appears 5! times
    assert sum(1 for _ in color_enumerate(G, 5, canonicalize=False)) == 12 * 120
    single = G.subgraph([0])
    assert len(list(color_enumerate(single, 5))) == 1
    clique = G.subgraph([0, 1, 2, 4, 5])
    assert len(list(color_enumerate(clique, 5))) == 1


def test_enumeration_stable_under_relabelling():
    G = catalog.build_g16()
    perm = list(range(16))
    random.Random(2).shuffle(perm)
    H = G.subgraph(perm, keep_order=True)
    assert len(list(color_enumerate(H, 5))) == 12


def test_enumeration_size_limit():
    with pytest.raises(ValueError):
        next(color_enumerate(catalog.build_g126(), 5))


# DIMACS ----------------------------------------------------------------------


def test_dimacs_single_vertex():
    G = triangle().subgraph([0])
    assert export_dimacs(ColoringQuery(G, 2)) == "p cnf 2 1\n1 2 0\n"


def test_dimacs_one_edge():
    G = triangle().subgraph([0, 1])
    text = export_dimacs(ColoringQuery(G, 2))
    nv, cls = parse_dimacs(text)
    assert text.splitlines()[0] == "p cnf 4 4"
    assert sorted(map(sorted, cls)) == sorted(map(sorted, [[1, 2], [3, 4], [-1, -3], [-2, -4]]))


def test_dimacs_g16_forcing(tmp_path):
    G = catalog.build_g16()
    q = ColoringQuery(G, 5, ((0, 15),))
    path = tmp_path / "g16.cnf"
    text = export_dimacs(q, path)
    assert path.read_text() == text
    assert text.splitlines()[0] == f"p cnf 80 {16 + 5 * (56 + 1)}"
    nv, cls = parse_dimacs(text)
    assert (nv, cls) == encode(q)
    assert solve_cnf(cls, nv)[0] == "UNSAT"
