from twodist import catalog
from twodist.solver.proof import proof_report, replay_g16_proof


def failing_steps(G):
    return [s.step for s in replay_g16_proof(G) if not s.passed]


def test_all_steps_pass():
    steps = replay_g16_proof(catalog.build_g16())
    assert [s.step for s in steps] == [1, 2, 3, 4, 5]
    assert all(s.passed for s in steps)
    assert proof_report(catalog.build_g16())["passed"]


def test_extra_middle_edge_breaks_step_three():
    G = catalog.build_g16().with_edges(add=[(1, (3, 12))])
    assert 3 in failing_steps(G)


def test_removed_outer_edge_breaks_step_five():
    G = catalog.build_g16().with_edges(remove=[(13, 15)])
    assert failing_steps(G) == [5]


def test_removed_clique_edge_breaks_step_two():
    G = catalog.build_g16()
    a, b = 0, 1  # labels 1 and 2
    assert G.edge_type(a, b)
    assert 2 in failing_steps(G.with_edges(remove=[(a, b)]))


def test_removed_cover_edge_breaks_step_four():
    G = catalog.build_g16()
    # find an outer vertex adjacent to exactly one endpoint of some white pair
    for x in (11, 12, 14, 15):
        for p, q in ((4, 13), (7, 8), (9, 10)):
            hits = [y for y in (p, q) if G.edge_type(x - 1, y - 1)]
            if len(hits) == 1:
                H = G.with_edges(remove=[(x - 1, hits[0] - 1)])
                assert 4 in failing_steps(H)
                return
    raise AssertionError("no single-cover edge found")
