"""Machine check of the five-step argument that vertices 1 and 16 of G_16
share a colour in every 5-colouring.  Labels are the 1-based ones used in
the printed edge lists."""

from __future__ import annotations

import itertools
import time
from dataclasses import asdict, dataclass

from ..graphs import TwoDistGraph

PARTS = ((1,), (2, 3, 5, 6), (4, 7, 8, 9, 10, 13), (11, 12, 14, 15), (16,))
CLIQUE = (1, 2, 3, 5, 6)
WHITE = 1
MIDDLE = (4, 7, 8, 9, 10, 13)
MIDDLE_PAIRS = ((4, 13), (7, 8), (9, 10))
OUTER = (11, 12, 14, 15)
APEX = 16


@dataclass
class ProofStep:
    step: int
    claim: str
    passed: bool
    witness: object
    runtime: float = 0.0


def _adj(G: TwoDistGraph, a: int, b: int) -> bool:
    return bool(G.edge_type(a - 1, b - 1))


def _is_clique(G, S) -> bool:
    return all(_adj(G, a, b) for a, b in itertools.combinations(S, 2))


def replay_g16_proof(G: TwoDistGraph) -> list[ProofStep]:
    steps = []

    def run(step, claim, fn):
        t0 = time.perf_counter()
        ok, witness = fn()
        steps.append(ProofStep(step, claim, ok, witness, time.perf_counter() - t0))

    def step1():
        flat = sorted(itertools.chain.from_iterable(PARTS))
        return flat == list(range(1, G.n + 1)), [list(p) for p in PARTS]

    def step2():
        missing = [(a, b) for a, b in itertools.combinations(CLIQUE, 2) if not _adj(G, a, b)]
        return not missing, {"missing_edges": missing}

    def step3():
        non_edges = [(a, b) for a, b in itertools.combinations(MIDDLE, 2) if not _adj(G, a, b)]
        # colour of clique vertex w fits only middle vertices not adjacent to w;
        # those must be pairwise adjacent, so each colour is used at most once
        per_colour = {}
        for w in CLIQUE:
            if w == WHITE:
                continue
            free = [x for x in MIDDLE if not _adj(G, w, x)]
            per_colour[w] = {"candidates": free, "at_most_once": _is_clique(G, free)}
        ok = sorted(non_edges) == sorted(MIDDLE_PAIRS) and all(
            c["at_most_once"] for c in per_colour.values()
        )
        return ok, {"non_edges": non_edges, "non_white_colours": per_colour}

    def step4():
        uncovered = {
            str(pair): [x for x in OUTER if not (_adj(G, x, pair[0]) or _adj(G, x, pair[1]))]
            for pair in MIDDLE_PAIRS
        }
        return all(not v for v in uncovered.values()), {"uncovered": uncovered}

    def step5():
        clique = _is_clique(G, OUTER)
        missing = [x for x in OUTER if not _adj(G, x, APEX)]
        return clique and not missing, {"outer_is_clique": clique, "not_adjacent_to_16": missing}

    run(1, "vertex partition {1} | {2,3,5,6} | {4,7,8,9,10,13} | {11,12,14,15} | {16}", step1)
    run(2, "{1,2,3,5,6} is a 5-clique", step2)
    run(3, "only non-edges in {4,7,8,9,10,13} are {4,13},{7,8},{9,10}; each non-white colour used at most once there", step3)
    run(4, "every vertex of {11,12,14,15} is adjacent to an endpoint of each white pair", step4)
    run(5, "{11,12,14,15} is a 4-clique adjacent to 16, so 16 is white", step5)
    return steps


def proof_report(G: TwoDistGraph) -> dict:
    steps = replay_g16_proof(G)
    return {"passed": all(s.passed for s in steps), "steps": [asdict(s) for s in steps]}
