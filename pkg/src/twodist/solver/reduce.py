"""Greedy vertex deletion that keeps a monochromatic pair forced."""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from typing import Iterable

from ..geometry import HexPoint, PentPoint, pent_norm_sq_counts
from ..graphs import SpindleVertex, TwoDistGraph, greedy_max_clique
from .coloring import Indeterminate, forces_mono_pair, make_solver, var

log = logging.getLogger(__name__)

POLICIES = ("distance", "degree", "random")


class NotForcing(ValueError):
    pass


@dataclass
class ReductionResult:
    graph: TwoDistGraph
    kept: list[int]
    pair: tuple[int, int]
    policy: str
    checks: int = 0
    undecided: list[int] = field(default_factory=list)
    runtime: float = 0.0


def deletion_order(G: TwoDistGraph, u: int, v: int, policy: str = "distance", seed: int = 0) -> list[int]:
    cand = [w for w in range(G.n) if w not in (u, v)]
    if policy == "distance":
        pu, pv = G.vertices[u], G.vertices[v]
        if isinstance(pu, SpindleVertex):
            raise ValueError("distance policy needs exact vertex coordinates")
        dist = {w: _mid_dist(G.vertices[w], pu, pv) for w in cand}
        return sorted(cand, key=lambda w: (-dist[w], w))
    if policy == "degree":
        return sorted(cand, key=lambda w: (G.degree(w), w))
    if policy == "random":
        rng = random.Random(seed)
        order = list(cand)
        rng.shuffle(order)
        return order
    raise ValueError(f"unknown order policy {policy!r}; choose from {POLICIES}")


def _mid_dist(p, a, b):
    """|2p - a - b|^2, i.e. four times the squared distance to the midpoint."""
    if isinstance(p, PentPoint):
        return pent_norm_sq_counts([2 * x - y - z for x, y, z in zip(p.n, a.n, b.n)])
    if isinstance(p, HexPoint):
        return (p.z * 2 - a.z - b.z).norm_sq()
    raise TypeError(p)


def reduce_preserving(
    G: TwoDistGraph,
    u: int,
    v: int,
    k: int,
    order_policy: str = "distance",
    seed: int = 0,
    use_cores: bool = True,
    timeout: float | None = None,
    backend: str | None = None,
    start: Iterable[int] | None = None,
) -> ReductionResult:
    """Delete vertices one at a time while u and v stay forced to share a colour.

    Deleting a vertex only removes constraints, so a vertex whose deletion
    once made the pair colourable apart stays necessary in every later
    subgraph; one pass therefore ends deletion-minimal.  With ``use_cores``
    an UNSAT answer also drops every vertex outside the solver's
    assumption core.

    ``start`` is an optional vertex subset tried first as one batched
    deletion: if the pair is already forced there, everything outside it
    goes at once and the full graph never has to be refuted.  Otherwise the
    reduction proceeds from the whole graph.
    """
    t0 = time.perf_counter()
    if G.edge_type(u, v):
        raise ValueError(f"{(u, v)} is an edge")
    n = G.n
    sel = [n * k + 1 + w for w in range(n)]
    s = make_solver(n * k + n, backend)
    for w in range(G.n):
        lits = [var(w, c, k) for c in range(k)]
        s.add_clause(lits if w in (u, v) else lits + [-sel[w]])
    for a, b in list(G.edges) + [(u, v)]:
        for c in range(k):
            s.add_clause([-var(a, c, k), -var(b, c, k)])
    for c, w in enumerate(greedy_max_clique(G)[:k]):
        s.add_clause([-sel[w], var(w, c, k)] if w not in (u, v) else [var(w, c, k)])

    active = set(range(n))
    checks = 0
    first = None
    if start is not None:
        trial = set(start) | {u, v}
        if not trial <= active:
            raise ValueError("start set has vertices outside the graph")
        checks += 1
        first = s.solve([sel[w] for w in sorted(trial - {u, v})], time_budget=timeout)
        if first is False:
            active = trial
            log.info("start set of %d vertices already forces the pair", len(trial))
        else:
            log.info("start set does not force the pair (%s); using the whole graph", first)
    if first is not False:
        checks += 1
        first = s.solve([sel[w] for w in sorted(active - {u, v})], time_budget=timeout)
        if first is None:
            raise Indeterminate("initial forcing check ran out of time")
        if first:
            raise NotForcing(f"pair {(u, v)} is not forced at k={k}")

    def shrink_to_core():
        core = {lit - n * k - 1 for lit in s.core if lit > 0}
        active.intersection_update(core | {u, v})

    if use_cores:
        shrink_to_core()
    necessary: set[int] = set()
    undecided: list[int] = []
    order = deletion_order(G, u, v, order_policy, seed)
    changed = True
    while changed:
        changed = False
        for w in order:
            if w not in active or w in necessary or w in undecided:
                continue
            checks += 1
            r = s.solve([sel[x] for x in sorted(active - {u, v, w})], time_budget=timeout)
            if r is False:
                active.discard(w)
                if use_cores:
                    shrink_to_core()
                changed = True
                log.debug("deleted %d, %d left", w, len(active))
            elif r is True:
                necessary.add(w)
            else:
                undecided.append(w)
    kept = sorted(active)
    H = G.subgraph(kept, label=f"reduced({G.label})")
    pair = (kept.index(u), kept.index(v))
    if not forces_mono_pair(H, pair[0], pair[1], k, timeout=timeout, backend=backend):
        raise AssertionError("reduced graph lost the forcing property")
    return ReductionResult(H, kept, pair, order_policy, checks, undecided, time.perf_counter() - t0)


def forced_via_subgraph(
    G: TwoDistGraph,
    u: int,
    v: int,
    k: int,
    keep: Iterable[int],
    timeout: float | None = None,
    backend: str | None = None,
) -> bool:
    """Sufficient test for forcing: decide the pair on the induced subgraph.

    A k-colouring of G restricts to one of any induced subgraph, so a pair
    forced in the subgraph is forced in G.  Returns True when the subgraph
    forces the pair and False when it does not (which says nothing about G).
    """
    keep = sorted(set(keep) | {u, v})
    if keep[0] < 0 or keep[-1] >= G.n:
        raise ValueError("subgraph vertices outside the graph")
    H = G.subgraph(keep)
    return forces_mono_pair(H, keep.index(u), keep.index(v), k, timeout=timeout, backend=backend)
