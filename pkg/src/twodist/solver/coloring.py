"""Proper k-colourings of two-distance graphs via the CDCL kernel.

Variable ``v*k + c + 1`` means "vertex v has colour c".  At-most-one-colour
clauses are omitted: a model may give a vertex several colours, and
``decode_model`` keeps the first one, which is still proper because every
edge forbids each shared colour.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from ..graphs import TwoDistGraph, greedy_max_clique
from .cdcl import Solver

BACKENDS = ("fast", "reference")

SAT = "SAT"
UNSAT = "UNSAT"
UNKNOWN = "UNKNOWN"


class Indeterminate(RuntimeError):
    """The solver budget ran out before a verdict."""


@dataclass(frozen=True)
class ColoringQuery:
    graph: TwoDistGraph
    k: int
    diff_pairs: tuple[tuple[int, int], ...] = ()
    precolored: Mapping[int, int] = field(default_factory=dict)
    symmetry_breaking: bool = True

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        n = self.graph.n
        for u, v in self.diff_pairs:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad diff pair {(u, v)}")
        for v, c in self.precolored.items():
            if not (0 <= v < n and 0 <= c < self.k):
                raise ValueError(f"bad precolouring {v} -> {c}")
        for u, v in self.graph.edges:
            cu, cv = self.precolored.get(u), self.precolored.get(v)
            if cu is not None and cu == cv:
                raise ValueError(f"precolouring makes edge {(u, v)} monochromatic")
        object.__setattr__(self, "diff_pairs", tuple(tuple(p) for p in self.diff_pairs))


@dataclass
class ColoringOutcome:
    verdict: str
    coloring: list[int] | None = None
    stats: dict = field(default_factory=dict)

    @property
    def sat(self) -> bool:
        return self.verdict == SAT


def var(v: int, c: int, k: int) -> int:
    return v * k + c + 1


def encode(q: ColoringQuery, pins: Mapping[int, int] | None = None) -> tuple[int, list[list[int]]]:
    """(num_vars, clauses) for the query; ``pins`` adds unit clauses on top
    of the query's own precolouring."""
    k, G = q.k, q.graph
    clauses: list[list[int]] = [[var(v, c, k) for c in range(k)] for v in range(G.n)]
    for u, v in list(G.edges) + list(q.diff_pairs):
        for c in range(k):
            clauses.append([-var(u, c, k), -var(v, c, k)])
    for v, c in sorted(q.precolored.items()):
        clauses.append([var(v, c, k)])
    for v, c in sorted((pins or {}).items()):
        clauses.append([var(v, c, k)])
    return G.n * k, clauses


def symmetry_pins(G: TwoDistGraph, k: int) -> dict[int, int]:
    """Distinct colours for a greedy maximum clique (at most k of its vertices)."""
    clique = greedy_max_clique(G)[:k]
    return {v: c for c, v in enumerate(clique)}


def decode_model(model: Sequence[bool], n: int, k: int) -> list[int]:
    out = []
    for v in range(n):
        for c in range(k):
            if model[var(v, c, k)]:
                out.append(c)
                break
        else:
            raise AssertionError(f"vertex {v} received no colour")
    return out


def check_coloring(
    G: TwoDistGraph,
    coloring: Sequence[int],
    k: int,
    diff_pairs: Sequence[tuple[int, int]] = (),
    precolored: Mapping[int, int] | None = None,
) -> bool:
    """Independent validity check of a colouring (shares no search code)."""
    if len(coloring) != G.n or any(not (0 <= c < k) for c in coloring):
        return False
    for u, v in list(G.e1) + list(G.e2) + list(diff_pairs):
        if coloring[u] == coloring[v]:
            return False
    for v, c in (precolored or {}).items():
        if coloring[v] != c:
            return False
    return True


def default_timeout() -> float | None:
    raw = os.environ.get("TWODIST_TIMEOUT")
    return float(raw) if raw else None


def make_solver(num_vars: int, backend: str | None = None):
    """``fast`` is the compiled kernel, ``reference`` the pure-Python one.
    TWODIST_BACKEND overrides the default."""
    backend = backend or os.environ.get("TWODIST_BACKEND") or "fast"
    if backend == "fast":
        from .fastcdcl import FastSolver

        return FastSolver(num_vars)
    if backend == "reference":
        return Solver(num_vars)
    raise ValueError(f"unknown solver backend {backend!r}; choose from {BACKENDS}")


def color_decide(q: ColoringQuery, timeout: float | None = None, backend: str | None = None) -> ColoringOutcome:
    t0 = time.perf_counter()
    pins = symmetry_pins(q.graph, q.k) if q.symmetry_breaking and not q.precolored else {}
    nv, clauses = encode(q, pins)
    s = make_solver(nv, backend)
    for cl in clauses:
        s.add_clause(cl)
    if timeout is None:
        timeout = default_timeout()
    r = s.solve(time_budget=timeout)
    stats = s.stats.as_dict()
    stats["runtime"] = time.perf_counter() - t0
    if r is None:
        return ColoringOutcome(UNKNOWN, None, stats)
    if r is False:
        return ColoringOutcome(UNSAT, None, stats)
    coloring = decode_model(s.model, q.graph.n, q.k)
    if not check_coloring(q.graph, coloring, q.k, q.diff_pairs, q.precolored):
        raise AssertionError("solver model failed independent colouring check")
    return ColoringOutcome(SAT, coloring, stats)


def forces_mono_pair(
    G: TwoDistGraph, u: int, v: int, k: int, timeout: float | None = None, backend: str | None = None
) -> bool:
    """True iff every proper k-colouring of G gives u and v the same colour."""
    if G.edge_type(u, v):
        raise ValueError(f"{(u, v)} is an edge")
    out = color_decide(ColoringQuery(G, k, ((u, v),)), timeout=timeout, backend=backend)
    if out.verdict == UNKNOWN:
        raise Indeterminate(f"no verdict within {timeout} s")
    return out.verdict == UNSAT


def color_enumerate(G: TwoDistGraph, k: int, canonicalize: bool = True) -> Iterator[list[int]]:
    """All proper k-colourings by backtracking.

    With ``canonicalize`` only colourings whose colours appear in first-use
    order along a clique-first vertex ordering are produced: exactly one per
    colour-permutation class, and the clique receives colours 0, 1, ...
    """
    if G.n > 40:
        raise ValueError("exhaustive enumeration is limited to 40 vertices")
    adj = G.adjacency
    clique = greedy_max_clique(G) if G.n else []
    order = list(clique)
    rest = [v for v in range(G.n) if v not in clique]
    while rest:
        placed = set(order)
        nxt = max(rest, key=lambda x: (sum(u in placed for u in adj[x]), -x))
        order.append(nxt)
        rest.remove(nxt)
    earlier = [[u for u in adj[v] if order.index(u) < i] for i, v in enumerate(order)]
    color = [-1] * G.n

    def rec(i: int, used: int):
        if i == len(order):
            yield list(color)
            return
        v = order[i]
        bad = {color[u] for u in earlier[i]}
        top = min(k, used + 1) if canonicalize else k
        for c in range(top):
            if c in bad:
                continue
            color[v] = c
            yield from rec(i + 1, max(used, c + 1))
        color[v] = -1

    yield from rec(0, 0)


def export_dimacs(q: ColoringQuery, path=None) -> str:
    """DIMACS CNF text for the query (no automatic symmetry breaking)."""
    nv, clauses = encode(q)
    lines = [f"p cnf {nv} {len(clauses)}"]
    lines += [" ".join(map(str, cl)) + " 0" for cl in clauses]
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    nv = 0
    clauses: list[list[int]] = []
    cur: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            nv = int(line.split()[2])
            continue
        for tok in line.split():
            x = int(tok)
            if x == 0:
                clauses.append(cur)
                cur = []
            else:
                cur.append(x)
    return nv, clauses
