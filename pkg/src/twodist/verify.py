"""The verification battery behind ``twodist verify-paper``.

Each check states the claimed value, what was observed and how long it
took.  Slow checks (the 313-vertex forcing proof and everything built on
it) only run when asked for.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import catalog
from .exactnum import HexC, Interval, Q5, Q33, approx, q5_sign, q33_sign
from .geometry import R_SQ, D_SQ, PentPoint, dist_sq, pent_dist_sq
from .graphs import TwoDistGraph, automorphism_report, build_edges, edge_audit
from .solver.coloring import (
    UNKNOWN,
    UNSAT,
    ColoringQuery,
    check_coloring,
    color_decide,
    color_enumerate,
    forces_mono_pair,
)
from .solver.proof import replay_g16_proof

# canonical 5-colourings of G_16 (one per colour-permutation class)
G16_CANONICAL_COLORINGS = 12
G16_SYMMETRY = 48
G199_SYMMETRY = 12
INTERNAL_313_BUDGET = 600.0


@dataclass
class Check:
    criterion: int
    name: str
    claim: str
    expected: object
    observed: object = None
    passed: bool | None = None
    runtime: float = 0.0
    slow: bool = False
    note: str = ""

    @property
    def status(self) -> str:
        return {True: "PASS", False: "FAIL", None: "SKIP"}[self.passed]


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def format(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"[{c.status}] {c.criterion:>2} {c.name}: expected {c.expected}, observed {c.observed} ({c.runtime:.2f}s)")
            if c.note:
                lines.append(f"        {c.note}")
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {"passed": self.passed, "checks": [dict(asdict(c), status=c.status) for c in self.checks]}


def _timed(check: Check, fn: Callable[[], tuple[bool, object]], limit: float | None = None) -> Check:
    t0 = time.perf_counter()
    try:
        ok, observed = fn()
    except Exception as exc:  # a crash is a failed check, reported as such
        ok, observed = False, f"{type(exc).__name__}: {exc}"
    check.runtime = time.perf_counter() - t0
    check.observed = observed
    check.passed = bool(ok) and (limit is None or check.runtime < limit)
    if ok and limit is not None and check.runtime >= limit:
        check.note = f"over the {limit:g}s budget"
    return check


# ---------------------------------------------------------------------------
# criteria


def check_g126_profile() -> Check:
    def run():
        G = catalog.build_g126.__wrapped__()
        audit = edge_audit(G)
        obs = (G.n, len(G.e1), len(G.e2))
        return obs == (126, 350, 350) and audit["pairs"] == 126 * 125 // 2, obs

    return _timed(Check(1, "G126 profile", "126 vertices, 350 + 350 edges", (126, 350, 350)), run, 5.0)


def check_pentagon_identities() -> Check:
    def run():
        g = [PentPoint.generator(k) for k in range(5)]
        sides = {pent_dist_sq(g[k], g[(k + 1) % 5]) for k in range(5)}
        diags = {pent_dist_sq(g[k], g[(k + 2) % 5]) for k in range(5)}
        radius = {dist_sq(p, PentPoint.origin()) for p in g}
        obs = (sides, diags, radius)
        ok = sides == {Q5(1)} and diags == {Q5(Fraction(3, 2), Fraction(1, 2))} and radius == {
            Q5(Fraction(1, 2), Fraction(1, 10))
        }
        ok = ok and R_SQ == Q5(Fraction(1, 2), Fraction(1, 10)) and D_SQ == Q5(Fraction(3, 2), Fraction(1, 2))
        return ok, tuple(sorted(map(str, s)) for s in obs)

    return _timed(Check(2, "pentagon identities", "side^2 = 1, diag^2 = (3+sqrt5)/2, R^2 = (5+sqrt5)/10",
                        "exact"), run)


def check_g16_fidelity() -> Check:
    def run():
        G = catalog.build_g16()
        e1 = sorted((i + 1, j + 1) for i, j in G.e1)
        e2 = sorted((i + 1, j + 1) for i, j in G.e2)
        ok = e1 == sorted(catalog.G16_E1) and e2 == sorted(catalog.G16_ED)
        return ok and len(e1) == len(e2) == 28, (len(e1), len(e2), "lists equal" if ok else "lists differ")

    return _timed(Check(3, "G16 edge lists", "printed E(1), E(d) reproduced", (28, 28, "lists equal")), run)


def check_proof_replay() -> Check:
    def run():
        G = catalog.build_g16()
        base = [s.passed for s in replay_g16_proof(G)]
        add = replay_g16_proof(G.with_edges(add=[(1, (3, 12))]))
        rem = replay_g16_proof(G.with_edges(remove=[(13, 15)]))
        fails_add = [s.step for s in add if not s.passed]
        fails_rem = [s.step for s in rem if not s.passed]
        obs = {"steps": base, "add{4,13}_fails": fails_add, "del{14,16}_fails": fails_rem}
        return all(base) and 3 in fails_add and 5 in fails_rem, obs

    return _timed(Check(4, "G16 proof replay", "five steps pass; mutations break steps 3 and 5",
                        "all pass, mutants fail 3 / 5"), run, 1.0)


def check_small_forcing() -> Check:
    def run():
        G = catalog.build_g16()
        forced = forces_mono_pair(G, 0, 15, 5)
        cols = list(color_enumerate(G, 5))
        mono = all(c[0] == c[15] for c in cols)
        proper = all(check_coloring(G, c, 5) for c in cols)
        obs = {"forced": forced, "canonical_colorings": len(cols), "all_mono": mono}
        return forced and mono and proper and len(cols) == G16_CANONICAL_COLORINGS, obs

    return _timed(Check(5, "G16 forcing", "1 and 16 share a colour in every 5-colouring",
                        {"forced": True, "canonical_colorings": G16_CANONICAL_COLORINGS, "all_mono": True}),
                  run, 10.0)


def check_theorem(timeout: float | None = None) -> Check:
    def run():
        obs = {}
        ok = True
        for name, S, cos, chord in (
            ("G31", catalog.build_g31(), Q5(Fraction(19, 20), Fraction(1, 100)), Q5(1)),
            ("G31'", catalog.build_g31_alt(), Q5(Fraction(19, 20), Fraction(-1, 100)), D_SQ),
        ):
            t0 = time.perf_counter()
            out = color_decide(ColoringQuery(S.graph, 5), timeout=timeout or 60.0)
            dt = time.perf_counter() - t0
            r_sq = dist_sq(S.base.vertices[S.pivot], S.base.vertices[S.target])
            identity = S.cos_angle == cos and 2 * r_sq * (1 - cos) == chord
            obs[name] = (S.n, out.verdict, round(dt, 2))
            ok = ok and out.verdict == UNSAT and identity and S.n == 31 and dt < 60
        return ok, obs

    return _timed(Check(6, "G31 not 5-colourable", "UNSAT for both rotation angles",
                        "31 vertices, UNSAT twice"), run)


def check_medium_forcing(timeout: float | None = None) -> Check:
    def run():
        G = catalog.build_g126()
        c = G.index_of(PentPoint.origin())
        x = [G.index_of(catalog.extreme_vertex(k)) for k in range(5)]
        t = timeout or 300.0
        a = forces_mono_pair(G, c, x[0], 5, timeout=t)
        b = forces_mono_pair(G, x[0], x[1], 5, timeout=t)
        return a and b, {"origin-extreme": a, "extreme-extreme": b}

    return _timed(Check(7, "G126 forcing", "centre/extreme and adjacent extremes forced",
                        {"origin-extreme": True, "extreme-extreme": True}), run, 600.0)


def check_hex_pipeline() -> Check:
    def run():
        g7, g19 = catalog.build_g7(), catalog.build_g19()
        G = catalog.build_g313.__wrapped__()
        up, lo = catalog.PAIR_UPPER, catalog.PAIR_LOWER
        present = up in G.vertices and lo in G.vertices
        sep = dist_sq(up, lo) if present else None
        obs = {
            "G7": len(g7), "G19": len(g19), "rho_norm": str(catalog.RHO.norm_sq()),
            "vertices": G.n, "pair_present": present, "pair_dist_sq": str(sep),
        }
        ok = (len(g7), len(g19), G.n) == (7, 19, 313) and catalog.RHO.norm_sq() == 1
        return ok and present and sep == Q33(Fraction(25, 3)), obs

    return _timed(Check(8, "hex pipeline", "7, 19, 313 vertices; pair at squared distance 25/3",
                        {"vertices": 313, "pair_dist_sq": "25/3"}), run, 30.0)


def check_large_forcing(timeout: float | None = None) -> Check:
    budget = timeout or INTERNAL_313_BUDGET

    def run():
        G = catalog.build_g313()
        u, v = catalog.g313_pair(G)
        out = color_decide(ColoringQuery(G, 5, ((u, v),)), timeout=budget)
        return out.verdict == UNSAT, {"verdict": out.verdict, "conflicts": out.stats.get("conflicts")}

    c = _timed(Check(9, "G313 forcing", "pair forced at k=5 (internal kernel)", {"verdict": UNSAT},
                     slow=True), run)
    if c.observed and isinstance(c.observed, dict) and c.observed.get("verdict") == UNKNOWN:
        c.note = f"internal kernel undecided within {budget:g}s"
    return c


def check_reduction(timeout: float | None = None, state: dict | None = None) -> Check:
    def run():
        H = catalog.build_g199(timeout=timeout)
        if state is not None:
            state["g199"] = H
        u, v = catalog.reduced_pair(H)
        forced = forces_mono_pair(H, u, v, 5, timeout=timeout)
        obs = {"vertices": H.n, "e1": len(H.e1), "e2": len(H.e2), "forced": forced}
        ok = forced and H.n <= 260
        if H.n == 199:
            rep = automorphism_report(H)
            obs["automorphisms"] = (rep.order_color_preserving, rep.order_color_permuting, rep.order_uncolored)
            ok = ok and (len(H.e1), len(H.e2)) == (870, 273) and bool(rep.matches(G199_SYMMETRY))
        return ok, obs

    return _timed(Check(10, "G313 reduction", "forcing subgraph with at most 260 vertices",
                        "<= 260 vertices, forced", slow=True), run)


def check_g397(timeout: float | None = None, state: dict | None = None) -> Check:
    def run():
        H = (state or {}).get("g199") or catalog.build_g199(timeout=timeout)
        S = catalog.build_g397(H)
        i, j = S.cross_edge
        r_sq = dist_sq(H.vertices[S.pivot], H.vertices[S.target])
        chord = 2 * r_sq * (1 - S.cos_angle)
        obs = {"vertices": S.n, "cos": str(S.cos_angle), "cross_chord_sq": str(chord),
               "cross_edge_type": S.graph.edge_type(i, j)}
        return S.n == 397 and chord == 1 and S.cos_angle == Q33(Fraction(47, 50)), obs

    return _timed(Check(11, "G397 spindle", "397 vertices, cross chord^2 = 1",
                        {"vertices": 397, "cross_chord_sq": "1"}, slow=True), run)


def check_symmetry() -> Check:
    def run():
        rep = automorphism_report(catalog.build_g16())
        obs = {
            "color_preserving": rep.order_color_preserving,
            "color_permuting": rep.order_color_permuting,
            "uncolored": rep.order_uncolored,
        }
        hit = rep.matches(G16_SYMMETRY)
        return bool(hit), dict(obs, matched=hit)

    return _timed(Check(12, "G16 symmetry", "a report variant equals 48", 48), run)


# --- property suites ---------------------------------------------------------


def _rand_q(rng) -> Fraction:
    return Fraction(rng.randint(-30, 30), rng.randint(1, 12))


def exactnum_axioms(cases: int = 10_000, seed: int = 1) -> int:
    """Randomised ring/field/order axioms; returns the number of failures."""
    rng = random.Random(seed)
    bad = 0
    for _ in range(cases):
        kind = rng.randrange(3)
        if kind < 2:
            T = (Q5, Q33)[kind]
            x, y, z = (T(_rand_q(rng), _rand_q(rng)) for _ in range(3))
            sign = q5_sign if T is Q5 else q33_sign
            ok = x + y == y + x and x * y == y * x and (x * y) * z == x * (y * z)
            ok = ok and x * (y + z) == x * y + x * z and x - x == 0
            if x != 0:
                ok = ok and x * x.inverse() == 1
            s = sign(x - y)
            iv = approx(x - y, 64)
            ok = ok and (s == 0 or iv.sign() in (None, s)) and ((x < y) == (s < 0))
        else:
            x, y, z = (HexC(*(_rand_q(rng) for _ in range(4))) for _ in range(3))
            ok = x * y == y * x and (x * y) * z == x * (y * z) and x * (y + z) == x * y + x * z
            ok = ok and (x * y).norm_sq() == x.norm_sq() * y.norm_sq() and x.conj().conj() == x
        bad += not ok
    return bad


def brute_force_colorable(G: TwoDistGraph, k: int, diff=()) -> bool:
    """Plain scan of all k^n assignments (numpy, chunked by the first vertex)."""
    import numpy as np

    n = G.n
    if n == 0:
        return True
    pairs = np.array(list(G.edges) + list(diff), dtype=np.int64).reshape(-1, 2)
    rest = n - 1
    idx = np.arange(k**rest, dtype=np.int64)
    digits = np.empty((idx.size, n), dtype=np.int8)
    for j in range(rest):
        digits[:, j + 1] = (idx // k**j) % k
    for c0 in range(k):
        digits[:, 0] = c0
        ok = np.ones(idx.size, dtype=bool)
        for a, b in pairs:
            ok &= digits[:, a] != digits[:, b]
        if ok.any():
            return True
    return False


def small_test_graphs(count: int = 40, seed: int = 7) -> list[tuple[TwoDistGraph, int]]:
    """Induced subgraphs (<= 12 vertices) of catalog graphs with a colour count
    small enough for brute force."""
    rng = random.Random(seed)
    sources = [
        catalog.build_g16(),
        build_edges(catalog.build_g7(), *catalog.HEX_TARGETS, label="G7"),
        build_edges(catalog.build_g19(), *catalog.HEX_TARGETS, label="G19"),
        build_edges(catalog.build_g5(), *catalog.PENT_TARGETS, label="G5"),
        catalog.build_g31().graph,
    ]
    out = []
    for i in range(count):
        src = sources[i % len(sources)]
        k = rng.choice((2, 3, 4))
        nmax = {2: 12, 3: 12, 4: 10}[k]
        size = rng.randint(1, min(nmax, src.n))
        keep = sorted(rng.sample(range(src.n), size))
        out.append((src.subgraph(keep, label=f"{src.label}[{size}]"), k))
    return out


def solver_oracle(count: int = 40) -> int:
    bad = 0
    for H, k in small_test_graphs(count):
        want = brute_force_colorable(H, k)
        got = color_decide(ColoringQuery(H, k)).verdict
        bad += (got == "SAT") != want
        non = [(a, b) for a, b in itertools.combinations(range(H.n), 2) if not H.edge_type(a, b)]
        if non:
            a, b = non[0]
            want = brute_force_colorable(H, k, [(a, b)])
            got = color_decide(ColoringQuery(H, k, ((a, b),))).verdict
            bad += (got == "SAT") != want
    return bad


def audited_catalog(include_slow: bool = False, state: dict | None = None) -> dict:
    graphs = {
        "G5": build_edges(catalog.build_g5(), *catalog.PENT_TARGETS),
        "G7": build_edges(catalog.build_g7(), *catalog.HEX_TARGETS),
        "G19": build_edges(catalog.build_g19(), *catalog.HEX_TARGETS),
        "G126": catalog.build_g126(),
        "G16": catalog.build_g16(),
        "G31": catalog.build_g31().graph,
        "G31'": catalog.build_g31_alt().graph,
        "G313": catalog.build_g313(),
    }
    if include_slow and state and state.get("g199") is not None:
        graphs["G199"] = state["g199"]
        graphs["G397"] = catalog.build_g397(state["g199"]).graph
    return {name: edge_audit(G)["pairs"] for name, G in graphs.items()}


def check_properties(include_slow: bool = False, state: dict | None = None) -> Check:
    def run():
        axioms = exactnum_axioms()
        oracle = solver_oracle()
        audited = audited_catalog(include_slow, state)
        obs = {"axiom_failures": axioms, "oracle_mismatches": oracle, "audited": sorted(audited)}
        return axioms == 0 and oracle == 0, obs

    return _timed(Check(13, "property suites", "axioms, brute-force oracle, edge audits",
                        {"axiom_failures": 0, "oracle_mismatches": 0}), run)


def run_battery(include_slow: bool = False, timeout: float | None = None) -> Report:
    rep = Report()
    state: dict = {}
    rep.checks += [
        check_g126_profile(),
        check_pentagon_identities(),
        check_g16_fidelity(),
        check_proof_replay(),
        check_small_forcing(),
        check_theorem(),
        check_medium_forcing(),
        check_hex_pipeline(),
    ]
    if include_slow:
        rep.checks.append(check_large_forcing(timeout))
        rep.checks.append(check_reduction(timeout, state))
        rep.checks.append(check_g397(timeout, state))
    else:
        for crit, name in ((9, "G313 forcing"), (10, "G313 reduction"), (11, "G397 spindle")):
            rep.checks.append(Check(crit, name, "slow check", "run with --include-slow", slow=True))
    rep.checks.append(check_symmetry())
    rep.checks.append(check_properties(include_slow, state))
    rep.checks.sort(key=lambda c: c.criterion)
    return rep
