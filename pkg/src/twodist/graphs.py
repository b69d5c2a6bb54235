"""Two-distance graphs: construction, audit, structure checks and spindling."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from .exactnum import (
    DEFAULT_PRECISION,
    MAX_PRECISION,
    CannotSeparate,
    Interval,
    certified_sign,
    interval_sqrt,
)
from .geometry import (
    Point,
    PointSet,
    chord_sq_around_pivot,
    dist_sq,
    family_of,
    point_enclosure,
)

Edge = tuple[int, int]


def _pair(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class SpindleVertex:
    """Copy ``copy`` of a base point, rotated about ``pivot`` for copy 1."""

    copy: int
    base_index: int
    point: Point
    pivot: Point = field(repr=False)
    cos_angle: object = field(repr=False)

    def enclosure(self, precision: int = DEFAULT_PRECISION) -> tuple[Interval, Interval]:
        x, y = point_enclosure(self.point, precision)
        if self.copy == 0:
            return x, y
        px, py = point_enclosure(self.pivot, precision)
        c = _as_interval(self.cos_angle, precision)
        s = _sin_from_cos(self.cos_angle, precision)
        ax, ay = x - px, y - py
        return px + c * ax - s * ay, py + s * ax + c * ay


def _as_interval(v, precision: int) -> Interval:
    if hasattr(v, "approx"):
        return v.approx(precision)
    return Interval.from_rational(v, precision)


def _sin_from_cos(cos_angle, precision: int) -> Interval:
    one_minus = 1 - cos_angle * cos_angle
    return interval_sqrt(_as_interval(one_minus, precision))


def vertex_enclosure(v, precision: int = DEFAULT_PRECISION):
    if isinstance(v, SpindleVertex):
        return v.enclosure(precision)
    return point_enclosure(v, precision)


def vertex_xy(v) -> tuple[float, float]:
    x, y = vertex_enclosure(v, 64)
    return x.midpoint(), y.midpoint()


@dataclass(frozen=True)
class TwoDistGraph:
    family: str
    vertices: tuple
    e1: tuple[Edge, ...]
    e2: tuple[Edge, ...]
    t1: object
    t2: object
    label: str = ""

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def adjacency(self) -> list[dict[int, int]]:
        """adjacency[v][u] = 1 or 2 for E1 / E2 edges."""
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        for t, edges in ((1, self.e1), (2, self.e2)):
            for i, j in edges:
                adj[i][j] = t
                adj[j][i] = t
        return adj

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.e1 + self.e2))

    def edge_type(self, i: int, j: int) -> int:
        return self.adjacency[i].get(j, 0)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def _index(self) -> dict:
        return {p: i for i, p in enumerate(self.vertices)}

    def index_of(self, vertex) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise ValueError(f"{vertex!r} is not a vertex") from None

    def subgraph(
        self, keep: Iterable[int], label: str | None = None, keep_order: bool = False
    ) -> "TwoDistGraph":
        """Induced subgraph; vertices renumbered by ascending old index unless
        ``keep_order``."""
        keep = list(keep) if keep_order else sorted(set(keep))
        if len(set(keep)) != len(keep):
            raise ValueError("repeated vertex")
        remap = {old: new for new, old in enumerate(keep)}
        e1 = tuple(sorted(_pair(remap[i], remap[j]) for i, j in self.e1 if i in remap and j in remap))
        e2 = tuple(sorted(_pair(remap[i], remap[j]) for i, j in self.e2 if i in remap and j in remap))
        return TwoDistGraph(
            self.family,
            tuple(self.vertices[i] for i in keep),
            e1,
            e2,
            self.t1,
            self.t2,
            self.label if label is None else label,
        )

    def with_edges(self, add: Sequence[tuple[int, Edge]] = (), remove: Sequence[Edge] = ()) -> "TwoDistGraph":
        """Copy with combinatorial edge edits (no geometric meaning; for tests)."""
        e = {1: set(self.e1), 2: set(self.e2)}
        for pair in remove:
            pair = _pair(*pair)
            e[1].discard(pair)
            e[2].discard(pair)
        for t, pair in add:
            e[t].add(_pair(*pair))
        return TwoDistGraph(
            self.family, self.vertices, tuple(sorted(e[1])), tuple(sorted(e[2])),
            self.t1, self.t2, self.label,
        )


@dataclass(frozen=True)
class SpindledGraph:
    base: TwoDistGraph
    pivot: int
    target: int
    cos_angle: object
    forbidden_sq: object
    graph: TwoDistGraph
    copy_map: tuple[tuple[int, int], ...]
    cross_edge: Edge

    @property
    def n(self) -> int:
        return self.graph.n

    def index(self, copy: int, base_index: int) -> int:
        if base_index == self.pivot:
            return self.pivot
        return self.copy_map.index((copy, base_index))


@dataclass(frozen=True)
class AutomorphismReport:
    """Group orders: edge types kept, edge types possibly swapped, and edge
    types ignored (each group contains the previous one)."""

    order_color_preserving: int
    order_color_permuting: int
    order_uncolored: int

    def matches(self, order: int) -> list[str]:
        return [
            name
            for name in ("color_preserving", "color_permuting", "uncolored")
            if getattr(self, f"order_{name}") == order
        ]


# ---------------------------------------------------------------------------
# construction and audit


def build_edges(points, t1, t2, label: str = "") -> TwoDistGraph:
    """Classify every vertex pair against the two squared-distance targets.

    ``points`` is a PointSet or an ordered sequence of same-family points
    (order is kept, so printed labelings survive).
    """
    if t1 == t2:
        raise ValueError("targets must differ")
    if not (t1 > 0 and t2 > 0):
        raise ValueError("targets must be positive")
    if isinstance(points, PointSet):
        family, pts = points.family, points.points
    else:
        pts = tuple(points)
        family = family_of(pts[0])
        if any(family_of(p) != family for p in pts):
            raise TypeError("mixed point families")
    lookup = {t1: 1, t2: 2}
    e1: list[Edge] = []
    e2: list[Edge] = []
    for i, j in itertools.combinations(range(len(pts)), 2):
        d = dist_sq(pts[i], pts[j])
        if d == 0:
            raise ValueError(f"duplicate vertex at {i} and {j}")
        t = lookup.get(d)
        if t == 1:
            e1.append((i, j))
        elif t == 2:
            e2.append((i, j))
    return TwoDistGraph(family, pts, tuple(e1), tuple(e2), t1, t2, label)


class AuditError(AssertionError):
    pass


def _cross_offset(u: SpindleVertex, v: SpindleVertex, target, precision: int) -> Interval:
    """Enclosure of |u - v|^2 - target for vertices in different copies.

    With a = p - pivot and b = q - pivot (q the copy-1 preimage),
    |a - Rot b|^2 = (1-c)(|a|^2+|b|^2) + c|p-q|^2 + 2 s (a x b); only the last
    term leaves the field.
    """
    if u.copy == 1:
        u, v = v, u
    p, q, pivot, c = u.point, v.point, u.pivot, u.cos_angle
    aa = dist_sq(p, pivot)
    bb = dist_sq(q, pivot)
    exact = (1 - c) * (aa + bb) + c * dist_sq(p, q) - target
    ex = _as_interval(exact, precision)
    if p == q:
        return ex
    s = _sin_from_cos(c, precision)
    px, py = point_enclosure(p, precision)
    qx, qy = point_enclosure(q, precision)
    cx, cy = point_enclosure(pivot, precision)
    ax, ay, bx, by = px - cx, py - cy, qx - cx, qy - cy
    cross = ax * by - ay * bx
    return ex + s * cross * 2


def _exact_pair_dist(u, v):
    """Exact squared distance where it lives in the field, else None."""
    if not isinstance(u, SpindleVertex):
        return dist_sq(u, v)
    if u.copy == v.copy or u.point == u.pivot or v.point == v.pivot:
        return dist_sq(u.point, v.point)
    if u.point == v.point:
        return chord_sq_around_pivot(dist_sq(u.point, u.pivot), u.cos_angle)
    return None


def classify_pair(u, v, t1, t2, precision: int = DEFAULT_PRECISION) -> int:
    """0, 1 or 2: which target (if any) the pair's squared distance equals.

    Exact where possible; otherwise both targets and zero must be
    interval-separated or ``CannotSeparate`` is raised.
    """
    d = _exact_pair_dist(u, v)
    if d is not None:
        if d == t1:
            return 1
        if d == t2:
            return 2
        if d == 0:
            raise AuditError(f"coincident vertices {u!r} {v!r}")
        return 0
    for t in (0, t1, t2):
        certified_sign(lambda p: _cross_offset(u, v, t, p), precision, MAX_PRECISION)
    return 0


def edge_audit(G: TwoDistGraph, precision: int = DEFAULT_PRECISION) -> dict:
    """Re-verify every pair: edges exactly on target, non-edges certified off.

    Exact pairs are decided in the field and the decision for non-edges is
    additionally confirmed by interval separation.
    """
    checked = certified = 0
    for i, j in itertools.combinations(range(G.n), 2):
        u, v = G.vertices[i], G.vertices[j]
        t = G.edge_type(i, j)
        d = _exact_pair_dist(u, v)
        if d is not None:
            want = {1: G.t1, 2: G.t2}.get(t)
            if want is not None:
                if d != want:
                    raise AuditError(f"edge {(i, j)} has squared length {d!r}, not {want!r}")
            else:
                for target in (G.t1, G.t2):
                    try:
                        certified_sign(lambda p: _as_interval(d - target, p), precision)
                    except CannotSeparate:
                        raise AuditError(f"non-edge {(i, j)} lies on a target") from None
                certified += 1
        else:
            got = classify_pair(u, v, G.t1, G.t2, precision)
            if got != t:
                raise AuditError(f"pair {(i, j)} classified {got}, stored {t}")
            certified += 1
        checked += 1
    return {"pairs": checked, "interval_certified": certified, "e1": len(G.e1), "e2": len(G.e2)}


# ---------------------------------------------------------------------------
# structure


def clique_check(G: TwoDistGraph, S: Iterable[int]) -> bool:
    S = list(S)
    return all(G.edge_type(i, j) for i, j in itertools.combinations(S, 2))


def non_edges_within(G: TwoDistGraph, S: Iterable[int]) -> list[Edge]:
    S = sorted(set(S))
    return [(i, j) for i, j in itertools.combinations(S, 2) if not G.edge_type(i, j)]


def greedy_max_clique(G: TwoDistGraph, containing: int | None = None) -> list[int]:
    """Largest clique found by greedy extension from every start vertex."""
    adj = G.adjacency
    starts = [containing] if containing is not None else range(G.n)
    best: list[int] = []
    for s in starts:
        clique = [s]
        cand = set(adj[s])
        while cand:
            v = max(sorted(cand), key=lambda u: len(cand & adj[u].keys()))
            clique.append(v)
            cand &= adj[v].keys()
        if len(clique) > len(best):
            best = sorted(clique)
    return best


def format_edge_list(edges: Iterable[Edge], one_based: bool = True) -> str:
    off = 1 if one_based else 0
    return ", ".join(f"{{{i + off},{j + off}}}" for i, j in sorted(edges))


# automorphisms -------------------------------------------------------------


def _refine(adjs, colors):
    """Jointly refine vertex colourings of graphs that must correspond.

    Returns the refined colourings, or None when their colour-class profiles
    diverge (no isomorphism consistent with the current colouring).
    """
    ncol = len(set(colors[0]))
    while True:
        sigs = []
        for adj, col in zip(adjs, colors):
            sigs.append(
                [
                    (col[v], tuple(sorted(Counter((col[u], t) for u, t in adj[v].items()).items())))
                    for v in range(len(adj))
                ]
            )
        base = Counter(sigs[0])
        if any(Counter(s) != base for s in sigs[1:]):
            return None
        order = {s: i for i, s in enumerate(sorted(base))}
        colors = [[order[s] for s in sg] for sg in sigs]
        if len(order) == ncol:
            return colors
        ncol = len(order)


def _count_isomorphisms(adjA, adjB, colA, colB) -> int:
    refined = _refine([adjA, adjB], [colA, colB])
    if refined is None:
        return 0
    colA, colB = refined
    n = len(adjA)
    cells = Counter(colA)
    if len(cells) == n:
        inv = {c: v for v, c in enumerate(colB)}
        m = [inv[c] for c in colA]
        for v in range(n):
            for u, t in adjA[v].items():
                if adjB[m[v]].get(m[u]) != t:
                    return 0
        return 1
    target = min((size, c) for c, size in cells.items() if size > 1)[1]
    x = colA.index(target)
    fresh = n + 1
    total = 0
    cA = list(colA)
    cA[x] = fresh
    for y in range(n):
        if colB[y] != target:
            continue
        cB = list(colB)
        cB[y] = fresh
        total += _count_isomorphisms(adjA, adjB, cA, cB)
    return total


def automorphism_report(G: TwoDistGraph) -> AutomorphismReport:
    adj = G.adjacency
    swapped = [{u: 3 - t for u, t in a.items()} for a in adj]
    plain = [{u: 1 for u in a} for a in adj]
    col = [0] * G.n
    keep = _count_isomorphisms(adj, adj, col, col)
    swap = _count_isomorphisms(adj, swapped, col, col)
    uncolored = _count_isomorphisms(plain, plain, col, col)
    return AutomorphismReport(keep, keep + swap, uncolored)


# subgraph location ---------------------------------------------------------


class NoEmbedding(LookupError):
    pass


def locate_subgraph(
    pattern_e1: Iterable[tuple[Hashable, Hashable]],
    pattern_e2: Iterable[tuple[Hashable, Hashable]],
    host: TwoDistGraph,
    anchors: Mapping[Hashable, int] | None = None,
    induced: bool = False,
    pattern_vertices: Iterable[Hashable] = (),
) -> dict:
    """Injective map of pattern vertices into host vertices carrying each
    pattern edge onto a host edge of the same type.

    With ``induced`` the pattern's non-edges must map to host non-edges too.
    """
    anchors = dict(anchors or {})
    ptype: dict[Hashable, dict[Hashable, int]] = {}
    for t, edges in ((1, pattern_e1), (2, pattern_e2)):
        for a, b in edges:
            ptype.setdefault(a, {})[b] = t
            ptype.setdefault(b, {})[a] = t
    for v in itertools.chain(pattern_vertices, anchors):
        ptype.setdefault(v, {})
    pverts = sorted(ptype, key=repr)
    if len(pverts) > host.n:
        raise NoEmbedding("pattern larger than host")

    # anchors first, then greedily the vertex with most already-ordered neighbours
    order = [v for v in pverts if v in anchors]
    rest = [v for v in pverts if v not in anchors]
    while rest:
        placed = set(order)
        nxt = max(rest, key=lambda v: (sum(u in placed for u in ptype[v]), len(ptype[v])))
        order.append(nxt)
        rest.remove(nxt)

    hadj = host.adjacency
    mapping: dict[Hashable, int] = {}
    used: set[int] = set()

    def consistent(x, h) -> bool:
        for w, hw in mapping.items():
            t = ptype[x].get(w, 0)
            ht = hadj[h].get(hw, 0)
            if t and ht != t:
                return False
            if induced and not t and ht:
                return False
        return True

    def candidates(x):
        if x in anchors:
            return [anchors[x]]
        for w, t in ptype[x].items():
            if w in mapping:
                return sorted(u for u, ut in hadj[mapping[w]].items() if ut == t)
        return range(host.n)

    def search(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for h in candidates(x):
            if h in used or not consistent(x, h):
                continue
            mapping[x] = h
            used.add(h)
            if search(k + 1):
                return True
            del mapping[x]
            used.discard(h)
        return False

    if not search(0):
        raise NoEmbedding("no embedding of the pattern respects the anchors")
    return dict(mapping)


# spindle -------------------------------------------------------------------


class SpindleError(ValueError):
    pass


def spindle(
    G: TwoDistGraph,
    pivot: int,
    target: int,
    forbidden_sq,
    precision: int = DEFAULT_PRECISION,
    label: str | None = None,
) -> SpindledGraph:
    """Join ``G`` with a copy rotated about ``pivot`` so the two images of
    ``target`` end up at squared distance ``forbidden_sq``."""
    if pivot == target:
        raise SpindleError("pivot and target must differ")
    verts = G.vertices
    if any(isinstance(v, SpindleVertex) for v in verts):
        raise SpindleError("spindle of a spindled graph is not supported")
    P = verts[pivot]
    radius_sq = dist_sq(verts[target], P)
    if not (forbidden_sq > 0 and forbidden_sq < 4 * radius_sq):
        raise SpindleError("forbidden_sq must lie in (0, 4*radius_sq)")
    cos_angle = 1 - forbidden_sq / (2 * radius_sq)

    n = G.n
    sv = [SpindleVertex(0, i, verts[i], P, cos_angle) for i in range(n)]
    copy_map = [(0, i) for i in range(n)]
    index1 = {pivot: pivot}
    for i in range(n):
        if i == pivot:
            continue
        index1[i] = len(sv)
        sv.append(SpindleVertex(1, i, verts[i], P, cos_angle))
        copy_map.append((1, i))

    e = {1: set(G.e1), 2: set(G.e2)}
    for t, edges in ((1, G.e1), (2, G.e2)):
        for i, j in edges:
            e[t].add(_pair(index1[i], index1[j]))
    for i in range(n):
        if i == pivot:
            continue
        for j in range(n):
            if j == pivot:
                continue
            u, v = sv[i], sv[index1[j]]
            try:
                t = classify_pair(u, v, G.t1, G.t2, precision)
            except CannotSeparate as exc:
                raise SpindleError(f"cannot certify cross pair ({i}, {j}'): {exc}") from None
            except AuditError as exc:
                raise SpindleError(str(exc)) from None
            if t:
                e[t].add(_pair(i, index1[j]))

    cross = _pair(target, index1[target])
    graph = TwoDistGraph(
        G.family,
        tuple(sv),
        tuple(sorted(e[1])),
        tuple(sorted(e[2])),
        G.t1,
        G.t2,
        label if label is not None else f"spindle({G.label})",
    )
    if graph.edge_type(*cross) == 0:
        raise SpindleError("designed cross edge did not land on a target")
    return SpindledGraph(G, pivot, target, cos_angle, forbidden_sq, graph, tuple(copy_map), cross)


def point_family(G: TwoDistGraph) -> str:
    v = G.vertices[0]
    return family_of(v.point if isinstance(v, SpindleVertex) else v)
