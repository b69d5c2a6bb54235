"""Graph JSON documents.

Rationals are "p/q" strings, Q5 / Q33 values are [a, b] pairs and HexC
values [a, b, c, d].  Pentagon vertices are written as their five lattice
multiplicities.  Spindled graphs store their base graph and rotation data;
loading rebuilds the geometry and re-derives every edge.
"""

from __future__ import annotations

import json
from pathlib import Path

from .exactnum import HexC, Q5, Q33
from .geometry import HEXAGON, PENTAGON, HexPoint, PentPoint
from .graphs import SpindledGraph, SpindleVertex, TwoDistGraph, build_edges, spindle

FORMAT = "twodist-graph"
VERSION = 1
FIELDS = {PENTAGON: "Q(sqrt5)", HEXAGON: "Q(i sqrt3, i sqrt11)"}
SCALARS = {PENTAGON: Q5, HEXAGON: Q33}


class GraphFormatError(ValueError):
    pass


def _vertex_json(p):
    if isinstance(p, PentPoint):
        return list(p.n)
    return p.z.to_json()


def _vertex_parse(family: str, data):
    if family == PENTAGON:
        return PentPoint.from_counts(data)
    return HexPoint(HexC.from_json(data))


def _plain_doc(G: TwoDistGraph, provenance: str) -> dict:
    return {
        "format": FORMAT,
        "version": VERSION,
        "family": G.family,
        "field": FIELDS[G.family],
        "label": G.label,
        "provenance": provenance,
        "targets": [G.t1.to_json(), G.t2.to_json()],
        "vertices": [_vertex_json(p) for p in G.vertices],
        "e1": [list(e) for e in G.e1],
        "e2": [list(e) for e in G.e2],
    }


def to_document(G: TwoDistGraph | SpindledGraph, provenance: str = "") -> dict:
    if isinstance(G, SpindledGraph):
        doc = _plain_doc(G.base, provenance)
        doc["label"] = G.graph.label
        doc["vertices"] = [[c, b] for c, b in G.copy_map]
        doc["e1"] = [list(e) for e in G.graph.e1]
        doc["e2"] = [list(e) for e in G.graph.e2]
        doc["spindle"] = {
            "base": _plain_doc(G.base, provenance),
            "pivot": G.pivot,
            "target": G.target,
            "forbidden_sq": G.forbidden_sq.to_json(),
            "cos_angle": G.cos_angle.to_json(),
        }
        return doc
    if any(isinstance(v, SpindleVertex) for v in G.vertices):
        raise GraphFormatError("subgraphs of spindled graphs have no document form")
    return _plain_doc(G, provenance)


def dumps(G, provenance: str = "") -> str:
    return json.dumps(to_document(G, provenance), indent=1, sort_keys=True) + "\n"


def save(G, path, provenance: str = "") -> None:
    Path(path).write_text(dumps(G, provenance), encoding="utf-8")


def _edges(data) -> tuple:
    return tuple(sorted(tuple(sorted(e)) for e in data))


def _load_plain(doc: dict) -> TwoDistGraph:
    family = doc.get("family")
    if family not in FIELDS:
        raise GraphFormatError(f"unknown family {family!r}")
    scalar = SCALARS[family]
    t1, t2 = (scalar.from_json(t) for t in doc["targets"])
    pts = [_vertex_parse(family, v) for v in doc["vertices"]]
    G = build_edges(pts, t1, t2, label=doc.get("label", ""))
    if G.e1 != _edges(doc["e1"]) or G.e2 != _edges(doc["e2"]):
        raise GraphFormatError("stored edges do not match the vertex coordinates")
    return G


def from_document(doc: dict) -> TwoDistGraph | SpindledGraph:
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise GraphFormatError("not a twodist graph document")
    if doc.get("version") != VERSION:
        raise GraphFormatError(f"unsupported version {doc.get('version')!r}")
    sp = doc.get("spindle")
    if sp is None:
        return _load_plain(doc)
    base = _load_plain(sp["base"])
    scalar = SCALARS[base.family]
    S = spindle(base, sp["pivot"], sp["target"], scalar.from_json(sp["forbidden_sq"]), label=doc.get("label"))
    if S.cos_angle != scalar.from_json(sp["cos_angle"]):
        raise GraphFormatError("stored rotation cosine is inconsistent")
    if [list(m) for m in S.copy_map] != doc["vertices"]:
        raise GraphFormatError("stored copy map is inconsistent")
    if S.graph.e1 != _edges(doc["e1"]) or S.graph.e2 != _edges(doc["e2"]):
        raise GraphFormatError("stored edges do not match the spindle geometry")
    return S


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    try:
        return from_document(doc)
    except (KeyError, TypeError, ValueError, AttributeError, IndexError) as exc:
        if isinstance(exc, GraphFormatError):
            raise
        raise GraphFormatError(f"malformed document: {exc}") from None


def load(path):
    return loads(Path(path).read_text(encoding="utf-8"))
