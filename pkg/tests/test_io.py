import json

import pytest

from twodist import catalog, io
from twodist.graphs import SpindledGraph, build_edges


def fast_catalog():
    yield build_edges(catalog.build_g5(), *catalog.PENT_TARGETS, label="G5")
    yield catalog.build_g16()
    yield catalog.build_g126()
    yield catalog.build_g31()
    yield catalog.build_g31_alt()
    yield build_edges(catalog.build_g7(), *catalog.HEX_TARGETS, label="G7")
    yield build_edges(catalog.build_g19(), *catalog.HEX_TARGETS, label="G19")
    yield catalog.build_g313()


def same(a, b):
    if isinstance(a, SpindledGraph):
        assert isinstance(b, SpindledGraph)
        assert (a.pivot, a.target, a.cos_angle, a.forbidden_sq) == (b.pivot, b.target, b.cos_angle, b.forbidden_sq)
        same(a.base, b.base)
        a, b = a.graph, b.graph
    assert a.vertices == b.vertices and a.e1 == b.e1 and a.e2 == b.e2 and a.label == b.label


@pytest.mark.parametrize("G", list(fast_catalog()), ids=lambda g: getattr(g, "label", None) or g.graph.label)
def test_round_trip(G, tmp_path):
    same(io.loads(io.dumps(G)), G)
    path = tmp_path / "g.json"
    io.save(G, path, provenance="test")
    same(io.load(path), G)
    assert io.dumps(io.load(path), provenance="test") == path.read_text()


def test_document_header():
    doc = io.to_document(catalog.build_g16(), provenance="unit")
    assert doc["format"] == io.FORMAT and doc["version"] == io.VERSION
    assert doc["field"] == io.FIELDS["pentagon"]
    assert len(doc["e1"]) == 28 and len(doc["e2"]) == 28


def corrupt(mutator):
    doc = json.loads(io.dumps(catalog.build_g16()))
    mutator(doc)
    return json.dumps(doc)


@pytest.mark.parametrize(
    "mutator",
    [
        lambda d: d["e1"].pop(),
        lambda d: d["e2"].append([0, 15]),
        lambda d: d["vertices"][3].__setitem__(0, d["vertices"][3][0] + 1),
        lambda d: d.__setitem__("format", "other"),
        lambda d: d.__setitem__("version", 99),
        lambda d: d.pop("vertices"),
        lambda d: d["vertices"].append(d["vertices"][0]),
    ],
)
def test_corrupted_documents_rejected(mutator):
    with pytest.raises(io.GraphFormatError):
        io.loads(corrupt(mutator))


def test_garbage_rejected():
    with pytest.raises(io.GraphFormatError):
        io.loads("not json")
    with pytest.raises(io.GraphFormatError):
        io.loads("[1, 2]")


def test_corrupted_spindle_rejected():
    doc = json.loads(io.dumps(catalog.build_g31()))
    doc["spindle"]["cos_angle"] = doc["spindle"]["cos_angle"][::-1]
    with pytest.raises(io.GraphFormatError):
        io.loads(json.dumps(doc))
