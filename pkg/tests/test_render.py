import xml.etree.ElementTree as ET

import pytest

from twodist import catalog
from twodist.render import render_svg, write_svg
from twodist.solver.coloring import ColoringQuery, color_decide

NS = "{http://www.w3.org/2000/svg}"


def test_g16_drawing(tmp_path):
    G = catalog.build_g16()
    col = color_decide(ColoringQuery(G, 5)).coloring
    path = tmp_path / "g16.svg"
    write_svg(G, path, coloring=col, mono=[0, 15])
    root = ET.parse(path).getroot()
    lines = root.findall(f".//{NS}line")
    circles = root.findall(f".//{NS}circle")
    assert len(lines) == 56 and len(circles) == 16
    assert sum(c.get("fill") == "black" for c in circles) == 2
    groups = {g.get("class"): g for g in root.findall(f"{NS}g")}
    assert "stroke-dasharray" in groups["e2"].attrib and "stroke-dasharray" not in groups["e1"].attrib
    assert len(root.findall(f".//{NS}text")) == 16


def test_large_graph_unlabelled():
    svg = render_svg(catalog.build_g313())
    root = ET.fromstring(svg)
    assert not root.findall(f".//{NS}text")
    assert len(root.findall(f".//{NS}circle")) == 313


def test_bad_colouring_length():
    with pytest.raises(ValueError):
        render_svg(catalog.build_g16(), coloring=[0, 1])
