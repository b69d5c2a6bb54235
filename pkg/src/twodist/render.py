"""SVG drawings of two-distance graphs.

Positions are 64-bit midpoints of the exact coordinates; the picture is for
looking at, the JSON document is the authoritative record.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

from .graphs import TwoDistGraph, vertex_xy

PALETTE = ("#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45")
E1_STYLE = 'stroke="#555" stroke-width="{w}"'
E2_STYLE = 'stroke="#2a7fff" stroke-width="{w}" stroke-dasharray="{d}"'


def render_svg(
    G: TwoDistGraph,
    coloring: Sequence[int] | None = None,
    mono: Iterable[int] = (),
    size: int = 600,
    labels: bool | None = None,
    one_based: bool = True,
) -> str:
    """Unit-distance edges are solid grey, second-distance edges dashed blue.
    Vertices in ``mono`` are filled black regardless of ``coloring``."""
    if coloring is not None and len(coloring) != G.n:
        raise ValueError(f"coloring has {len(coloring)} entries for {G.n} vertices")
    mono = set(mono)
    xy = [vertex_xy(v) for v in G.vertices]
    xs = [p[0] for p in xy]
    ys = [p[1] for p in xy]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    margin = 20
    scale = (size - 2 * margin) / span
    cx = (max(xs) + min(xs)) / 2
    cy = (max(ys) + min(ys)) / 2

    def pos(i):
        x, y = xy[i]
        return size / 2 + (x - cx) * scale, size / 2 - (y - cy) * scale

    if labels is None:
        labels = G.n <= 40
    r = max(2.0, min(9.0, 0.12 * scale))
    w = max(0.4, min(1.5, 0.02 * scale))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>{escape(G.label or 'graph')}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for kind, edges, style in ((1, G.e1, E1_STYLE), (2, G.e2, E2_STYLE)):
        out.append(f'<g class="e{kind}" {style.format(w=w, d=f"{3 * w:.2f},{2 * w:.2f}")}>')
        for i, j in edges:
            (x1, y1), (x2, y2) = pos(i), pos(j)
            out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
        out.append("</g>")
    out.append('<g class="vertices" stroke="black" stroke-width="0.8">')
    for i in range(G.n):
        x, y = pos(i)
        if i in mono:
            fill = "black"
        elif coloring is not None:
            fill = PALETTE[coloring[i] % len(PALETTE)]
        else:
            fill = "white"
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r:.2f}" fill="{fill}"/>')
        if labels:
            lab = i + 1 if one_based else i
            out.append(
                f'<text x="{x + r + 1:.2f}" y="{y - r - 1:.2f}" font-size="{max(8, 1.4 * r):.1f}" '
                f'stroke="none" fill="black">{lab}</text>'
            )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(G: TwoDistGraph, path, **kwargs) -> None:
    Path(path).write_text(render_svg(G, **kwargs), encoding="utf-8")
