"""
The hexagon family: G_7, G_19 and the 313-vertex graph
======================================================

Forbidden distances are 1 and 2.  The hexagonal wheel G_7 and two copies
rotated by plus and minus half of arccos(5/6) give G_19; the Minkowski sum
G_19 + G_19 + G_7 cut to the closed disk of radius sqrt3 has 313 points.
The two points (-1/2, +-5/sqrt12), at distance 5/sqrt3, are the pair of
interest.
"""

import tempfile
from pathlib import Path

from twodist import catalog
from twodist.geometry import dist_sq
from twodist.graphs import build_edges, edge_audit
from twodist.solver.coloring import ColoringQuery, color_decide, export_dimacs

# %%
G7 = build_edges(catalog.build_g7(), *catalog.HEX_TARGETS, label="G7")
G19 = build_edges(catalog.build_g19(), *catalog.HEX_TARGETS, label="G19")
for G in (G7, G19):
    print(G.label, G.n, "vertices,", len(G.e1), "unit edges,", len(G.e2), "edges of length 2")

# %%
G = catalog.build_g313()
u, v = catalog.g313_pair(G)
print(G.label, G.n, "vertices,", len(G.e1), "+", len(G.e2), "edges")
print("pair", u, v, "squared distance", dist_sq(G.vertices[u], G.vertices[v]))
print("audit:", edge_audit(G))

# %%
# The forcing query is hard.  A short budget returns UNKNOWN, never a
# wrong verdict; the DIMACS file can go to any external solver.
out = color_decide(ColoringQuery(G, 5, ((u, v),)), timeout=5)
print("5 s budget:", out.verdict, out.stats["conflicts"], "conflicts")
path = Path(tempfile.gettempdir()) / "g313_pair.cnf"
text = export_dimacs(ColoringQuery(G, 5, ((u, v),)), path)
print("wrote", path, "-", text.splitlines()[0])

# %%
# Small members decide instantly, e.g. the chromatic number of G_19
for k in (2, 3):
    print("G19 k =", k, color_decide(ColoringQuery(G19, k)).verdict)
