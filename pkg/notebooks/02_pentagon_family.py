"""
The pentagon family: G_126, G_16 and G_31
=========================================

Five-fold Minkowski sums of a unit pentagon give a 126-point set.  Joining
points at distance 1 or d (the golden ratio) yields a graph in which the
centre and any outer corner are coloured alike in every 5-colouring.  A
16-vertex subgraph already has that property, and two rotated copies of it
give a graph with no 5-colouring at all.
"""

from twodist import catalog
from twodist.graphs import edge_audit, format_edge_list
from twodist.solver.coloring import ColoringQuery, color_decide, color_enumerate, forces_mono_pair
from twodist.solver.proof import replay_g16_proof

# %%
G126 = catalog.build_g126()
print(G126.label, G126.n, "vertices,", len(G126.e1), "unit edges,", len(G126.e2), "d-edges")
print("audit:", edge_audit(G126))

# %%
# The 16-vertex subgraph, located by its edge lists and anchored at the
# centre (label 1) and the corner 5*u_0 (label 16)
G16 = catalog.build_g16()
print("E(1) =", format_edge_list(G16.e1))
print("E(d) =", format_edge_list(G16.e2))

# %%
# The hand proof, replayed step by step
for step in replay_g16_proof(G16):
    print(step.step, "PASS" if step.passed else "FAIL", step.claim)

# %%
# Machine confirmation: the solver and exhaustive enumeration agree
print("forced:", forces_mono_pair(G16, 0, 15, 5))
cols = list(color_enumerate(G16, 5))
print(len(cols), "colourings up to renaming colours; 1 and 16 alike in all:",
      all(c[0] == c[15] for c in cols))

# %%
# Spindling: copies of vertex 16 a unit (or d) apart about vertex 1
for S in (catalog.build_g31(), catalog.build_g31_alt()):
    out = color_decide(ColoringQuery(S.graph, 5))
    print(S.graph.label, S.n, "vertices, cos =", S.cos_angle, "->", out.verdict,
          f"({out.stats['conflicts']} conflicts)")
