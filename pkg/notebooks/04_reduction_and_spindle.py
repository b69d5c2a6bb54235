"""
Shrinking a forcing graph, G_199 and the 397-vertex spindle
===========================================================

Deleting vertices only removes constraints, so a subgraph that still forces
the pair is a certificate for the larger graph too.  On G_126 the greedy
reduction is quick; on G_313 it is dominated by the cost of the first
refutation.  G_199 itself is built from the symmetry orbits of G_313
without any solving.
"""

import warnings
from collections import Counter

from twodist import catalog
from twodist.geometry import PentPoint, dist_sq
from twodist.graphs import automorphism_report
from twodist.orbits import d6_orbits
from twodist.solver.coloring import forces_mono_pair
from twodist.solver.reduce import reduce_preserving

# %%
G126 = catalog.build_g126()
c, x = G126.index_of(PentPoint.origin()), G126.index_of(catalog.extreme_vertex(0))
for policy in ("distance", "degree", "random"):
    res = reduce_preserving(G126, c, x, 5, order_policy=policy, seed=0)
    print(f"{policy:9s} -> {res.graph.n} vertices after {res.checks} solver calls")

# %%
# G_313 splits into 32 orbits under the 12-element dihedral group; G_199
# keeps 22 of them.
G313 = catalog.build_g313()
print(Counter(map(len, d6_orbits(G313))))
H = catalog.build_g199()
print(H.label, H.n, len(H.e1), len(H.e2))
rep = automorphism_report(H)
print("automorphisms:", rep.order_color_preserving, rep.order_color_permuting, rep.order_uncolored)

# %%
# The forcing check on G_199 is hard for a small kernel; with a short
# budget it reports that it could not decide.
u, v = catalog.reduced_pair(H)
try:
    print("forced:", forces_mono_pair(H, u, v, 5, timeout=10))
except Exception as exc:
    print(type(exc).__name__, exc)

# %%
# Spindle about one pair vertex so that the two images of the other are a
# unit apart.
S = catalog.build_g397(H)
r_sq = dist_sq(H.vertices[S.pivot], H.vertices[S.target])
print(S.n, "vertices; rotation cosine", S.cos_angle, "; chord^2", 2 * r_sq * (1 - S.cos_angle))
S2 = catalog.build_g397(H, variant="double")
print(S2.graph.label, S2.n, "vertices; cosine", S2.cos_angle)

# %%
# A greedy reduction from G_313 in another order is possible but needs the
# full 313-vertex refutation first; a short budget gives up cleanly.
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    try:
        catalog.build_g199(order_policy="distance", timeout=5)
    except Exception as exc:
        print(type(exc).__name__, exc)
