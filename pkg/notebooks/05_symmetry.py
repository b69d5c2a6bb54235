"""
Automorphism orders
===================

The two edge classes make three natural groups: permutations preserving
each class, permutations that may also swap the classes, and automorphisms
of the plain graph that ignores the classes.
"""

from twodist import catalog
from twodist.graphs import automorphism_report, build_edges

for G in (
    build_edges(catalog.build_g5(), *catalog.PENT_TARGETS, label="G5"),
    catalog.build_g16(),
    build_edges(catalog.build_g7(), *catalog.HEX_TARGETS, label="G7"),
    build_edges(catalog.build_g19(), *catalog.HEX_TARGETS, label="G19"),
):
    rep = automorphism_report(G)
    print(f"{G.label:>4}: class-preserving {rep.order_color_preserving:>4}  "
          f"class-swapping {rep.order_color_permuting:>4}  plain {rep.order_uncolored:>4}")

# %%
# The plain-graph group of G_16 has order 48
print("G16 variants equal to 48:", automorphism_report(catalog.build_g16()).matches(48))
