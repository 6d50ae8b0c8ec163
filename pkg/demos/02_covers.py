"""Covers, their colorings, and fiber relabelling.

A cover assigns a permutation to each edge.  With every permutation the
identity, colorings of the cover are ordinary proper colorings.  Twisting one
edge of an even cycle loses colorings.
"""

from dpcolor.chrompoly import chromatic_value
from dpcolor.cover import count_colorings, gauge_normalize, identity_cover, random_cover, twisted_edge_cover
from dpcolor.graph import cycle

g, m = cycle(4), 3
print("identity cover of C4, m=3:", count_colorings(identity_cover(g, m)), "colorings; P(C4,3) =", chromatic_value(g, m))

tw = twisted_edge_cover(g, m, (0, 1))
print("twist edge 0-1:", tw.sigma, "->", count_colorings(tw), "colorings")

# Relabelling fibers along a spanning tree moves the twist but keeps the count.
norm = gauge_normalize(tw)
print("after relabelling:", norm.sigma, "->", count_colorings(norm))

for seed in range(5):
    c = random_cover(g, m, seed)
    print(f"seed {seed}: {count_colorings(c)} colorings")

print("\ncover JSON:", tw.to_json())
