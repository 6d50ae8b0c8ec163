"""Chromatic polynomials by deletion-contraction.

Builds a few small graphs, prints their chromatic polynomials, and checks
that gluing two graphs along a shared edge divides out the edge's factor.
"""

from dpcolor import chromatic_polynomial
from dpcolor.chrompoly import chordal_product_poly, clique_sum_poly, signed_coefficients
from dpcolor.graph import chordal_peo, complete, cycle, girth_and_count, theta

for name, g in [("C4", cycle(4)), ("C5", cycle(5)), ("K4", complete(4)), ("theta(3,4)", theta(3, 4))]:
    p = chromatic_polynomial(g)
    print(f"{name:11s} P = {p}")
    print(f"{'':11s} values m=1..5: {[p(m) for m in range(1, 6)]}")

# Two cycles glued on an edge: P(G1) P(G2) / (m (m-1)).
glued = clique_sum_poly(chromatic_polynomial(cycle(3)), chromatic_polynomial(cycle(4)), 2)
print("\nglued C3 and C4 on an edge matches theta(3,4):", glued == chromatic_polynomial(theta(3, 4)))

# Chordal graphs factor over a perfect elimination ordering.
g = theta(3, 3)
peo = chordal_peo(g)
print("theta(3,3) elimination alphas", peo.alphas, "->", chordal_product_poly(peo, g))

# The first girth-many coefficients only depend on edges, girth and girth-cycle count.
g = theta(3, 4)
girth, t = girth_and_count(g)
print(f"theta(3,4): girth {girth}, {t} shortest cycle(s), leading |coefficients| {signed_coefficients(chromatic_polynomial(g))[:girth]}")
