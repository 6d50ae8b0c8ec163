"""Counting arguments behind single-edge and two-edge twists.

For one edge, the best twist loses either every coloring whose ends agree or
a 1/(m-1) share of the rest.  For a path of two edges, five twist patterns
give five candidate counts.
"""

from dpcolor.chrompoly import chromatic_value
from dpcolor.cover import count_colorings, path_case_cover, twisted_edge_cover
from dpcolor.dpmin import dp_exact, edge_delete_extremal_value, path_delete_quantities, strict_gap_witness
from dpcolor.graph import cycle, theta

m = 3
for n in range(3, 8):
    g = cycle(n)
    print(f"C{n}: P={chromatic_value(g, m):4d}  extremal value {edge_delete_extremal_value(g, m, (0, 1)):4d}  "
          f"twisted count {count_colorings(twisted_edge_cover(g, m, (0, 1))):4d}  gap witness {strict_gap_witness(g, m)}")

g = theta(3, 4)
q = path_delete_quantities(g, m, 0, 1, 3)
print("\ntheta(3,4), path 0-1-3:")
for i, (a, pred) in enumerate(zip(q.A, q.predicted), start=1):
    print(f"  case {i}: A = {a}, predicted {pred}, counted {count_colorings(path_case_cover(g, m, 0, 1, 3, i))}")
print(f"  largest loss in case {q.max_case}; exhaustive minimum {dp_exact(g, m).minimum}")
