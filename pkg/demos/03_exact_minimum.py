"""Exact minimum over all covers, next to the closed forms.

After fixing the matchings on a spanning tree, only (m!)^(|E|-|V|+1)
configurations remain.  The sweep below enumerates them and reports the
first minimising cover.
"""

import time

from dpcolor.chrompoly import chromatic_value
from dpcolor.cover import count_colorings
from dpcolor.dpmin import dp_exact, dp_formula, required_configurations
from dpcolor.graph import complete, cycle, theta, unicyclic

cases = [
    ("C4", cycle(4), 3),
    ("C5", cycle(5), 3),
    ("C6", cycle(6), 4),
    ("C4 + pendant", unicyclic(4, [0]), 3),
    ("theta(3,4)", theta(3, 4), 3),
    ("theta(4,4)", theta(4, 4), 4),
    ("K4", complete(4), 4),
]
print(f"{'graph':14s} m {'configs':>8s} {'P':>6s} {'P_DP':>6s} {'formula':>8s}  source")
for name, g, m in cases:
    start = time.perf_counter()
    res = dp_exact(g, m)
    f = dp_formula(g, m)
    print(f"{name:14s} {m} {required_configurations(g, m):8d} {chromatic_value(g, m):6d} "
          f"{res.minimum:6d} {f.value!s:>8s}  {f.provenance} ({time.perf_counter() - start:.3f}s)")

res = dp_exact(theta(3, 4), 3)
print("\nwitness for theta(3,4):", res.witness.sigma, "recount:", count_colorings(res.witness))
