"""Lower and upper bounds, with a seeded random-cover estimate in between."""

from dpcolor.dpmin import dp_value, join_lower_bound, monte_carlo_bound
from dpcolor.graph import cycle, theta

for name, g, m in [("C4", cycle(4), 3), ("theta(3,4)", theta(3, 4), 4), ("C6", cycle(6), 3)]:
    rep = monte_carlo_bound(g, m, samples=5000, seed=1)
    exact, _, _ = dp_value(g, m)
    print(f"{name} m={m}: greedy {rep.greedy_lower} <= P_DP {exact} <= min sample {rep.min_sampled} "
          f"<= P {rep.chromatic_upper}")
    print(f"    mean {float(rep.monte_carlo_mean):.3f} vs expected {rep.expected_mean} "
          f"(SE {rep.standard_error:.3f}, within 3 SE: {rep.within_band})")

# Adding a dominating vertex: a bound built from the smaller graph's value.
for m in (6, 7, 8):
    print(f"K1 v C4, m={m}: P_DP >= {join_lower_bound(cycle(4), 1, m)}")
