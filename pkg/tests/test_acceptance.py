"""Acceptance suite: one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py`` (lines appear in the terminal summary)
or ``python3 tests/test_acceptance.py`` to print them directly.
"""

import itertools
import subprocess
import sys

import numpy as np

from dpcolor.chrompoly import broken_circuit_coeffs, chromatic_polynomial, chromatic_value, signed_coefficients
from dpcolor.cover import count_colorings, identity_cover, path_case_cover, random_cover, twisted_edge_cover
from dpcolor.dpmin import (
    dp_exact,
    dp_formula,
    dp_value,
    edge_delete_extremal_cover,
    edge_delete_extremal_value,
    greedy_lower_bound,
    join_lower_bound,
    monte_carlo_bound,
    path_delete_quantities,
)
from dpcolor.graph import (
    Graph,
    complete,
    cycle,
    degeneracy_ordering,
    girth_and_count,
    join_with_complete,
    path,
    theta,
    unicyclic,
)
from dpcolor.verify import STANDARD_BATTERY

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'}  [{number:2d}] {title}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _brute_colorings(g, m):
    return sum(
        1 for a in itertools.product(range(m), repeat=g.n) if all(a[u] != a[v] for u, v in g.edges)
    )


def test_01_chromatic_oracle():
    bad, checked = [], 0
    for name, g in STANDARD_BATTERY.items():
        if g.n > 7:
            continue
        p = chromatic_polynomial(g)
        for m in range(1, 5):
            checked += 1
            if p(m) != _brute_colorings(g, m):
                bad.append((name, m))
    record(1, "chromatic polynomial vs brute force (n<=7, m<=4)", not bad, f"{checked} pairs, mismatches {bad}")


def test_02_natural_bijection():
    bad, checked = [], 0
    for name, g in STANDARD_BATTERY.items():
        for m in range(1, 5):
            checked += 1
            if count_colorings(identity_cover(g, m)) != chromatic_value(g, m):
                bad.append((name, m))
    record(2, "identity cover count = P(G,m) on the battery", not bad, f"{checked} pairs, mismatches {bad}")


def test_03_unicyclic():
    graphs = {f"C{n}": cycle(n) for n in range(3, 8)}
    graphs["C4+pendant"] = unicyclic(4, [0])
    graphs["C5+pendant"] = unicyclic(5, [0])
    bad = []
    for name, g in graphs.items():
        for m in (2, 3):
            exact = dp_exact(g, m)
            formula = dp_formula(g, m)
            if exact.configurations_enumerated > 6 or formula.value != exact.minimum:
                bad.append((name, m, formula.value, exact.minimum))
    keys = {k: dp_exact(g, 3).minimum for k, g in [("C4", cycle(4)), ("C6", cycle(6)), ("C5", cycle(5))]}
    ok = not bad and keys == {"C4": 15, "C6": 63, "C5": 30}
    record(3, "unicyclic formula vs exhaustive search, m=2,3", ok, f"key values {keys}, mismatches {bad}")


def test_04_theta():
    got = {}
    for a, b in [(3, 4), (4, 4), (3, 3)]:
        res = dp_exact(theta(a, b), 3)
        got[(a, b)] = (res.minimum, res.configurations_enumerated)
    p33 = chromatic_value(theta(3, 3), 3)
    ok = got == {(3, 4): (15, 36), (4, 4): (36, 36), (3, 3): (p33, 36)} and p33 == 6
    record(4, "two cycles sharing an edge at m=3", ok, f"(min, configurations) {got}; P(theta(3,3),3)={p33}")


def test_05_chordal():
    fan = join_with_complete(path(4), 1)
    bowtie = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    graphs = {"K3": complete(3), "K4": complete(4), "theta(3,3)": theta(3, 3), "fan P4+K1": fan, "bowtie": bowtie}
    bad = []
    for name, g in graphs.items():
        for m in range(1, 5):
            if dp_exact(g, m).minimum != chromatic_value(g, m):
                bad.append((name, m))
    record(5, "chordal graphs: P_DP = P for m<=4", not bad, f"{len(graphs)} graphs, mismatches {bad}")


def test_06_edge_delete():
    m, rows, ok = 3, [], True
    for n in range(3, 7):
        g, e = cycle(n), (0, 1)
        value = edge_delete_extremal_value(g, m, e)
        extremal = count_colorings(edge_delete_extremal_cover(g, m, e))
        twisted = count_colorings(twisted_edge_cover(g, m, e))
        # the twist is the extremal choice exactly when it undercuts P(G, m)
        twist_selected = twisted < chromatic_value(g, m)
        ok &= extremal == value and (twisted == value) == twist_selected
        rows.append(f"C{n}: value {value}, extremal {extremal}, twisted {twisted}")
    c4 = count_colorings(twisted_edge_cover(cycle(4), 3, (0, 1)))
    ok &= c4 == 15 < 18 == chromatic_value(cycle(4), 3)
    record(6, "edge-deletion extremal cover on C3..C6, m=3", ok, "; ".join(rows))


def test_07_path_delete():
    ok, parts = True, []
    for (a, b), p in [((3, 4), (0, 1, 3)), ((4, 4), (0, 1, 4))]:
        g = theta(a, b)
        q = path_delete_quantities(g, 3, *p)
        counts = [count_colorings(path_case_cover(g, 3, *p, i)) for i in range(1, 6)]
        ok &= counts == list(q.predicted)
        parts.append(f"theta({a},{b}) counts {counts} max case A_{q.max_case}")
    ok &= path_delete_quantities(theta(3, 4), 3, 0, 1, 3).max_case == 2
    record(7, "path-deletion case covers at m=3", ok, "; ".join(parts))


def test_08_ends():
    g, m, (u, v) = cycle(4), 3, (0, 1)
    h = g.without_edges([(u, v)])
    buckets = {}
    for a in itertools.product(range(m), repeat=h.n):
        if all(a[x] != a[y] for x, y in h.edges):
            buckets[(a[u], a[v])] = buckets.get((a[u], a[v]), 0) + 1
    diag = {buckets.get((i, i), 0) for i in range(m)}
    off = {buckets.get((i, j), 0) for i in range(m) for j in range(m) if i != j}
    ok = diag == {2} and off == {3} and m * 2 == 6 and m * (m - 1) * 3 == 18
    ok &= m * 2 == chromatic_value(h, m) - chromatic_value(g, m) and m * (m - 1) * 3 == chromatic_value(g, m)
    record(8, "end-color buckets on C4, m=3", ok, f"r values {sorted(diag)}, t values {sorted(off)}")


def test_09_coefficients():
    ok, parts = True, []
    for name, g in [("C4", cycle(4)), ("C5", cycle(5)), ("theta(3,4)", theta(3, 4))]:
        girth, t = girth_and_count(g)
        got = signed_coefficients(chromatic_polynomial(g))[:girth]
        want = broken_circuit_coeffs(g.num_edges, girth, t)
        ok &= got == want
        parts.append(f"{name} {got}")
    record(9, "leading coefficients vs broken-circuit prediction", ok, "; ".join(parts))


def test_10_sandwich():
    bad, sources = [], {}
    for name, g in STANDARD_BATTERY.items():
        m = max(2, degeneracy_ordering(g).coloring_number)
        low = greedy_lower_bound(g, m)
        mid, source, _ = dp_value(g, m)
        high = chromatic_value(g, m)
        sources[source] = sources.get(source, 0) + 1
        if not low <= mid <= high:
            bad.append((name, m, low, mid, high))
    record(10, "greedy <= P_DP <= P on the battery (m = col)", not bad, f"P_DP sources {sources}, violations {bad}")


def test_11_monte_carlo():
    rep = monte_carlo_bound(cycle(4), 3, 10_000, seed=0)
    ok = rep.expected_mean == 16 and rep.within_band and rep.min_sampled >= 15
    record(
        11,
        "random-cover mean on C4, m=3, 10^4 samples",
        ok,
        f"mean {float(rep.monte_carlo_mean):.4f}, 3 SE = {3 * rep.standard_error:.4f}, min {rep.min_sampled}",
    )


def test_12_join_bound():
    bound = join_lower_bound(cycle(4), 1, 6)
    joined = join_with_complete(cycle(4), 1)
    rng = np.random.default_rng(0)
    low = min(count_colorings(random_cover(joined, 6, rng)) for _ in range(1000))
    record(12, "10^3 covers of K1 v C4 at m=6 above the join bound", bound == 1532 and low >= bound,
           f"bound {bound}, smallest sample {low}")


def test_13_determinism():
    def dp(threads):
        cmd = [sys.executable, "-m", "dpcolor", "dp", "--graph", "theta:3,4", "--m", "2..4", "--threads", threads]
        return subprocess.run(cmd, capture_output=True, check=True).stdout

    one, eight = dp("1"), dp("8")
    record(13, "dp JSON identical with 1 and 8 threads", one == eight and len(one) > 0, f"{len(one)} bytes each")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
