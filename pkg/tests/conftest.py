"""Brute-force oracles shared by the test modules.

Nothing here calls into the deletion-contraction code, the backtracking
counter or the cover sweep, so the tests compare against independent routes.
"""

import itertools

import pytest
from hypothesis import strategies as st

from dpcolor.graph import Graph


def proper_colorings(g, m):
    """Proper m-colorings by checking every assignment."""
    return sum(
        1
        for a in itertools.product(range(m), repeat=g.n)
        if all(a[u] != a[v] for u, v in g.edges)
    )


def cover_colorings(cover):
    """Independent transversals of a cover by checking every index assignment."""
    g = cover.graph
    sigma = cover.sigma
    return sum(
        1
        for a in itertools.product(range(cover.m), repeat=g.n)
        if all(sigma[(u, v)][a[u]] != a[v] for u, v in g.edges)
    )


def cycles_of_length(g, length):
    """Distinct cycles of the given length, each as a frozenset of edges."""
    found = set()
    for seq in itertools.permutations(range(g.n), length):
        if seq[0] != min(seq):
            continue
        ring = seq + (seq[0],)
        if all(g.has_edge(ring[i], ring[i + 1]) for i in range(length)):
            found.add(frozenset(frozenset(ring[i : i + 2]) for i in range(length)))
    return found


def clique_number(g):
    best = 1 if g.n else 0
    for k in range(2, g.n + 1):
        if any(g.is_clique(c) for c in itertools.combinations(range(g.n), k)):
            best = k
    return best


def min_max_back_degree(g):
    """Smallest achievable max back-degree over all vertex orderings."""
    best = None
    for order in itertools.permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(order)}
        worst = max(sum(1 for w in g.neighbors(v) if pos[w] < pos[v]) for v in order)
        best = worst if best is None else min(best, worst)
    return best


def has_peo_brute(g):
    for order in itertools.permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(order)}
        if all(g.is_clique([w for w in g.neighbors(v) if pos[w] > pos[v]]) for v in order):
            return True
    return False


@st.composite
def graphs(draw, min_n=1, max_n=6, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if connected:
        # random spanning tree first, then extra edges
        tree = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
        extra = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return Graph(n, set(tree) | set(extra))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@pytest.fixture
def small_graphs():
    from dpcolor.verify import STANDARD_BATTERY

    return {k: g for k, g in STANDARD_BATTERY.items() if g.n <= 7}


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
