"""The DP color function: exhaustive minimisation, closed forms and bounds.

``dp_exact`` sweeps every cover up to fiber relabeling.  Relabeling fibers
along a spanning tree turns every tree matching into the identity, so only
the ``|E| - |V| + 1`` non-tree edges carry free permutations and the sweep
covers ``(m!) ** (|E| - |V| + 1)`` configurations instead of ``(m!) ** |E|``.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .chrompoly import BudgetExceeded, chromatic_value, falling_factorial
from .cover import (
    Cover,
    count_colorings,
    identity,
    identity_cover,
    random_cover,
    twisted_edge_cover,
)
from .graph import Graph, GraphError, chordal_peo, degeneracy_ordering, girth_and_count, join_with_complete

__all__ = [
    "DEFAULT_BUDGET",
    "DpMinResult",
    "FormulaResult",
    "BoundReport",
    "PathDeleteQuantities",
    "dp_exact",
    "dp_formula",
    "dp_value",
    "greedy_lower_bound",
    "monte_carlo_bound",
    "edge_delete_extremal_value",
    "edge_delete_extremal_cover",
    "strict_gap_witness",
    "path_delete_quantities",
    "join_lower_bound",
    "theta_shape",
    "required_configurations",
]

DEFAULT_BUDGET = 10**7

# Above this many bytes of precomputed masks the sweep falls back to backtracking.
_VECTOR_BYTES = 64 * 2**20


@dataclass(frozen=True)
class DpMinResult:
    minimum: int
    witness: Cover
    configurations_enumerated: int
    exhaustive: bool

    def to_json(self) -> dict:
        return {
            "minimum": self.minimum,
            "configurations_enumerated": self.configurations_enumerated,
            "exhaustive": self.exhaustive,
            "witness": self.witness.to_json(),
        }


@dataclass(frozen=True)
class FormulaResult:
    """Closed-form value of ``P_DP(G, m)``; ``value`` is None when no theorem applies."""

    value: Optional[int]
    provenance: str

    def __bool__(self) -> bool:
        return self.value is not None


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise GraphError("DP color function routines need a connected graph")


def required_configurations(g: Graph, m: int) -> int:
    """Size of the gauge-fixed cover space, ``(m!) ** cyclomatic``."""
    return math.factorial(m) ** g.cyclomatic_number()


def _split_tree(g: Graph) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    tree = {(min(p, c), max(p, c)) for p, c, _ in g.bfs_tree_edges(0)}
    tree_edges = [e for e in g.edges if e in tree]
    free_edges = [e for e in g.edges if e not in tree]
    return tree_edges, free_edges


class _MaskSweep:
    """Counts colorings of gauge-fixed covers with precomputed boolean masks.

    Rows are the index assignments that already satisfy every (identity) tree
    edge; each free edge and permutation contributes a mask of the rows it
    leaves intact.
    """

    def __init__(self, g: Graph, m: int, tree_edges, free_edges, perms):
        grid = np.indices((m,) * g.n, dtype=np.int16).reshape(g.n, -1)
        keep = np.ones(grid.shape[1], dtype=bool)
        for u, v in tree_edges:
            keep &= grid[u] != grid[v]
        rows = grid[:, keep]
        self.masks = []
        for u, v in free_edges:
            per_edge = np.empty((len(perms), rows.shape[1]), dtype=bool)
            for k, p in enumerate(perms):
                per_edge[k] = np.asarray(p, dtype=np.int16)[rows[u]] != rows[v]
            self.masks.append(per_edge)
        self.base = np.ones(rows.shape[1], dtype=bool)

    def sweep(self, first: int) -> tuple[int, tuple[int, ...], int]:
        """Minimum over configurations whose first free edge uses permutation ``first``."""
        best = None
        best_idx: tuple[int, ...] = ()
        seen = 0
        depth = len(self.masks)
        stack = [(1, (first,), self.base & self.masks[0][first])]
        # depth-first in lexicographic order: push children in reverse
        while stack:
            level, idx, mask = stack.pop()
            if level == depth:
                seen += 1
                value = int(np.count_nonzero(mask))
                if best is None or value < best:
                    best, best_idx = value, idx
                continue
            per_edge = self.masks[level]
            for k in range(len(per_edge) - 1, -1, -1):
                stack.append((level + 1, idx + (k,), mask & per_edge[k]))
        return best, best_idx, seen


def _backtrack_sweep(g, m, free_edges, perms, first):
    best = None
    best_idx: tuple[int, ...] = ()
    seen = 0
    base = identity_cover(g, m)
    for rest in itertools.product(range(len(perms)), repeat=len(free_edges) - 1):
        idx = (first,) + rest
        c = base
        for (u, v), k in zip(free_edges, idx):
            c = c.with_perm(u, v, perms[k])
        value = count_colorings(c)
        seen += 1
        if best is None or value < best:
            best, best_idx = value, idx
    return best, best_idx, seen


def dp_exact(g: Graph, m: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> DpMinResult:
    """Exact ``P_DP(g, m)`` by sweeping all gauge-fixed covers.

    Tree edges of the canonical BFS tree carry the identity; the free edges
    (sorted) take every permutation in lexicographic order, with the first
    free edge most significant.  The witness is the first minimiser in that
    order.  ``workers > 1`` splits the sweep on the first free edge; the
    result does not depend on it.

    Raises
    ------
    BudgetExceeded
        When ``(m!) ** (|E| - |V| + 1)`` exceeds ``budget``; ``.required``
        holds that count.
    """
    _require_connected(g)
    if m < 1:
        raise GraphError("fold size must be at least 1")
    required = required_configurations(g, m)
    if required > budget:
        raise BudgetExceeded(
            f"exhaustive search needs {required} configurations "
            f"(({m}!)^{g.cyclomatic_number()}), budget is {budget}",
            required=required,
        )
    tree_edges, free_edges = _split_tree(g)
    base = identity_cover(g, m)
    if not free_edges:
        return DpMinResult(count_colorings(base), base, 1, True)

    perms = list(itertools.permutations(range(m)))
    rows_bound = m**g.n
    mask_bytes = rows_bound * len(perms) * len(free_edges)
    if mask_bytes <= _VECTOR_BYTES:
        engine = _MaskSweep(g, m, tree_edges, free_edges, perms)

        def job(first):
            return engine.sweep(first)

    else:

        def job(first):
            return _backtrack_sweep(g, m, free_edges, perms, first)

    firsts = range(len(perms))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(job, firsts))
    else:
        parts = [job(f) for f in firsts]

    best, best_idx, total = None, (), 0
    for value, idx, seen in parts:
        total += seen
        if best is None or value < best:
            best, best_idx = value, idx
    witness = base
    for (u, v), k in zip(free_edges, best_idx):
        witness = witness.with_perm(u, v, perms[k])
    return DpMinResult(best, witness, total, True)


# -- closed forms -------------------------------------------------------------


def theta_shape(g: Graph) -> Optional[tuple[int, int]]:
    """Cycle lengths ``(a, b)`` with ``a <= b`` if ``g`` is a cycle plus one chord.

    That is: connected, ``|E| = n + 1``, exactly two vertices of degree 3,
    those two adjacent, every other vertex of degree 2.
    """
    if not g.is_connected() or g.num_edges != g.n + 1:
        return None
    degs = [g.degree(v) for v in range(g.n)]
    hubs = [v for v, d in enumerate(degs) if d == 3]
    if len(hubs) != 2 or any(d != 2 for v, d in enumerate(degs) if v not in hubs):
        return None
    x, y = hubs
    if not g.has_edge(x, y):
        return None
    lengths = []
    for start in sorted(g.neighbors(x) - {y}):
        prev, cur, steps = x, start, 1
        while cur != y:
            prev, cur = cur, next(w for w in g.neighbors(cur) if w != prev)
            steps += 1
        lengths.append(steps + 1)
    a, b = sorted(lengths)
    return a, b


def dp_formula(g: Graph, m: int) -> FormulaResult:
    """``P_DP(g, m)`` from a closed form, when ``g`` is in a solved family.

    Families, checked in this order: chordal graphs; unicyclic graphs (odd
    and even cycle); a cycle with one chord, split by the parities of its two
    inner cycles.  Below a formula's validity threshold the value is None and
    the provenance says why.
    """
    _require_connected(g)
    if m < 1:
        raise GraphError("fold size must be at least 1")
    if chordal_peo(g) is not None:
        return FormulaResult(chromatic_value(g, m), "theorem:chordal")
    n = g.n
    if g.num_edges == n:
        k, _ = girth_and_count(g)
        if k % 2 == 1:
            return FormulaResult(chromatic_value(g, m), "theorem:onecycle(i)")
        if m < 2:
            return FormulaResult(None, "theorem:onecycle(ii) needs m >= 2")
        return FormulaResult((m - 1) ** n - (m - 1) ** (n - k), "theorem:onecycle(ii)")
    shape = theta_shape(g)
    if shape is not None:
        a, b = shape
        if a % 2 == 1 and b % 2 == 1:
            return FormulaResult(chromatic_value(g, m), "theorem:cyclepluschord(i)")
        if a % 2 == 0 and b % 2 == 0:
            if m < 3:
                return FormulaResult(None, "theorem:cyclepluschord(ii) needs m >= 3")
            k, l = (a - 2) // 2, (b - 2) // 2
            q = m - 1
            num = q ** (2 * k + 2 * l + 3) - q ** (2 * l + 1) - q ** (2 * k + 1) - m - 1
            return FormulaResult(_exact_div(num, m), "theorem:cyclepluschord(ii)")
        if m < 2:
            return FormulaResult(None, "theorem:cyclepluschord(iii) needs m >= 2")
        odd, even = (a, b) if a % 2 == 1 else (b, a)
        k, l = (odd - 1) // 2, (even - 2) // 2
        q = m - 1
        num = q ** (2 * k + 2 * l + 2) - q ** (2 * k) - q ** (2 * l + 2) + 1
        return FormulaResult(_exact_div(num, m), "theorem:cyclepluschord(iii)")
    return FormulaResult(None, "no closed form for this graph")


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def dp_value(g: Graph, m: int, budget: int = DEFAULT_BUDGET, workers: int = 1):
    """Best available ``P_DP(g, m)``: ``(value, provenance, exact_result_or_None)``.

    Uses the closed form and the exhaustive sweep whenever each is available;
    when both are, they must agree and the provenance is ``"both"``.
    """
    formula = dp_formula(g, m)
    exact = None
    if required_configurations(g, m) <= budget:
        exact = dp_exact(g, m, budget=budget, workers=workers)
    if exact is not None and formula:
        if exact.minimum != formula.value:
            raise AssertionError(
                f"{formula.provenance} gives {formula.value} but exhaustive search gives {exact.minimum}"
            )
        return exact.minimum, "both", exact
    if exact is not None:
        return exact.minimum, "exhaustive", exact
    if formula:
        return formula.value, formula.provenance, None
    raise BudgetExceeded(
        f"no closed form applies and exhaustive search needs "
        f"{required_configurations(g, m)} configurations (budget {budget})",
        required=required_configurations(g, m),
    )


# -- bounds -------------------------------------------------------------------


def greedy_lower_bound(g: Graph, m: int) -> int:
    """``prod (m - d_i)`` over the degeneracy ordering's back-degrees ``d_i``.

    Every cover admits at least this many colorings, provided ``m`` exceeds
    every back-degree.
    """
    order = degeneracy_ordering(g)
    if m <= max(order.back_degrees):
        raise ValueError(
            f"greedy bound needs m > {max(order.back_degrees)} (largest back-degree), got m={m}"
        )
    return math.prod(m - d for d in order.back_degrees)


@dataclass(frozen=True)
class BoundReport:
    greedy_lower: Optional[int]
    chromatic_upper: int
    monte_carlo_mean: Fraction
    expected_mean: Fraction
    standard_error: float
    min_sampled: int
    samples: int
    seed: int
    counts: tuple[int, ...] = field(repr=False, default=())

    @property
    def within_band(self) -> bool:
        """Sample mean within three standard errors of the exact expectation."""
        return abs(float(self.monte_carlo_mean - self.expected_mean)) <= 3 * self.standard_error

    def to_json(self) -> dict:
        return {
            "greedy_lower": self.greedy_lower,
            "chromatic_upper": self.chromatic_upper,
            "monte_carlo_mean": str(self.monte_carlo_mean),
            "monte_carlo_mean_float": float(self.monte_carlo_mean),
            "expected_mean": str(self.expected_mean),
            "standard_error": self.standard_error,
            "within_3se": self.within_band,
            "min_sampled": self.min_sampled,
            "samples": self.samples,
            "seed": self.seed,
        }


def monte_carlo_bound(g: Graph, m: int, samples: int, seed: int) -> BoundReport:
    """Sample uniformly random covers and compare the mean count with its expectation.

    The expectation is ``m**n * ((m-1)/m) ** |E|`` exactly.  The smallest
    sampled count is a certified upper bound on ``P_DP(g, m)``.  Covers are
    drawn in sequence from one PCG64 stream seeded with ``seed``.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    counts = tuple(count_colorings(random_cover(g, m, rng)) for _ in range(samples))
    total = sum(counts)
    mean = Fraction(total, samples)
    if samples > 1:
        var = (Fraction(sum(c * c for c in counts)) - samples * mean * mean) / (samples - 1)
        se = math.sqrt(var / samples)
    else:
        se = 0.0
    expected = Fraction(m**g.n * (m - 1) ** g.num_edges, m**g.num_edges)
    try:
        lower = greedy_lower_bound(g, m)
    except ValueError:
        lower = None
    return BoundReport(
        greedy_lower=lower,
        chromatic_upper=chromatic_value(g, m),
        monte_carlo_mean=mean,
        expected_mean=expected,
        standard_error=se,
        min_sampled=min(counts),
        samples=samples,
        seed=seed,
        counts=counts,
    )


# -- edge and path deletion ---------------------------------------------------


def _edge_terms(g: Graph, m: int, e: Sequence[int]) -> tuple[int, int, Fraction, Fraction]:
    if m < 2:
        raise ValueError("edge-deletion bound needs m >= 2")
    without = chromatic_value(g.without_edges([e]), m)
    with_e = chromatic_value(g, m)
    return without, with_e, Fraction(without - with_e), Fraction(with_e, m - 1)


def edge_delete_extremal_value(g: Graph, m: int, e: Sequence[int]) -> int:
    """``P(G-e, m) - max{P(G-e, m) - P(G, m), P(G, m)/(m-1)}`` as an exact integer.

    This is the coloring count of the extremal cover returned by
    :func:`edge_delete_extremal_cover`.
    """
    without, _, first, second = _edge_terms(g, m, e)
    value = without - max(first, second)
    if value.denominator != 1:
        raise ArithmeticError(f"extremal value {value} is not an integer")
    return int(value)


def edge_delete_extremal_cover(g: Graph, m: int, e: Sequence[int]) -> Cover:
    """The cover attaining :func:`edge_delete_extremal_value`.

    Identity matching on ``e`` when ``P(G-e) - P(G) >= P(G)/(m-1)``, the
    cyclic shift otherwise; identity on every other edge.
    """
    _, _, first, second = _edge_terms(g, m, e)
    if first >= second:
        return identity_cover(g, m)
    return twisted_edge_cover(g, m, e)


def strict_gap_witness(g: Graph, m: int) -> Optional[tuple[tuple[int, int], int]]:
    """First edge ``e`` (sorted order) with ``P(G-e, m) < m/(m-1) P(G, m)``.

    Returns ``(e, P(G-e, m) - P(G, m)/(m-1))``; that value is the count of
    the twisted cover on ``e`` and is strictly below ``P(G, m)``.
    """
    if m < 2:
        raise ValueError("strict gap search needs m >= 2")
    for e in g.edges:
        without, with_e, _, second = _edge_terms(g, m, e)
        if without * (m - 1) < m * with_e:
            value = without - second
            if value.denominator != 1:
                raise ArithmeticError(f"twisted-cover value {value} is not an integer")
            return e, int(value)
    return None


@dataclass(frozen=True)
class PathDeleteQuantities:
    p_g0: int
    p_g: int
    p_g1: int
    p_g2: int
    p_gstar: int
    A: tuple[Fraction, ...]
    predicted: tuple[int, ...]

    @property
    def max_case(self) -> int:
        """1-based index of the largest ``A_i`` (first on ties)."""
        best = max(self.A)
        return self.A.index(best) + 1

    @property
    def bound(self) -> int:
        return self.predicted[self.max_case - 1]


def path_delete_quantities(g: Graph, m: int, a1: int, a2: int, a3: int) -> PathDeleteQuantities:
    """The five loss terms ``A_1..A_5`` for the path ``a1-a2-a3`` and the counts
    ``P(G_0, m) - A_i`` they predict for the matching path-case covers.

    ``G_0`` drops both path edges, ``G_1`` drops ``a1a2``, ``G_2`` drops
    ``a2a3`` and ``G*`` adds ``a1a3``.
    """
    if m < 3:
        raise ValueError("path-deletion quantities need m >= 3")
    if len({a1, a2, a3}) != 3 or not (g.has_edge(a1, a2) and g.has_edge(a2, a3)):
        raise GraphError(f"{a1}-{a2}-{a3} is not a path in the graph")
    if g.has_edge(a1, a3):
        raise GraphError(f"{a1} and {a3} must be non-adjacent")
    e1, e2 = (a1, a2), (a2, a3)
    p0 = chromatic_value(g.without_edges([e1, e2]), m)
    p = chromatic_value(g, m)
    p1 = chromatic_value(g.without_edges([e1]), m)
    p2 = chromatic_value(g.without_edges([e2]), m)
    ps = chromatic_value(g.with_edges([(a1, a3)]), m)
    inv1 = Fraction(1, m - 1)
    A = (
        Fraction(p0 - p),
        p0 - p2 + inv1 * p,
        p0 - p1 + inv1 * p,
        inv1 * (p1 + p2 + ps - p),
        inv1 * (p1 + p2 - Fraction(ps, m - 2)),
    )
    predicted = []
    for i, a in enumerate(A, start=1):
        value = p0 - a
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"case {i} predicts a non-count {value}")
        predicted.append(int(value))
    return PathDeleteQuantities(p0, p, p1, p2, ps, A, tuple(predicted))


# -- joins ----------------------------------------------------------------------


def join_lower_bound(
    g: Graph,
    p: int,
    m: int,
    dp_inner: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Lower bound on ``P_DP(K_p v G, m)``.

    ``min{P(K_p v G, m), m(m-1)..(m-p+1) P_DP(G, m-p) + f_p(m)}`` with
    ``f_1(m) = 2 (m - col(G) - 2) ** (n - 2)`` and
    ``f_p(m) = m f_{p-1}(m-1) + 2 (m - col(K_{p-1} v G) - 2) ** (n - 3 + p)``.
    ``dp_inner`` is ``P_DP(G, m-p)``; if omitted it comes from
    :func:`dp_value`.
    """
    if p < 1:
        raise ValueError("join size must be at least 1")
    col = degeneracy_ordering(g).coloring_number
    if col < 3:
        raise ValueError(f"join bound needs col(G) >= 3, got {col}")
    if m < col + 2 + p:
        raise ValueError(f"join bound needs m >= col(G) + 2 + p = {col + 2 + p}, got m={m}")
    if dp_inner is None:
        dp_inner, _, _ = dp_value(g, m - p, budget=budget)
    n = g.n

    def f(level: int, x: int) -> int:
        if level == 1:
            return 2 * (x - col - 2) ** (n - 2)
        inner_col = degeneracy_ordering(join_with_complete(g, level - 1)).coloring_number
        return x * f(level - 1, x - 1) + 2 * (x - inner_col - 2) ** (n - 3 + level)

    ff = falling_factorial(p)(m)
    chromatic_join = ff * chromatic_value(g, m - p)
    return min(chromatic_join, ff * dp_inner + f(p, m))


def default_budget() -> int:
    """Budget from ``DPCOLOR_BUDGET`` if set, else :data:`DEFAULT_BUDGET`."""
    return int(os.environ.get("DPCOLOR_BUDGET", DEFAULT_BUDGET))
