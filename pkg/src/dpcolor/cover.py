"""m-fold covers of a graph and exact counting of their colorings.

A cover is stored as one permutation per edge.  For an edge ``(u, v)`` with
``u < v`` and permutation ``p``, fiber vertex ``(u, i)`` is matched to
``(v, p[i])``.  Fibers are implicit cliques, so a coloring of the cover is an
index assignment ``j`` with ``p[j(u)] != j(v)`` on every edge.

Only covers whose cross-matchings are perfect are representable.  Adding
matching edges can only remove colorings, so the minimum over these covers is
the DP color function.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .graph import Graph, GraphError, degeneracy_ordering

__all__ = [
    "Cover",
    "identity_cover",
    "twisted_edge_cover",
    "path_case_cover",
    "random_cover",
    "gauge_normalize",
    "count_colorings",
    "brute_force_count",
    "shift",
    "identity",
    "inverse",
    "compose",
    "RNG_ALGORITHM",
]

RNG_ALGORITHM = "numpy PCG64 (numpy.random.default_rng)"

Perm = tuple[int, ...]


def identity(m: int) -> Perm:
    return tuple(range(m))


def shift(m: int, by: int = 1) -> Perm:
    """``i -> i + by (mod m)``."""
    return tuple((i + by) % m for i in range(m))


def inverse(p: Sequence[int]) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def compose(outer: Sequence[int], inner: Sequence[int]) -> Perm:
    """``i -> outer[inner[i]]``."""
    return tuple(outer[x] for x in inner)


@dataclass(frozen=True)
class Cover:
    """An m-fold cover with perfect matchings over every edge of ``graph``.

    ``perms[k]`` belongs to ``graph.edges[k]``.
    """

    graph: Graph
    m: int
    perms: tuple[Perm, ...]

    def __post_init__(self):
        if self.m < 0:
            raise GraphError("fold size must be nonnegative")
        if len(self.perms) != self.graph.num_edges:
            raise GraphError(
                f"cover has {len(self.perms)} permutations for {self.graph.num_edges} edges"
            )
        target = list(range(self.m))
        for e, p in zip(self.graph.edges, self.perms):
            if sorted(p) != target:
                raise GraphError(f"permutation {p} on edge {e} is not a bijection of [0, {self.m})")

    @classmethod
    def from_mapping(cls, g: Graph, m: int, sigma: Mapping[tuple[int, int], Sequence[int]]) -> "Cover":
        """Build from ``{(u, v): perm}``; keys with ``u > v`` carry the reverse matching."""
        table = {}
        for (u, v), p in sigma.items():
            p = tuple(int(x) for x in p)
            if u > v:
                u, v, p = v, u, inverse(p)
            table[(u, v)] = p
        missing = [e for e in g.edges if e not in table]
        extra = [e for e in table if e not in set(g.edges)]
        if missing or extra:
            raise GraphError(f"permutation map does not match the edges (missing {missing}, extra {extra})")
        return cls(g, m, tuple(table[e] for e in g.edges))

    @property
    def sigma(self) -> dict[tuple[int, int], Perm]:
        return dict(zip(self.graph.edges, self.perms))

    def perm(self, u: int, v: int) -> Perm:
        """Matching read from ``u``'s fiber into ``v``'s fiber."""
        if u < v:
            return self.perms[self.graph.edges.index((u, v))]
        return inverse(self.perms[self.graph.edges.index((v, u))])

    def with_perm(self, u: int, v: int, p: Sequence[int]) -> "Cover":
        """Copy with the matching on edge ``uv`` replaced (``p`` read from ``u`` to ``v``)."""
        p = tuple(p)
        if u > v:
            u, v, p = v, u, inverse(p)
        k = self.graph.edges.index((u, v))
        return Cover(self.graph, self.m, self.perms[:k] + (p,) + self.perms[k + 1 :])

    def cover_edges(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Cross edges of the cover graph as pairs of fiber vertices."""
        return [((u, i), (v, p[i])) for (u, v), p in zip(self.graph.edges, self.perms) for i in range(self.m)]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "edges": [{"u": u, "v": v, "perm": list(p)} for (u, v), p in zip(self.graph.edges, self.perms)],
        }

    @classmethod
    def from_json(cls, data: dict | str, g: Graph | None = None) -> "Cover":
        """Parse the JSON form; without ``g`` the graph is rebuilt from the edge entries."""
        if isinstance(data, str):
            data = json.loads(data)
        m = int(data["m"])
        sigma = {(int(e["u"]), int(e["v"])): e["perm"] for e in data["edges"]}
        if g is None:
            n = int(data.get("n", 1 + max((max(k) for k in sigma), default=-1)))
            g = Graph(n, sigma.keys())
        return cls.from_mapping(g, m, sigma)


# -- constructions ------------------------------------------------------------


def identity_cover(g: Graph, m: int) -> Cover:
    """Every matching is ``(u, j) ~ (v, j)``; colorings are proper m-colorings."""
    if m < 1:
        raise GraphError("fold size must be at least 1")
    return Cover(g, m, tuple(identity(m) for _ in g.edges))


def _edge_key(g: Graph, e: Sequence[int]) -> tuple[int, int]:
    u, v = e
    key = (u, v) if u < v else (v, u)
    if key not in g.edges:
        raise GraphError(f"{tuple(e)} is not an edge of the graph")
    return key


def twisted_edge_cover(g: Graph, m: int, e: Sequence[int]) -> Cover:
    """Identity everywhere except ``e = (u, v)``, where ``(u, j) ~ (v, j+1 mod m)``.

    ``u`` is the smaller endpoint.
    """
    if m < 2:
        raise GraphError("twisted cover needs m >= 2")
    key = _edge_key(g, e)
    return identity_cover(g, m).with_perm(*key, shift(m))


# case -> (alpha1 -> alpha2 shift, alpha2 -> alpha3 shift)
_PATH_CASES = {1: (0, 0), 2: (0, 1), 3: (1, 0), 4: (1, -1), 5: (1, 1)}


def path_case_cover(g: Graph, m: int, a1: int, a2: int, a3: int, case_id: int) -> Cover:
    """Identity cover with the two path edges twisted so every 3-vertex path
    ``(a1, j), (a2, t), (a3, r)`` of the matching follows one pattern:

    1. ``j = t = r``
    2. ``j = t != r``
    3. ``j != t = r``
    4. ``j = r != t``
    5. ``j, t, r`` pairwise distinct
    """
    if m < 3:
        raise GraphError("path-case covers need m >= 3")
    if case_id not in _PATH_CASES:
        raise GraphError(f"case_id must be in 1..5, got {case_id}")
    if len({a1, a2, a3}) != 3 or not (g.has_edge(a1, a2) and g.has_edge(a2, a3)):
        raise GraphError(f"{a1}-{a2}-{a3} is not a path in the graph")
    if g.has_edge(a1, a3):
        raise GraphError(f"{a1} and {a3} must be non-adjacent")
    s1, s2 = _PATH_CASES[case_id]
    return identity_cover(g, m).with_perm(a1, a2, shift(m, s1)).with_perm(a2, a3, shift(m, s2))


def random_cover(g: Graph, m: int, seed: int | np.random.Generator) -> Cover:
    """Independent uniform permutation on every edge, in sorted edge order.

    ``seed`` may be an integer (a fresh PCG64 stream) or a live generator.
    """
    if m < 1:
        raise GraphError("fold size must be at least 1")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return Cover(g, m, tuple(tuple(int(x) for x in rng.permutation(m)) for _ in g.edges))


def gauge_normalize(c: Cover) -> Cover:
    """Relabel fibers so the canonical BFS spanning tree carries identity matchings.

    The tree is rooted at vertex 0 with neighbors taken in increasing order.
    Relabeling a fiber is a cover isomorphism, so the coloring count is kept.
    """
    g = c.graph
    if not g.is_connected():
        raise GraphError("gauge normalisation needs a connected graph")
    m = c.m
    relabel: dict[int, Perm] = {0: identity(m)}
    for parent, child, _ in g.bfs_tree_edges(0):
        # new matching = relabel[child] o old o relabel[parent]^-1 must be identity
        relabel[child] = compose(relabel[parent], inverse(c.perm(parent, child)))
    perms = []
    for (u, v), p in zip(g.edges, c.perms):
        perms.append(compose(relabel[v], compose(p, inverse(relabel[u]))))
    return Cover(g, m, tuple(perms))


# -- counting -----------------------------------------------------------------


def count_colorings(c: Cover) -> int:
    """Number of colorings of the cover (independent transversals).

    Backtracks along the degeneracy ordering; each vertex sees at most its
    back-degree forbidden indices, and the last vertex is counted without
    branching.
    """
    g, m = c.graph, c.m
    if g.n == 0:
        return 1
    if m == 0:
        return 0
    order = degeneracy_ordering(g).order
    pos = {v: i for i, v in enumerate(order)}
    # constraints[i] = [(earlier position, table)] with table[j_earlier] = forbidden index
    constraints: list[list[tuple[int, Perm]]] = [[] for _ in order]
    for (u, v), p in zip(g.edges, c.perms):
        if pos[u] < pos[v]:
            constraints[pos[v]].append((pos[u], p))
        else:
            constraints[pos[u]].append((pos[v], inverse(p)))

    n = g.n
    chosen = [0] * n
    last = n - 1

    def rec(i: int) -> int:
        forbidden = {table[chosen[p]] for p, table in constraints[i]}
        if i == last:
            return m - len(forbidden)
        total = 0
        for j in range(m):
            if j not in forbidden:
                chosen[i] = j
                total += rec(i + 1)
        return total

    return rec(0)


def brute_force_count(c: Cover) -> int:
    """Count by checking all ``m**n`` assignments; an oracle for small covers."""
    g = c.graph
    total = 0
    for assign in itertools.product(range(c.m), repeat=g.n):
        if all(p[assign[u]] != assign[v] for (u, v), p in zip(g.edges, c.perms)):
            total += 1
    return total
