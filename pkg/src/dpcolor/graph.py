"""Simple undirected graphs and the structural queries the coloring code needs.

Vertices are the integers ``0..n-1`` and every edge is stored as a pair
``(u, v)`` with ``u < v``.  Graphs are immutable; every constructor returns a
new object.

Family spec strings
-------------------
``path:N``            path on N vertices
``cycle:N``           cycle on N vertices (N >= 3)
``complete:N``        complete graph K_N
``theta:A,B``         cycles of lengths A and B sharing exactly one edge
``unicyclic:K;P,..``  cycle C_K, then one new vertex per parent id P
                      (vertex K+i hangs off parent P_i, which must be smaller)
``tree:P,..``         vertex i+1 hangs off parent P_i
``edges:N;U-V,..``    explicit edge list on N vertices
``join:KP,SPEC``      K_P joined with the graph described by SPEC
``file:PATH``         text edge-list file (``n e`` then ``u v`` lines)
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "EliminationOrdering",
    "DegeneracyOrdering",
    "path",
    "cycle",
    "complete",
    "theta",
    "unicyclic",
    "tree_from_parents",
    "from_edges",
    "build_family",
    "parse_edge_list",
    "format_edge_list",
    "clique_sum",
    "join_with_complete",
    "girth_and_count",
    "degeneracy_ordering",
    "chordal_peo",
    "is_peo",
]


class GraphError(ValueError):
    """Raised for malformed graphs, family specs, or violated preconditions."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Unordered vertex pairs.  They are normalised to ``u < v`` and sorted.
        Loops and duplicate edges raise :class:`GraphError`.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        seen: set[tuple[int, int]] = set()
        for pair in edges:
            u, v = (int(x) for x in pair)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            key = _norm(u, v)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in seen:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for a, b in itertools.combinations(vs, 2))

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def cyclomatic_number(self) -> int:
        """``|E| - |V| + c`` where ``c`` is the number of components."""
        return self.num_edges - self.n + len(self.components())

    def is_forest(self) -> bool:
        return self.cyclomatic_number() == 0

    def bfs_tree_edges(self, root: int = 0) -> list[tuple[int, int, int]]:
        """Edges of the BFS spanning tree from ``root`` as ``(parent, child, depth)``.

        Neighbors are visited in increasing id order, so the tree is canonical.
        Only the component of ``root`` is covered.
        """
        depth = {root: 0}
        out = []
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(self.adjacency[u]):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    out.append((u, w, depth[w]))
                    queue.append(w)
        return out

    def without_edges(self, removed: Iterable[Sequence[int]]) -> "Graph":
        drop = {_norm(*e) for e in removed}
        missing = drop - set(self.edges)
        if missing:
            raise GraphError(f"edges {sorted(missing)} are not in the graph")
        return Graph(self.n, [e for e in self.edges if e not in drop])

    def with_edges(self, added: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + [tuple(e) for e in added])

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph with vertex ``order[i]`` renamed to ``i``."""
        pos = {v: i for i, v in enumerate(order)}
        return Graph(len(order), [(pos[u], pos[v]) for u, v in self.edges])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        keep = sorted(vertices)
        pos = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos],
        )


@dataclass(frozen=True)
class EliminationOrdering:
    """A vertex ordering with ``alphas[i]`` = number of later neighbors of ``order[i]``."""

    order: tuple[int, ...]
    alphas: tuple[int, ...]
    perfect: bool


@dataclass(frozen=True)
class DegeneracyOrdering:
    """A vertex ordering with ``back_degrees[i]`` = earlier neighbors of ``order[i]``."""

    order: tuple[int, ...]
    back_degrees: tuple[int, ...]
    coloring_number: int


# -- constructors -------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph(n, itertools.combinations(range(n), 2))


def theta(a: int, b: int) -> Graph:
    """Cycles of lengths ``a`` and ``b`` glued along the edge ``(0, 1)``.

    The first cycle is ``0, 1, 2, .., a-1``; the second adds ``b - 2`` new
    vertices running from vertex 1 back to vertex 0.
    """
    if a < 3 or b < 3:
        raise GraphError("theta needs both cycle lengths >= 3")
    return clique_sum(cycle(a), cycle(b), {0: 0, 1: 1})


def unicyclic(k: int, parents: Sequence[int] = ()) -> Graph:
    """Cycle ``C_k`` plus a tree grown by hanging vertex ``k+i`` off ``parents[i]``."""
    if k < 3:
        raise GraphError("unicyclic graph needs a cycle of length >= 3")
    edges = list(cycle(k).edges)
    for i, p in enumerate(parents):
        child = k + i
        if not 0 <= p < child:
            raise GraphError(f"parent {p} of vertex {child} must be an earlier vertex")
        edges.append((p, child))
    return Graph(k + len(parents), edges)


def tree_from_parents(parents: Sequence[int]) -> Graph:
    """Tree where vertex ``i+1`` hangs off ``parents[i]``."""
    edges = []
    for i, p in enumerate(parents):
        if not 0 <= p <= i:
            raise GraphError(f"parent {p} of vertex {i + 1} must be an earlier vertex")
        edges.append((p, i + 1))
    return Graph(len(parents) + 1, edges)


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, edges)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise GraphError(f"expected comma-separated integers, got {text!r}") from exc


def build_family(spec: str) -> Graph:
    """Build a graph from a family spec string (see module docstring)."""
    kind, sep, arg = spec.strip().partition(":")
    if not sep:
        raise GraphError(f"family spec {spec!r} has no ':'")
    kind = kind.lower()
    if kind == "file":
        return parse_edge_list(Path(arg).read_text())
    if kind == "join":
        head, sep, rest = arg.partition(",")
        if not sep or not head.upper().startswith("K"):
            raise GraphError(f"join spec must look like 'join:K1,cycle:4', got {spec!r}")
        return join_with_complete(build_family(rest), int(head[1:]))
    if kind == "unicyclic":
        k, _, tail = arg.partition(";")
        return unicyclic(int(k), _ints(tail))
    if kind == "tree":
        return tree_from_parents(_ints(arg))
    if kind == "edges":
        n, _, tail = arg.partition(";")
        pairs = []
        for tok in filter(None, (t.strip() for t in tail.split(","))):
            u, dash, v = tok.partition("-")
            if not dash:
                raise GraphError(f"edge token {tok!r} must look like 'u-v'")
            pairs.append((int(u), int(v)))
        return Graph(int(n), pairs)
    nums = _ints(arg)
    builders = {"path": path, "cycle": cycle, "complete": complete, "theta": theta}
    if kind not in builders:
        raise GraphError(f"unknown graph family {kind!r}")
    arity = 2 if kind == "theta" else 1
    if len(nums) != arity:
        raise GraphError(f"{kind} takes {arity} integer argument(s), got {arg!r}")
    return builders[kind](*nums)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n e`` followed by ``e`` lines of ``u v``; ``#`` starts a comment."""
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or len(lines[0]) != 2:
        raise GraphError("edge-list header must be 'n e'")
    n, e = (int(x) for x in lines[0])
    body = lines[1:]
    if len(body) != e:
        raise GraphError(f"header announces {e} edges but {len(body)} follow")
    pairs = []
    for ln in body:
        if len(ln) != 2:
            raise GraphError(f"bad edge line {' '.join(ln)!r}")
        pairs.append((int(ln[0]), int(ln[1])))
    return Graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.num_edges}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def clique_sum(g1: Graph, g2: Graph, identification: dict[int, int]) -> Graph:
    """Glue ``g2`` onto ``g1`` along a shared clique.

    ``identification`` maps vertices of ``g2`` to the vertices of ``g1`` they
    are identified with.  The remaining vertices of ``g2`` are appended after
    those of ``g1`` in increasing order.
    """
    if not identification:
        raise GraphError("clique-sum needs a nonempty shared vertex set")
    if len(set(identification.values())) != len(identification):
        raise GraphError("identification must be injective")
    if not g2.is_clique(identification) or not g1.is_clique(identification.values()):
        raise GraphError("identified vertices must induce a clique in both graphs")
    mapping = dict(identification)
    nxt = g1.n
    for v in range(g2.n):
        if v not in mapping:
            mapping[v] = nxt
            nxt += 1
    edges = set(g1.edges)
    edges.update(_norm(mapping[u], mapping[v]) for u, v in g2.edges)
    return Graph(nxt, edges)


def join_with_complete(g: Graph, p: int) -> Graph:
    """``K_p`` joined with ``g``; the new vertices are ``n..n+p-1``."""
    if p < 1:
        raise GraphError("join size must be positive")
    new = range(g.n, g.n + p)
    edges = list(g.edges)
    edges += [(v, w) for w in new for v in range(g.n)]
    edges += list(itertools.combinations(new, 2))
    return Graph(g.n + p, edges)


# -- structural queries -------------------------------------------------------


def girth_and_count(g: Graph) -> tuple[float | int, int]:
    """Length of a shortest cycle and the number of cycles of that length.

    Returns ``(math.inf, 0)`` for forests.
    """
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    if best == math.inf:
        return math.inf, 0
    length = int(best)

    # each cycle is rooted at its smallest vertex and walked both ways
    count = 0

    def walk(start: int, u: int, depth: int, used: set[int]) -> None:
        nonlocal count
        for w in g.adjacency[u]:
            if w == start and depth == length:
                count += 1
            elif w > start and w not in used and depth < length:
                used.add(w)
                walk(start, w, depth + 1, used)
                used.discard(w)

    for s in range(g.n):
        walk(s, s, 1, {s})
    return length, count // 2


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """Smallest-last ordering: peel a minimum-degree vertex, then reverse.

    Ties go to the smallest vertex id.  Each vertex ends up with at most
    ``degeneracy`` neighbors before it, which is optimal.
    """
    if g.n < 1:
        raise GraphError("degeneracy ordering needs at least one vertex")
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    peeled = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        peeled.append(v)
        alive.remove(v)
        for w in g.adjacency[v]:
            if w in alive:
                deg[w] -= 1
    order = tuple(reversed(peeled))
    pos = {v: i for i, v in enumerate(order)}
    back = tuple(sum(1 for w in g.adjacency[v] if pos[w] < i) for i, v in enumerate(order))
    return DegeneracyOrdering(order, back, 1 + max(back))


def _later_alphas(g: Graph, order: Sequence[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sum(1 for w in g.adjacency[v] if pos[w] > i) for i, v in enumerate(order))


def is_peo(g: Graph, order: Sequence[int]) -> bool:
    """True when every vertex's later neighbors form a clique."""
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = [w for w in g.adjacency[v] if pos[w] > i]
        if not g.is_clique(later):
            return False
    return True


def chordal_peo(g: Graph) -> Optional[EliminationOrdering]:
    """Perfect elimination ordering via maximum cardinality search, or None.

    MCS visits vertices by most already-visited neighbors (ties to the
    smallest id); the reverse visit order is a PEO exactly when ``g`` is
    chordal, and the result is checked explicitly before returning.
    """
    weight = [0] * g.n
    unvisited = set(range(g.n))
    visit = []
    while unvisited:
        v = min(unvisited, key=lambda x: (-weight[x], x))
        visit.append(v)
        unvisited.remove(v)
        for w in g.adjacency[v]:
            if w in unvisited:
                weight[w] += 1
    order = tuple(reversed(visit))
    if not is_peo(g, order):
        return None
    return EliminationOrdering(order, _later_alphas(g, order), True)
