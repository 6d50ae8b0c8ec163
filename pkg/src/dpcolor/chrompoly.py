"""Exact chromatic polynomials.

Polynomials are kept as tuples of Python integers (``coeffs[i]`` multiplies
``m**i``) so that nothing ever touches floating point.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import EliminationOrdering, Graph, GraphError, is_peo

__all__ = [
    "IntPolynomial",
    "BudgetExceeded",
    "chromatic_polynomial",
    "eval_poly",
    "chordal_product_poly",
    "clique_sum_poly",
    "falling_factorial",
    "broken_circuit_coeffs",
    "chromatic_number",
    "signed_coefficients",
    "chromatic_value",
]

DEFAULT_NODE_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    """A search would need more work than the caller allowed."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in ``m``; ``coeffs[i]`` is the coefficient of ``m**i``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """The factor ``m - root``."""
        return cls([-root, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, m: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * m + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "IntPolynomial":
        """The polynomial ``m -> self(m - k)``."""
        out = IntPolynomial()
        base = IntPolynomial.linear(k)
        for c in reversed(self.coeffs):
            out = out * base + IntPolynomial([c])
        return out

    def divide_linear(self, root: int) -> "IntPolynomial":
        """Exact quotient by ``m - root``; raises ``ValueError`` on a remainder."""
        if not self.coeffs:
            return IntPolynomial()
        quotient = []
        carry = 0
        for c in reversed(self.coeffs):
            carry = carry * root + c
            quotient.append(carry)
        remainder = quotient.pop()
        if remainder != 0:
            raise ValueError(f"m - {root} does not divide the polynomial (remainder {remainder})")
        return IntPolynomial(reversed(quotient))

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict | str) -> "IntPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(c) for c in data["coeffs"])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = {0: f"{mag}", 1: "m"}.get(i, f"m^{i}")
            if i and mag != 1:
                body = f"{mag}*{body}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def eval_poly(p: IntPolynomial, m: int) -> int:
    return p(m)


def falling_factorial(k: int) -> IntPolynomial:
    """``m (m-1) ... (m-k+1)``."""
    out = IntPolynomial([1])
    for i in range(k):
        out = out * IntPolynomial.linear(i)
    return out


# -- deletion-contraction -----------------------------------------------------

Edges = tuple[tuple[int, int], ...]


def _components(n: int, edges: Edges) -> int:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def _canonical(n: int, edges: Iterable[tuple[int, int]]) -> tuple[int, Edges]:
    """Orient and sort edges so equal subproblems share a memo key."""
    es = sorted({(u, v) if u < v else (v, u) for u, v in edges})
    return n, tuple(es)


def _is_cycle(n: int, edges: Edges) -> bool:
    if n < 3 or len(edges) != n:
        return False
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return all(d == 2 for d in deg) and _components(n, edges) == 1


def _non_bridge(n: int, edges: Edges) -> tuple[int, int]:
    """An edge lying on a cycle (exists whenever the graph is not a forest)."""
    for i, e in enumerate(edges):
        rest = edges[:i] + edges[i + 1 :]
        if _components(n, rest) == _components(n, edges):
            return e
    raise AssertionError("forest has no edge on a cycle")


def _contract(n: int, edges: Edges, u: int, v: int) -> tuple[int, Edges]:
    # merge v into u, then renumber so vertices stay 0..n-2
    def ren(x: int) -> int:
        x = u if x == v else x
        return x - 1 if x > v else x

    merged = set()
    for a, b in edges:
        if (a, b) == (u, v):
            continue
        a2, b2 = ren(a), ren(b)
        if a2 != b2:
            merged.add((a2, b2) if a2 < b2 else (b2, a2))
    return _canonical(n - 1, merged)


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(
                f"deletion-contraction exceeded its node budget of {self.limit}",
                required=None,
            )


_CYCLE_CACHE: dict[int, IntPolynomial] = {}
_M1 = IntPolynomial.linear(1)


def _forest_poly(n: int, n_edges: int) -> IntPolynomial:
    comps = n - n_edges
    return IntPolynomial([0] * comps + [1]) * (_M1**n_edges)


def _cycle_poly(n: int) -> IntPolynomial:
    if n not in _CYCLE_CACHE:
        _CYCLE_CACHE[n] = _M1**n + _M1 * (-1) ** n
    return _CYCLE_CACHE[n]


def _dc(n: int, edges: Edges, budget: _Budget, shortcuts: bool, memo: dict) -> IntPolynomial:
    key = (n, edges)
    if key in memo:
        return memo[key]
    budget.tick()
    comps = _components(n, edges)
    if not edges:
        result = IntPolynomial([0] * n + [1])
    elif shortcuts and len(edges) == n - comps:
        result = _forest_poly(n, len(edges))
    elif shortcuts and len(edges) == n * (n - 1) // 2:
        result = falling_factorial(n)
    elif shortcuts and _is_cycle(n, edges):
        result = _cycle_poly(n)
    else:
        if len(edges) == n - comps:
            u, v = edges[0]
        else:
            u, v = _non_bridge(n, edges)
        rest = tuple(e for e in edges if e != (u, v))
        deleted = _dc(n, rest, budget, shortcuts, memo)
        cn, ce = _contract(n, edges, u, v)
        contracted = _dc(cn, ce, budget, shortcuts, memo)
        result = deleted - contracted
    memo[key] = result
    return result


def chromatic_polynomial(
    g: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET, shortcuts: bool = True
) -> IntPolynomial:
    """Chromatic polynomial of ``g`` by deletion-contraction.

    Forests, complete graphs and cycles are recognised and short-circuited
    to their closed forms unless ``shortcuts`` is False, in which case the
    recursion runs all the way down to edgeless graphs.  Otherwise the
    recursion always splits on an edge that lies on a cycle.

    Raises
    ------
    BudgetExceeded
        If more than ``node_budget`` distinct subproblems are visited.
    """
    if g.n < 1:
        raise GraphError("chromatic polynomial needs at least one vertex")
    return _chromatic_cached(g.n, g.edges, node_budget, shortcuts)


@lru_cache(maxsize=4096)
def _chromatic_cached(n: int, edges: Edges, node_budget: int, shortcuts: bool) -> IntPolynomial:
    return _dc(n, edges, _Budget(node_budget), shortcuts, {})


def chromatic_value(g: Graph, m: int) -> int:
    """``P(g, m)``; the empty graph on zero vertices has exactly one coloring."""
    if g.n == 0:
        return 1
    return chromatic_polynomial(g)(m)


def chordal_product_poly(peo: EliminationOrdering, g: Graph | None = None) -> IntPolynomial:
    """``prod (m - alpha_i)`` over a perfect elimination ordering.

    When ``g`` is given the ordering is re-verified against it.
    """
    if not peo.perfect or (g is not None and not is_peo(g, peo.order)):
        raise GraphError("ordering is not a perfect elimination ordering")
    out = IntPolynomial([1])
    for a in peo.alphas:
        out = out * IntPolynomial.linear(a)
    return out


def clique_sum_poly(p1: IntPolynomial, p2: IntPolynomial, k: int) -> IntPolynomial:
    """``p1 * p2 / (m (m-1) ... (m-k+1))``, dividing one linear factor at a time.

    Raises ``ValueError`` if any division leaves a remainder.
    """
    if k < 1:
        raise ValueError("clique size must be positive")
    out = p1 * p2
    for i in range(k):
        out = out.divide_linear(i)
    return out


def broken_circuit_coeffs(s: int, g: int, t: int) -> list[int]:
    """Predicted ``a_0..a_{g-1}`` for a connected graph with ``s`` edges, girth ``g``
    and ``t`` girth cycles, where ``P = sum (-1)^i a_i m^(n-i)``."""
    if not isinstance(g, int) or g < 3:
        raise ValueError(f"girth must be a finite integer >= 3, got {g}")
    if s < g:
        raise ValueError(f"a graph with girth {g} has at least {g} edges, got {s}")
    if t < 1:
        raise ValueError("girth-cycle count must be at least 1")
    out = [math.comb(s, i) for i in range(g - 1)]
    out.append(math.comb(s, g - 1) - t)
    return out


def signed_coefficients(p: IntPolynomial) -> list[int]:
    """``a_0..a_n`` with ``p = sum (-1)^i a_i m^(n-i)``."""
    n = p.degree
    return [(-1) ** i * p.coeffs[n - i] for i in range(n + 1)]


def chromatic_number(p: IntPolynomial) -> int:
    for m in range(1, p.degree + 2):
        if p(m) > 0:
            return m
    raise ValueError("polynomial is positive at no m <= degree + 1; not a chromatic polynomial")


def poly_from_roots(roots: Sequence[int]) -> IntPolynomial:
    out = IntPolynomial([1])
    for r in roots:
        out = out * IntPolynomial.linear(r)
    return out
