"""Named checks that pit each exact result against an independent computation.

Each check returns a :class:`CheckReport`.  A check never raises for a
failed comparison or an infeasible budget: both come back as reports with a
non-passing verdict, so a battery run surfaces every problem at once.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Any, Callable, Optional, Sequence

import numpy as np

from . import dpmin
from .chrompoly import BudgetExceeded, broken_circuit_coeffs, chromatic_polynomial, chromatic_value, signed_coefficients
from .cover import count_colorings, identity_cover, path_case_cover, random_cover, twisted_edge_cover
from .graph import (
    Graph,
    GraphError,
    chordal_peo,
    complete,
    cycle,
    degeneracy_ordering,
    girth_and_count,
    join_with_complete,
    path,
    theta,
    tree_from_parents,
    unicyclic,
)

__all__ = [
    "CheckReport",
    "STANDARD_BATTERY",
    "check_chordal_equality",
    "check_unicyclic",
    "check_theta",
    "check_lemma_ends",
    "check_broken_circuit",
    "check_path_delete",
    "check_edge_delete",
    "check_join_bound",
    "check_sandwich",
    "check_monte_carlo",
    "run_all",
    "format_table",
]

ENUMERATION_LIMIT = 2_000_000


@dataclass
class CheckReport:
    name: str
    params: dict
    expected: Any
    observed: Any
    provenance: str
    verdict: str  # "pass", "fail" or "error"
    runtime: float = 0.0
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> str:
        return json.dumps(asdict(self), default=str, sort_keys=True)


def _run(name: str, params: dict, body: Callable[[], tuple[Any, Any, str, bool, str]]) -> CheckReport:
    start = time.perf_counter()
    try:
        expected, observed, provenance, ok, detail = body()
        verdict = "pass" if ok else "fail"
    except AssertionError as exc:
        # closed form and exhaustive search disagreed inside dp_value
        expected, observed, provenance, verdict, detail = None, None, "", "fail", str(exc)
    except (BudgetExceeded, GraphError, ValueError, ArithmeticError) as exc:
        expected, observed, provenance, verdict, detail = None, None, "", "error", f"{type(exc).__name__}: {exc}"
    return CheckReport(name, params, expected, observed, provenance, verdict, time.perf_counter() - start, detail)


def _graph_label(g: Graph) -> str:
    for name, known in STANDARD_BATTERY.items():
        if known == g:
            return name
    return f"n={g.n} edges={list(g.edges)}"


# -- theorem checks -----------------------------------------------------------


def check_chordal_equality(g: Graph, m_max: int, budget: int = dpmin.DEFAULT_BUDGET) -> CheckReport:
    """Exhaustive minimum equals the chromatic polynomial for every m in 1..m_max."""

    def body():
        if chordal_peo(g) is None:
            raise GraphError("graph is not chordal")
        expected = [chromatic_value(g, m) for m in range(1, m_max + 1)]
        observed = [dpmin.dp_exact(g, m, budget=budget).minimum for m in range(1, m_max + 1)]
        return expected, observed, "chordal: P_DP = P", expected == observed, ""

    return _run("chordal_equality", {"graph": _graph_label(g), "m_max": m_max}, body)


def check_unicyclic(g: Graph, m: int, budget: int = dpmin.DEFAULT_BUDGET) -> CheckReport:
    """Exhaustive minimum equals the unicyclic closed form."""

    def body():
        if not g.is_connected() or g.num_edges != g.n:
            raise GraphError("graph is not unicyclic")
        k, _ = girth_and_count(g)
        if k % 2:
            expected, prov = chromatic_value(g, m), "onecycle(i): P(G,m)"
        else:
            expected, prov = (m - 1) ** g.n - (m - 1) ** (g.n - k), "onecycle(ii): (m-1)^n - (m-1)^(n-k)"
        observed = dpmin.dp_exact(g, m, budget=budget).minimum
        return expected, observed, prov, expected == observed, f"cycle length {k}"

    return _run("unicyclic", {"graph": _graph_label(g), "m": m}, body)


def check_theta(a: int, b: int, m: int, budget: int = dpmin.DEFAULT_BUDGET) -> CheckReport:
    """Exhaustive minimum on two cycles sharing an edge equals the parity formula."""

    def body():
        g = theta(a, b)
        formula = dpmin.dp_formula(g, m)
        if formula.value is None:
            raise ValueError(formula.provenance)
        observed = dpmin.dp_exact(g, m, budget=budget).minimum
        return formula.value, observed, formula.provenance, formula.value == observed, ""

    return _run("theta", {"a": a, "b": b, "m": m}, body)


def _enumerate_proper(g: Graph, m: int):
    if m**g.n > ENUMERATION_LIMIT:
        raise BudgetExceeded(f"{m}^{g.n} colorings exceed the enumeration limit", required=m**g.n)
    for assign in itertools.product(range(m), repeat=g.n):
        if all(assign[u] != assign[v] for u, v in g.edges):
            yield assign


def check_lemma_ends(g: Graph, e: Sequence[int], m: int) -> CheckReport:
    """Bucket proper colorings of ``G - e`` by the colors on ``e``'s ends."""

    def body():
        u, v = e
        buckets = Counter((c[u], c[v]) for c in _enumerate_proper(g.without_edges([e]), m))
        diag = {buckets.get((i, i), 0) for i in range(m)}
        off = {buckets.get((i, j), 0) for i in range(m) for j in range(m) if i != j}
        uniform = len(diag) == 1 and len(off) <= 1
        r = diag.pop() if len(diag) == 1 else None
        t = off.pop() if len(off) == 1 else 0
        p_minus = chromatic_value(g.without_edges([e]), m)
        p = chromatic_value(g, m)
        expected = {"m*r": p_minus - p, "m(m-1)*t": p}
        observed = {"m*r": None if r is None else m * r, "m(m-1)*t": m * (m - 1) * t}
        ok = uniform and expected == observed
        return expected, observed, "ends: mr = P(G-e) - P(G), m(m-1)t = P(G)", ok, f"r={r} t={t}"

    return _run("lemma_ends", {"graph": _graph_label(g), "edge": tuple(e), "m": m}, body)


def check_broken_circuit(g: Graph) -> CheckReport:
    """Leading coefficients of P(G, m) against the edge/girth prediction."""

    def body():
        if not g.is_connected():
            raise GraphError("graph must be connected")
        girth, t = girth_and_count(g)
        if girth == math.inf:
            raise GraphError("forest has no girth")
        expected = broken_circuit_coeffs(g.num_edges, girth, t)
        observed = signed_coefficients(chromatic_polynomial(g))[: girth]
        return expected, observed, f"a_i = C(s,i), a_(g-1) = C(s,g-1) - t (g={girth}, t={t})", expected == observed, ""

    return _run("broken_circuit", {"graph": _graph_label(g)}, body)


def check_path_delete(
    g: Graph, path_: Sequence[int], m: int, budget: int = dpmin.DEFAULT_BUDGET
) -> CheckReport:
    """Each path-case cover counts to ``P(G_0, m) - A_i``; when ``G_0`` is a
    forest the exhaustive minimum also equals ``P(G_0, m) - max A_i``."""

    def body():
        a1, a2, a3 = path_
        q = dpmin.path_delete_quantities(g, m, a1, a2, a3)
        counts = tuple(count_colorings(path_case_cover(g, m, a1, a2, a3, i)) for i in range(1, 6))
        expected = {"case_counts": list(q.predicted)}
        observed = {"case_counts": list(counts)}
        g0 = g.without_edges([(a1, a2), (a2, a3)])
        if g0.is_forest():
            expected["minimum"] = q.bound
            observed["minimum"] = dpmin.dp_exact(g, m, budget=budget).minimum
        detail = f"A={[str(a) for a in q.A]} max case {q.max_case}"
        return expected, observed, "path deletion", expected == observed, detail

    return _run("path_delete", {"graph": _graph_label(g), "path": tuple(path_), "m": m}, body)


def check_edge_delete(g: Graph, e: Sequence[int], m: int) -> CheckReport:
    """The extremal single-edge cover counts to the edge-deletion expression."""
    def body():
        expected = dpmin.edge_delete_extremal_value(g, m, e)
        p_minus = chromatic_value(g.without_edges([e]), m)
        p = chromatic_value(g, m)
        use_twist = (p_minus - p) * (m - 1) < p
        cover = twisted_edge_cover(g, m, e) if use_twist else identity_cover(g, m)
        observed = count_colorings(cover)
        detail = "twisted matching on e" if use_twist else "identity matching on e"
        return expected, observed, "edge deletion extremal cover", expected == observed, detail

    return _run("edge_delete", {"graph": _graph_label(g), "edge": tuple(e), "m": m}, body)


def check_join_bound(g: Graph, m: int, samples: int, seed: int, budget: int = dpmin.DEFAULT_BUDGET) -> CheckReport:
    """Every sampled cover of ``K_1 v G`` counts at least the join lower bound."""

    def body():
        bound = dpmin.join_lower_bound(g, 1, m, budget=budget)
        joined = join_with_complete(g, 1)
        rng = np.random.default_rng(seed)
        counts = [count_colorings(random_cover(joined, m, rng)) for _ in range(samples)]
        low = min(counts)
        return f">= {bound}", low, "join bound (p=1)", low >= bound, f"{samples} samples, min {low}"

    return _run("join_bound", {"graph": _graph_label(g), "m": m, "samples": samples, "seed": seed}, body)


def check_sandwich(g: Graph, m: int, budget: int = dpmin.DEFAULT_BUDGET) -> CheckReport:
    """greedy lower bound <= P_DP <= identity-cover count.

    P_DP comes from the exhaustive sweep when the budget allows, else from a
    closed form; the provenance records which.
    """

    def body():
        low = dpmin.greedy_lower_bound(g, m)
        mid, source, _ = dpmin.dp_value(g, m, budget=budget)
        high = count_colorings(identity_cover(g, m))
        return "lower <= P_DP <= P", [low, mid, high], f"P_DP via {source}", low <= mid <= high, ""

    return _run("sandwich", {"graph": _graph_label(g), "m": m}, body)


def check_monte_carlo(g: Graph, m: int, samples: int, seed: int, floor: Optional[int] = None) -> CheckReport:
    """Sample mean within 3 standard errors of the exact expectation; optional floor on the minimum."""

    def body():
        rep = dpmin.monte_carlo_bound(g, m, samples, seed)
        ok = rep.within_band and (floor is None or rep.min_sampled >= floor)
        observed = {"mean": str(rep.monte_carlo_mean), "se": rep.standard_error, "min": rep.min_sampled}
        return str(rep.expected_mean), observed, "random cover expectation", ok, ""

    return _run("monte_carlo", {"graph": _graph_label(g), "m": m, "samples": samples, "seed": seed}, body)


# -- battery ------------------------------------------------------------------


def _standard_battery() -> dict[str, Graph]:
    out: dict[str, Graph] = {}
    for n in range(2, 7):
        out[f"path:{n}"] = path(n)
    out["tree:0,0,0,1"] = tree_from_parents([0, 0, 0, 1])
    for n in range(3, 8):
        out[f"cycle:{n}"] = cycle(n)
    for n in range(3, 6):
        out[f"complete:{n}"] = complete(n)
    for a, b in [(3, 3), (3, 4), (4, 4), (3, 5)]:
        out[f"theta:{a},{b}"] = theta(a, b)
    out["unicyclic:4;0"] = unicyclic(4, [0])
    out["unicyclic:4;0,4"] = unicyclic(4, [0, 4])
    out["unicyclic:5;0"] = unicyclic(5, [0])
    out["join:K1,cycle:4"] = join_with_complete(cycle(4), 1)
    return out


STANDARD_BATTERY: dict[str, Graph] = _standard_battery()


def run_all(budget: int = dpmin.DEFAULT_BUDGET, seed: int = 0, mc_samples: int = 2000, join_samples: int = 200) -> list[CheckReport]:
    """Run the curated battery; every check is included, none is skipped."""
    B = STANDARD_BATTERY
    reports: list[CheckReport] = []
    for name in ["complete:3", "complete:4", "theta:3,3", "path:5", "tree:0,0,0,1"]:
        reports.append(check_chordal_equality(B[name], 3 if name != "complete:4" else 4, budget))
    for name in ["cycle:3", "cycle:4", "cycle:5", "cycle:6", "cycle:7", "unicyclic:4;0", "unicyclic:4;0,4", "unicyclic:5;0"]:
        for m in (2, 3):
            reports.append(check_unicyclic(B[name], m, budget))
    for a, b in [(3, 3), (3, 4), (4, 4), (3, 5)]:
        reports.append(check_theta(a, b, 3, budget))
    reports.append(check_theta(3, 3, 4, budget))
    for name in ["cycle:3", "cycle:4", "cycle:5", "theta:3,4", "path:2"]:
        g = B[name]
        reports.append(check_lemma_ends(g, g.edges[0], 3))
    for name in ["cycle:4", "cycle:5", "theta:3,4", "theta:4,4", "complete:4"]:
        reports.append(check_broken_circuit(B[name]))
    reports.append(check_path_delete(B["theta:3,4"], (0, 1, 3), 3, budget))
    reports.append(check_path_delete(B["theta:4,4"], (0, 1, 4), 3, budget))
    reports.append(check_path_delete(B["cycle:4"], (0, 1, 2), 3, budget))
    for n in range(3, 7):
        reports.append(check_edge_delete(B[f"cycle:{n}"], (0, 1), 3))
    for g in B.values():
        m = max(degeneracy_ordering(g).back_degrees) + 1
        reports.append(check_sandwich(g, max(m, 2), budget))
    reports.append(check_monte_carlo(B["cycle:4"], 3, mc_samples, seed, floor=15))
    reports.append(check_join_bound(B["cycle:4"], 6, join_samples, seed, budget))
    return reports


def format_table(reports: Sequence[CheckReport]) -> str:
    rows = [("verdict", "check", "params", "expected", "observed")]
    for r in reports:
        params = ", ".join(f"{k}={v}" for k, v in r.params.items() if k != "graph")
        graph = r.params.get("graph")
        if graph:
            params = (graph if len(graph) < 40 else graph[:37] + "...") + ("; " + params if params else "")
        rows.append((r.verdict.upper(), r.name, params, str(r.expected), str(r.observed) if r.verdict != "error" else r.detail))
    widths = [min(60, max(len(row[i]) for row in rows)) for i in range(5)]
    lines = []
    for row in rows:
        lines.append("  ".join(cell[: widths[i]].ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(lines)
