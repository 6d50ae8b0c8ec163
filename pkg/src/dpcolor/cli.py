"""Command-line front end.

Subcommands: ``poly``, ``dp``, ``bounds``, ``scan``, ``verify``.  Graphs are
given as family specs (``cycle:4``, ``theta:3,4``, ``join:K1,cycle:4``,
``unicyclic:4;0``, ``edges:3;0-1,1-2``) or as ``file:PATH`` pointing at an
edge-list file whose first line is ``n e`` followed by ``e`` lines ``u v``.

The m-range is inclusive: ``--m 3`` or ``--m 2..6``.  The default
exhaustive-search budget comes from ``DPCOLOR_BUDGET`` (else 10^7).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Sequence

from . import dpmin, verify
from .chrompoly import BudgetExceeded, chromatic_polynomial
from .graph import GraphError, build_family

SCAN_COLUMNS = ["graph", "n", "edges", "m", "chromatic", "dp_value", "dp_provenance", "gap"]


def parse_m_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad m-range {text!r}; use 'a..b' or a single integer") from exc
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"m-range {text!r} must satisfy 1 <= a <= b")
    return list(range(a, b + 1))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _render(rows: list[dict], fmt: str, columns: Sequence[str] | None = None) -> str:
    if fmt == "json":
        return "\n".join(json.dumps(r, sort_keys=True) for r in rows)
    columns = list(columns or (rows[0].keys() if rows else []))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: r.get(k) for k in columns})
        return buf.getvalue().rstrip("\n")
    cells = [[str(c) for c in columns]] + [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- subcommands ----------------------------------------------------------------


def cmd_poly(args) -> int:
    g = build_family(args.graph)
    p = chromatic_polynomial(g)
    rows = [{"graph": args.graph, "m": m, "value": p(m)} for m in args.m]
    if args.format == "json":
        payload = {"graph": args.graph, "polynomial": p.to_json(), "display": str(p), "evaluations": rows}
        _emit(json.dumps(payload, sort_keys=True), args.output)
    else:
        head = f"P(G, m) = {p}\n" if args.format == "table" else ""
        _emit(head + _render(rows, args.format, ["graph", "m", "value"]), args.output)
    return 0


def _dp_row(spec: str, g, m: int, budget: int, threads: int, timing: bool, require_exhaustive: bool) -> dict:
    start = time.perf_counter()
    formula = dpmin.dp_formula(g, m)
    required = dpmin.required_configurations(g, m)
    if required > budget:
        message = (f"exhaustive search for m={m} needs {required} configurations "
                   f"(({m}!)^{g.cyclomatic_number()}), budget is {budget}")
        if require_exhaustive or not formula:
            raise BudgetExceeded(message, required=required)
        print(f"warning: {message}; reporting the closed form only", file=sys.stderr)
    value, provenance, exact = dpmin.dp_value(g, m, budget=budget, workers=threads)
    row = {
        "graph": spec,
        "m": m,
        "dp_value": value,
        "dp_provenance": provenance,
        "formula": formula.value,
        "formula_provenance": formula.provenance,
        "exhaustive": exact.to_json() if exact is not None else None,
        "required_configurations": required,
    }
    if timing:
        row["seconds"] = round(time.perf_counter() - start, 6)
    return row


def cmd_dp(args) -> int:
    g = build_family(args.graph)
    rows = [
        _dp_row(args.graph, g, m, args.budget, args.threads, args.timing, args.require_exhaustive)
        for m in args.m
    ]
    if args.format == "json":
        _emit(_render(rows, "json"), args.output)
    else:
        flat = [
            {**{k: r[k] for k in ("graph", "m", "dp_value", "dp_provenance")},
             "configurations": r["exhaustive"]["configurations_enumerated"] if r["exhaustive"] else ""}
            for r in rows
        ]
        _emit(_render(flat, args.format), args.output)
    return 0


def cmd_bounds(args) -> int:
    g = build_family(args.graph)
    rows = []
    for m in args.m:
        dpmin.greedy_lower_bound(g, m)  # surfaces the m-too-small error up front
        rep = dpmin.monte_carlo_bound(g, m, args.samples, args.seed)
        rows.append({"graph": args.graph, "m": m, **rep.to_json()})
    _emit(_render(rows, args.format), args.output)
    return 0


def cmd_scan(args) -> int:
    g = build_family(args.graph)
    p = chromatic_polynomial(g)
    rows = []
    for m in args.m:
        value, provenance, _ = dpmin.dp_value(g, m, budget=args.budget, workers=args.threads)
        rows.append({
            "graph": args.graph,
            "n": g.n,
            "edges": g.num_edges,
            "m": m,
            "chromatic": p(m),
            "dp_value": value,
            "dp_provenance": provenance,
            "gap": p(m) - value,
        })
    _emit(_render(rows, args.format, SCAN_COLUMNS), args.output)
    return 0


def _single_check(args) -> verify.CheckReport:
    params = [int(x) for x in args.params.split(",")] if args.params else []
    name = args.check
    g = build_family(args.graph) if args.graph else None

    def need(k: int) -> None:
        if len(params) != k:
            raise SystemExit(f"check {name!r} takes {k} comma-separated params")
        if name != "theta" and g is None:
            raise SystemExit(f"check {name!r} needs --graph")

    if name == "theta":
        need(3)
        return verify.check_theta(*params, budget=args.budget)
    if name == "chordal":
        need(1)
        return verify.check_chordal_equality(g, params[0], args.budget)
    if name == "unicyclic":
        need(1)
        return verify.check_unicyclic(g, params[0], args.budget)
    if name == "ends":
        need(3)
        return verify.check_lemma_ends(g, params[:2], params[2])
    if name == "broken_circuit":
        need(0)
        return verify.check_broken_circuit(g)
    if name == "path_delete":
        need(4)
        return verify.check_path_delete(g, params[:3], params[3], args.budget)
    if name == "edge_delete":
        need(3)
        return verify.check_edge_delete(g, params[:2], params[2])
    if name == "join_bound":
        need(2)
        return verify.check_join_bound(g, params[0], params[1], args.seed, args.budget)
    if name == "sandwich":
        need(1)
        return verify.check_sandwich(g, params[0], args.budget)
    if name == "monte_carlo":
        need(2)
        return verify.check_monte_carlo(g, params[0], params[1], args.seed)
    raise SystemExit(f"unknown check {name!r}")


CHECK_NAMES = [
    "theta", "chordal", "unicyclic", "ends", "broken_circuit", "path_delete",
    "edge_delete", "join_bound", "sandwich", "monte_carlo",
]


def cmd_verify(args) -> int:
    if args.check:
        reports = [_single_check(args)]
    elif args.all:
        reports = verify.run_all(budget=args.budget, seed=args.seed)
    else:
        raise SystemExit("verify needs --all or --check NAME")
    if args.format == "json":
        text = "\n".join(r.to_json() for r in reports)
    else:
        text = verify.format_table(reports)
    _emit(text, args.output)
    return 0 if all(r.passed for r in reports) else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpcolor",
        description="Chromatic polynomials and DP color functions of small graphs.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, needs_graph=True, default_format="table"):
        if needs_graph:
            p.add_argument("--graph", required=True, help="family spec or file:PATH")
            p.add_argument("--m", type=parse_m_range, required=True, help="fold size or inclusive range a..b")
        p.add_argument("--format", choices=["json", "csv", "table"], default=None)
        p.add_argument("--output", help="write to this file instead of stdout")
        p.add_argument("--budget", type=_positive, default=dpmin.default_budget(),
                       help="maximum gauge-fixed configurations for exhaustive search")
        p.add_argument("--threads", type=_positive, default=1, help="worker threads for the cover sweep")
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(default_format=default_format)

    p = sub.add_parser("poly", help="chromatic polynomial and its values")
    common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("dp", help="P_DP(G, m) by closed form and/or exhaustive search")
    common(p, default_format="json")
    p.add_argument("--timing", action="store_true", help="add wall-clock seconds to each row")
    p.add_argument("--require-exhaustive", action="store_true",
                   help="fail instead of falling back to a closed form when over budget")
    p.set_defaults(func=cmd_dp)

    p = sub.add_parser("bounds", help="greedy lower bound, chromatic upper bound, Monte Carlo mean")
    common(p)
    p.add_argument("--samples", type=_positive, default=10_000)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("scan", help="CSV table of P, P_DP and their gap over an m-range")
    common(p, default_format="csv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run the verification battery or one named check")
    common(p, needs_graph=False)
    p.add_argument("--all", action="store_true")
    p.add_argument("--check", choices=CHECK_NAMES)
    p.add_argument("--params", help="comma-separated integer parameters for --check")
    p.add_argument("--graph", help="family spec for checks that take a graph")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
