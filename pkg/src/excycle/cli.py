"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 inconclusive (search node limit reached).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import constructions as C
from .cycles import circumference, cycle_spectrum, girth
from .formulas import ex_matching, ex_odd_cycle, extremal_family, g_decompose, g_formula, h1_formula, h2_formula, turan_edges
from .graph import GraphError, block_decomposition, is_bipartite, is_connected, is_two_connected
from .graph6 import g6_decode, g6_encode
from .search import SEARCH_CAP, SearchConfig, default_node_limit, enumerate_graphs, max_edges_c2k1_free
from .theorem import FAIL, INCONCLUSIVE, SWEEP_CAP, check_ledger, sweep_properties, verify_theorem

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _emit(doc: dict, out) -> None:
    out.write(json.dumps(doc, sort_keys=True) + "\n")


def _document(command: str, params: dict, result, started: float) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "result": result,
        "timing": {"elapsed_seconds": round(time.perf_counter() - started, 6)},
    }


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------------------


def cmd_formula(args, out) -> int:
    n, k = args.n, args.k
    if n < 1 or k < 1:
        raise UsageError("need n >= 1 and k >= 1")
    result: dict = {"ex": ex_odd_cycle(n, k), "turan": turan_edges(n, 2)}
    if k >= 2 and n >= 2:
        d = g_decompose(n, k)
        result.update({"g": g_formula(n, k), "s": d.s, "r": d.r})
    if k >= 2 and n >= k:
        result["h1"] = h1_formula(n, k)
    if k >= 2 and n >= 2 * k + 1:
        result["h2"] = h2_formula(n, k)
    if k >= 2:
        result["extremal_family"] = [spec.label for spec in extremal_family(n, k)]
    if args.nu is not None:
        if args.nu < 0:
            raise UsageError("need nu >= 0")
        result["ex_matching"] = ex_matching(n, args.nu)
    if args.json:
        _emit(_document("formula", {"n": n, "k": k, "nu": args.nu}, result, args.started), out)
    else:
        for key, value in result.items():
            if isinstance(value, list):
                value = ", ".join(value)
            out.write(f"{key:16} {value}\n")
    return EXIT_OK


def _spec_from_args(args) -> list:
    kind = args.kind
    need = {
        "complete": ("n",),
        "bipartite": ("a", "b"),
        "turan": ("n",),
        "cactus": ("blocks",),
        "h1": ("n", "k"),
        "h2": ("n", "k"),
        "family": ("n", "k"),
    }[kind]
    missing = [name for name in need if getattr(args, name) is None]
    if missing:
        raise UsageError(f"construct {kind} needs --{' --'.join(missing)}")
    if kind == "complete":
        return [C.Complete(args.n)]
    if kind == "bipartite":
        return [C.CompleteBipartite(args.a, args.b)]
    if kind == "turan":
        return [C.Turan(args.n, args.p)]
    if kind == "cactus":
        return [C.Cactus(tuple(_ints(args.blocks)))]
    if kind == "h1":
        return [C.H1(args.n, args.k)]
    if kind == "h2":
        return [C.H2(args.n, args.k)]
    return extremal_family(args.n, args.k)


def cmd_construct(args, out) -> int:
    specs = _spec_from_args(args)
    graphs = [(spec, spec.realize()) for spec in specs]
    if args.json:
        result = [{"label": spec.label, "n": g.n, "edges": g.edge_count(), "graph6": g6_encode(g)} for spec, g in graphs]
        params = {k: v for k, v in vars(args).items() if k in ("kind", "n", "k", "a", "b", "p", "blocks")}
        _emit(_document("construct", params, result, args.started), out)
    else:
        for _, g in graphs:
            out.write(g6_encode(g) + "\n")
    return EXIT_OK


def analyze_graph(g) -> dict:
    info = {
        "graph6": g6_encode(g),
        "n": g.n,
        "edges": g.edge_count(),
        "connected": is_connected(g),
        "bipartite": bool(is_bipartite(g)),
        "two_connected": is_two_connected(g),
        "girth": girth(g),
        "circumference": circumference(g),
        "cycle_spectrum": sorted(cycle_spectrum(g)),
    }
    if info["connected"]:
        bd = block_decomposition(g)
        info["blocks"] = bd.block_sizes()
        info["cut_vertices"] = sorted(bd.cut_vertices)
    else:
        info["blocks"] = None
        info["cut_vertices"] = None
    return info


def cmd_analyze(args, out) -> int:
    if args.graph6 == "-":
        lines = [ln.strip() for ln in sys.stdin if ln.strip()]
    else:
        lines = [args.graph6]
    if not lines:
        raise UsageError("no graph6 input")
    reports = [analyze_graph(g6_decode(line)) for line in lines]
    if args.json:
        _emit(_document("analyze", {"graph6": lines}, reports, args.started), out)
    else:
        for info in reports:
            for key, value in info.items():
                out.write(f"{key:16} {value}\n")
            out.write("\n")
    return EXIT_OK


def _node_limit(args) -> int:
    return args.node_limit if args.node_limit is not None else default_node_limit()


def cmd_search(args, out) -> int:
    config = SearchConfig(
        n=args.n,
        k=args.k,
        collect_all=args.all,
        initial_lower_bound=args.lower_bound,
        worker_count=args.threads,
        node_limit=_node_limit(args),
        strategy=args.strategy,
    )
    report = max_edges_c2k1_free(config)
    params = {"n": args.n, "k": args.k, "all": args.all, "strategy": args.strategy, "lower_bound": args.lower_bound}
    _emit(_document("search", params, report.to_dict(), args.started), out)
    return EXIT_OK if report.complete else EXIT_INCONCLUSIVE


def cmd_verify(args, out) -> int:
    if args.k < 1 or args.n_max < 1 or args.n_min < 1:
        raise UsageError("need k >= 1 and n >= 1")
    if args.n_max > SEARCH_CAP:
        raise UsageError(f"n-max is capped at {SEARCH_CAP}")
    records = []
    for n in range(args.n_min, args.n_max + 1):
        config = SearchConfig(n, args.k, worker_count=args.threads, node_limit=_node_limit(args))
        records.append(verify_theorem(n, args.k, config))
    statuses = [r.status for r in records]
    code = EXIT_FAIL if FAIL in statuses else EXIT_INCONCLUSIVE if INCONCLUSIVE in statuses else EXIT_OK
    if args.json:
        result = {"all_pass": code == EXIT_OK, "records": [r.to_dict() for r in records]}
        params = {"k": args.k, "n_min": args.n_min, "n_max": args.n_max}
        _emit(_document("verify", params, result, args.started), out)
    else:
        for r in records:
            out.write(
                f"n={r.n:<3} k={r.k}  {r.status:12} ex={r.found_value} (expected {r.expected_value})"
                f"  classes={r.multiplicity}  family={'; '.join(r.expected_family)}\n"
            )
    return code


def cmd_ledger(args, out) -> int:
    if args.k_max < 2 or args.n_max < 2 * args.k_max + 1:
        raise UsageError("need k-max >= 2 and n-max >= 2*k-max + 1")
    report = check_ledger(args.k_max, args.n_max)
    if args.json:
        _emit(_document("ledger", {"k_max": args.k_max, "n_max": args.n_max}, report.to_dict(), args.started), out)
    else:
        for item in report.items:
            out.write(f"{item.name:22} checked={item.checked:<6} violations={len(item.violations)}\n")
            for v in item.violations[:5]:
                out.write(f"    {v}\n")
    return EXIT_OK if report.violations == 0 else EXIT_FAIL


def cmd_sweep(args, out) -> int:
    if not 1 <= args.n_max <= SWEEP_CAP:
        raise UsageError(f"n-max must be in 1..{SWEEP_CAP}")
    report = sweep_properties(args.n_max)
    if args.json:
        _emit(_document("sweep", {"n_max": args.n_max}, report.to_dict(), args.started), out)
    else:
        for row in report.rows:
            kop = " ".join(f"k={k}:{c['holds']}" for k, c in row.kopylov.items())
            out.write(f"n={row.n:<2} classes={row.classes:<6} kopylov non-vacuous {kop}  brandt non-vacuous {row.brandt['holds']}\n")
        out.write(f"counterexamples: {report.violations}\n")
    return EXIT_OK if report.violations == 0 else EXIT_FAIL


def cmd_enumerate(args, out) -> int:
    if not 1 <= args.n <= 9:
        raise UsageError("n must be in 1..9")
    for g in enumerate_graphs(args.n):
        out.write(g6_encode(g) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="excycle", description="Turán numbers of odd cycles: formulas, constructions, exhaustive checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("formula", help="closed-form edge counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nu", type=int, help="also report ex(n, M_{nu+1})")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", help="build a named graph and print graph6")
    p.add_argument("kind", choices=["complete", "bipartite", "turan", "cactus", "h1", "h2", "family"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--blocks", help="comma-separated clique sizes, e.g. 4,2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="structural and cycle report for a graph6 string")
    p.add_argument("graph6", help="graph6 string, or - to read lines from stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", help="exhaustive maximum C_{2k+1}-free search (JSON report)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--all", action="store_true", help="collect every extremal isomorphism class")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--lower-bound", type=int)
    p.add_argument("--strategy", choices=["levels", "pairs"], default="levels")
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check exact values and extremal sets for n up to n-max")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ledger", help="check the inequality ledger")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ledger)

    p = sub.add_parser("sweep", help="Kopylov/Brandt implications over all small graphs")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("enumerate", help="one graph6 line per isomorphism class")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.started = time.perf_counter()
        return args.func(args, out)
    except (UsageError, GraphError, ValueError) as exc:
        print(f"excycle: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
