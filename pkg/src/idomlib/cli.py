"""Command-line interface: analyze, solve, verify, gen, and brute subcommands.

Exit codes: 0 success, 1 negative answer under --status-exit, 2 input or
usage error, 3 work budget or size cap exceeded. The environment variable
IDOM_BUDGET overrides the solver step budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .digraph import (
    ParseError,
    format_arc_list,
    is_ids,
    parse_digraph,
)
from .generators import (
    DhkSpec,
    GenerationError,
    UndirectedGraph,
    cartesian_product,
    double_edges,
    gen_cycle,
    gen_dhk,
    gen_path,
    gen_paw,
    gen_wheel,
    random_dag,
    random_digraph,
    random_layered_strong,
    random_oriented_bipartite,
)
from .solvers import (
    BudgetExceeded,
    CapExceeded,
    brute_force_solve,
    idomatic_brute,
    min_dom_size_brute,
    min_ids_size_brute,
    solve_auto,
    solve_bipartite,
    solve_dag,
    solve_even_period,
    solve_exact,
    solve_strong_by_layers,
)
from .structure import (
    condensation,
    is_strongly_connected,
    layer_decomposition,
    period,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _budget() -> int | None:
    raw = os.environ.get("IDOM_BUDGET")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"IDOM_BUDGET must be an integer, got {raw!r}") from None


def _load(path: str):
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    parsed = parse_digraph(text)
    if parsed.duplicate_arcs:
        print(
            f"warning: {parsed.duplicate_arcs} duplicate arc(s) collapsed",
            file=sys.stderr,
        )
    return parsed.graph


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc))


def cmd_analyze(args: argparse.Namespace) -> int:
    graph = _load(args.file)
    h = period(graph)
    cond = condensation(graph)
    doc: dict = {"period": h, "sccs": cond.dag.n}
    lines = [
        f"period={h}",
        f"sccs={cond.dag.n}",
        "source_sccs=[" + ",".join(map(str, cond.source_components())) + "]",
    ]
    if graph.n >= 2 and is_strongly_connected(graph):
        layers = layer_decomposition(graph)
        sizes = [len(layer) for layer in layers.layers]
        doc["layers"] = sizes
        lines.append("layers=[" + ",".join(map(str, sizes)) + "]")
    if args.json:
        _emit_json(doc)
    else:
        print("\n".join(lines))
    return EXIT_OK


_SOLVERS = {
    "auto": lambda g, budget: solve_auto(g, budget),
    "dag": lambda g, budget: solve_dag(g),
    "even": lambda g, budget: solve_even_period(g),
    "bipartite": lambda g, budget: solve_bipartite(g),
    "layers": lambda g, budget: solve_strong_by_layers(g, budget),
    "exact": lambda g, budget: solve_exact(g, budget),
    "brute": lambda g, budget: brute_force_solve(g, budget=budget),
}


def cmd_solve(args: argparse.Namespace) -> int:
    graph = _load(args.file)
    outcome = _SOLVERS[args.method](graph, _budget())
    elapsed_ms = round(outcome.stats.elapsed * 1000, 3)
    if args.json:
        doc: dict = {"status": outcome.status}
        if outcome.found:
            doc["set"] = sorted(outcome.set)
        doc.update(
            method=outcome.method,
            seeds_explored=outcome.stats.seeds_explored,
            subsets_explored=outcome.stats.subsets_explored,
            elapsed_ms=elapsed_ms,
        )
        _emit_json(doc)
    else:
        if outcome.found:
            print(f"status=found set={','.join(map(str, sorted(outcome.set)))}")
        else:
            print("status=none")
        print(f"method={outcome.method}")
        print(
            f"seeds_explored={outcome.stats.seeds_explored} "
            f"subsets_explored={outcome.stats.subsets_explored} "
            f"elapsed_ms={elapsed_ms}"
        )
    if args.status_exit:
        return EXIT_OK if outcome.found else EXIT_NEGATIVE
    return EXIT_OK


def _parse_set(raw: str) -> frozenset[int]:
    raw = raw.strip()
    if not raw:
        return frozenset()
    try:
        return frozenset(int(part) for part in raw.split(","))
    except ValueError:
        raise ValueError(f"malformed vertex set {raw!r}") from None


def cmd_verify(args: argparse.Namespace) -> int:
    graph = _load(args.file)
    report = is_ids(graph, _parse_set(args.set))
    if args.json:
        _emit_json(
            {
                "independent": report.independent,
                "dominating": report.dominating,
                "ids": report.ids,
                "violations": {
                    "independence": [list(arc) for arc in report.independence_violations],
                    "domination": list(report.domination_violations),
                },
            }
        )
    else:
        fmt = lambda flag: "true" if flag else "false"
        print(f"independent={fmt(report.independent)}")
        print(f"dominating={fmt(report.dominating)}")
        print(f"ids={fmt(report.ids)}")
        arcs = ",".join(f"{u}->{v}" for u, v in report.independence_violations)
        print(f"independence_violations={arcs}")
        print(f"domination_violations={','.join(map(str, report.domination_violations))}")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    if family == "cycle":
        graph = gen_cycle(args.n)
    elif family == "path":
        graph = gen_path(args.n)
    elif family == "wheel":
        graph = gen_wheel(args.n)
    elif family == "paw":
        graph = gen_paw()
    elif family == "dhk":
        variant = "ids_free" if args.variant == "free" else "with_ids"
        graph = gen_dhk(DhkSpec(args.h, args.k, variant, args.rules)).graph
    elif family == "product":
        graph = cartesian_product(_load(args.a), _load(args.b))
    elif family == "double":
        base = _load(args.g)
        undirected = UndirectedGraph.from_edges(base.n, base.arcs)
        graph = double_edges(undirected)
    elif family == "random-dag":
        graph = random_dag(args.n, args.p, args.seed)
    elif family == "random-bipartite":
        graph = random_oriented_bipartite(args.a, args.b, args.p, args.seed)
    elif family == "random-layered":
        graph = random_layered_strong(args.h, args.size, args.p, args.seed)
    elif family == "random-digraph":
        graph = random_digraph(args.n, args.p, args.seed)
    else:  # pragma: no cover - argparse restricts the choices
        raise AssertionError(family)
    sys.stdout.write(format_arc_list(graph))
    return EXIT_OK


def cmd_brute(args: argparse.Namespace) -> int:
    graph = _load(args.file)
    what = args.what
    if what == "exist":
        value = brute_force_solve(graph, cap=args.cap).found
    elif what == "i":
        value = min_ids_size_brute(graph, cap=args.cap)
    elif what == "gamma":
        value = min_dom_size_brute(graph, cap=args.cap)
    else:  # idomatic
        value = idomatic_brute(graph, cap=args.cap)
    if args.json:
        _emit_json({"what": what, "value": value})
    else:
        if value is None:
            print("none")
        elif isinstance(value, bool):
            print("true" if value else "false")
        else:
            print(value)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idom",
        description="Independent dominating sets in directed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="period, SCCs, and layer sizes of a graph")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", help="decide existence of an independent dominating set")
    p.add_argument("file")
    p.add_argument("--method", choices=sorted(_SOLVERS), default="auto")
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--status-exit",
        action="store_true",
        help="exit 0 when a set exists, 1 when none does",
    )
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a vertex set against a graph")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a generated graph as an arc list")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("cycle")
    q.add_argument("n", type=int)
    q = fam.add_parser("path")
    q.add_argument("n", type=int)
    q = fam.add_parser("wheel")
    q.add_argument("n", type=int)
    fam.add_parser("paw")
    q = fam.add_parser("dhk")
    q.add_argument("h", type=int)
    q.add_argument("k", type=int)
    q.add_argument("--variant", choices=["free", "ids"], default="free")
    q.add_argument("--rules", choices=["text", "figure"], default="text")
    q = fam.add_parser("product")
    q.add_argument("a")
    q.add_argument("b")
    q = fam.add_parser("double")
    q.add_argument("g")
    q = fam.add_parser("random-dag")
    q.add_argument("n", type=int)
    q.add_argument("p", type=float)
    q.add_argument("--seed", type=int, required=True)
    q = fam.add_parser("random-bipartite")
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    q.add_argument("p", type=float)
    q.add_argument("--seed", type=int, required=True)
    q = fam.add_parser("random-layered")
    q.add_argument("h", type=int)
    q.add_argument("size", type=int)
    q.add_argument("p", type=float)
    q.add_argument("--seed", type=int, required=True)
    q = fam.add_parser("random-digraph")
    q.add_argument("n", type=int)
    q.add_argument("p", type=float)
    q.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("brute", help="exhaustive oracle values")
    p.add_argument("file")
    p.add_argument("--what", choices=["exist", "i", "gamma", "idomatic"], required=True)
    p.add_argument("--cap", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_brute)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GenerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
