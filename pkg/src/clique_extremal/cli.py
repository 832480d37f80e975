"""Command-line front end.

Exit codes: 0 success, 1 a verification mismatch (or a failed
``construct --verify``), 2 bad parameters or unreadable input, 3 a minor
search ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bounds, constructions, verify
from .bounds import BoundPreconditionError, format_rational
from .classes import (
    MinorBudgetExceeded,
    MinorSearchBudget,
    degeneracy,
    hadwiger_multipartite,
    hadwiger_number,
    is_planar,
    max_degree,
    multipartite_reduced_matching,
)
from .cliques import clique_census, count_cliques
from .graph import Graph, GraphError, encode_graph6, format_edgelist, parse_graph

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _parts(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated sizes, got {text!r}") from None


def _emit(args: argparse.Namespace, name: str, params: dict, values: dict) -> None:
    if args.json:
        out = {"bound": name, "params": params, "values": {k: format_rational(v) for k, v in values.items()}}
        print(json.dumps(out, sort_keys=True))
    elif list(values) == ["value"]:
        print(format_rational(values["value"]))
    else:
        for k, v in values.items():
            print(f"{k} {format_rational(v)}")


# -- bound -------------------------------------------------------------------


def cmd_bound(args: argparse.Namespace) -> int:
    kind = args.bound
    if kind == "nm":
        params, values = {"n": args.n, "m": args.m}, {"value": bounds.max_cliques_nm(args.n, args.m)}
    elif kind == "degree":
        params = {"n": args.n, "m": args.m, "max_degree": args.delta}
        values = {"value": bounds.degree_bound(args.n, args.m, args.delta)}
    elif kind == "degenerate":
        params, values = {"n": args.n, "d": args.d}, {"value": bounds.degenerate_bound(args.n, args.d)}
    elif kind == "degenerate-edges":
        params = {"n": args.n, "m": args.m, "d": args.d}
        values = {"value": bounds.degenerate_edge_bound(args.n, args.m, args.d)}
    elif kind == "planar":
        params, values = {"n": args.n, "m": args.m}, {"value": bounds.planar_bound(args.n, args.m)}
    elif kind == "planar-census":
        c3, c4 = bounds.planar_clique_size_bounds(args.n)
        params, values = {"n": args.n}, {"c3": c3, "c4": c4}
    elif kind == "k5free":
        params, values = {"n": args.n}, {"value": bounds.k5_minor_free_bound(args.n)}
    elif kind == "k33free":
        params, values = {"n": args.n}, {"value": bounds.k33_minor_free_bound(args.n)}
    elif kind == "zykov":
        params = {"n": args.n, "k": args.k, "ell": args.ell}
        values = {"value": bounds.zykov_bound(args.n, args.k, args.ell)}
    elif kind == "zykov-total":
        params, values = {"n": args.n, "k": args.k}, {"value": bounds.zykov_total_bound(args.n, args.k)}
    else:
        gap = bounds.open_problem_gap(args.k)
        params, values = {"k": args.k}, {"lhs": gap.lhs, "rhs": gap.rhs}
        if args.json:
            out = {"bound": kind, "params": params, "values": {"lhs": str(gap.lhs), "rhs": str(gap.rhs)}, "exceeds": gap.exceeds}
            print(json.dumps(out, sort_keys=True))
        else:
            print(f"lhs {gap.lhs}\nrhs {gap.rhs}\nexceeds {str(gap.exceeds).lower()}")
        return 0
    _emit(args, kind, params, values)
    return 0


# -- construct ---------------------------------------------------------------


def _generator_params(args: argparse.Namespace) -> dict:
    name = args.generator
    if name in ("nm", "planar"):
        return {"n": args.n, "m": args.m}
    if name == "degree":
        return {"n": args.n, "m": args.m, "max_deg": args.delta}
    if name == "dtree":
        return {"n": args.n, "d": args.d}
    if name == "degenerate":
        return {"n": args.n, "m": args.m, "d": args.d}
    if name in ("stacked-planar", "k5-chain"):
        return {"n": args.n}
    if name == "multipartite":
        return {"parts": args.parts}
    return {}


def cmd_construct(args: argparse.Namespace) -> int:
    params = _generator_params(args)
    g = constructions.GENERATORS[args.generator](**params)
    text = encode_graph6(g).decode() + "\n" if args.format == "graph6" else format_edgelist(g)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.verify:
        expected = constructions.attained_value(args.generator, **params)
        got = count_cliques(g)
        ok = got == expected
        print(
            f"cliques {got} formula {format_rational(expected)} {'ok' if ok else 'MISMATCH'}",
            file=sys.stderr,
        )
        return 0 if ok else EXIT_MISMATCH
    return 0


# -- count / analyze ---------------------------------------------------------


def _read_graph(args: argparse.Namespace) -> Graph:
    if args.input in (None, "-"):
        data = sys.stdin.read()
    else:
        with open(args.input, encoding="ascii") as fh:
            data = fh.read()
    return parse_graph(data, args.format)


def cmd_count(args: argparse.Namespace) -> int:
    print(clique_census(_read_graph(args)).to_json())
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    budget = MinorSearchBudget(args.max_vertices, args.max_branch_nodes)
    out: dict = {}
    if args.multipartite:
        g = constructions.construct_multipartite(args.multipartite)
        out["parts"] = args.multipartite
        out["hadwiger"] = hadwiger_multipartite(args.multipartite)
        out["hadwiger_method"] = "multipartite formula"
        out["reduced_matching"] = multipartite_reduced_matching(args.multipartite)
    else:
        g = _read_graph(args)
    out.update({"n": g.n, "m": g.m, "degeneracy": degeneracy(g)})
    out["max_degree"] = max_degree(g) if g.n else None
    out["cliques"] = str(count_cliques(g))
    errors = {}
    try:
        out["planar"] = is_planar(g, budget)
    except MinorBudgetExceeded as exc:
        out["planar"] = None
        errors["planar"] = f"budget exhausted: {exc}"
    if "hadwiger" not in out:
        out["hadwiger_method"] = "minor search"
        try:
            out["hadwiger"] = hadwiger_number(g, budget)
        except MinorBudgetExceeded as exc:
            out["hadwiger"] = None
            errors["hadwiger"] = f"budget exhausted: {exc}"
    if errors:
        out["errors"] = errors
    print(json.dumps(out, sort_keys=True))
    return EXIT_BUDGET if errors else 0


# -- verify ------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    threads = args.threads
    if args.check == "nm":
        reports = verify.verify_nm_tightness(args.n, threads)
    elif args.check == "class":
        param = args.d if args.d is not None else args.delta
        klass = verify.GraphClass.parse(args.graph_class, param)
        reports = verify.verify_class_bound(args.n, klass, threads)
    elif args.check == "planar-census":
        reports = verify.verify_planar_census(args.n, threads)
    else:
        reports = verify.verify_zykov(args.n, args.k, threads)
    for line in verify.iter_jsonl(reports):
        print(line)
    return 0 if all(r.match for r in reports) else EXIT_MISMATCH


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clique-extremal", description="Exact clique counts and extremal clique bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="evaluate a closed-form bound")
    bsub = p_bound.add_subparsers(dest="bound", required=True)
    bound_args = {
        "nm": ("n", "m"),
        "degree": ("n", "m", "delta"),
        "degenerate": ("n", "d"),
        "degenerate-edges": ("n", "m", "d"),
        "planar": ("n", "m"),
        "planar-census": ("n",),
        "k5free": ("n",),
        "k33free": ("n",),
        "zykov": ("n", "k", "ell"),
        "zykov-total": ("n", "k"),
        "open-problem": ("k",),
    }
    for name, needed in bound_args.items():
        p = bsub.add_parser(name)
        for flag in needed:
            p.add_argument(f"--{flag}", type=int, required=True)
        p.add_argument("--json", action="store_true", help="print a JSON object")
        p.set_defaults(func=cmd_bound)

    p_con = sub.add_parser("construct", help="build an extremal graph")
    csub = p_con.add_subparsers(dest="generator", required=True)
    generator_args = {
        "nm": ("n", "m"),
        "degree": ("n", "m", "delta"),
        "dtree": ("n", "d"),
        "degenerate": ("n", "m", "d"),
        "stacked-planar": ("n",),
        "planar": ("n", "m"),
        "v8": (),
        "k5-chain": ("n",),
        "multipartite": (),
    }
    for name, needed in generator_args.items():
        p = csub.add_parser(name)
        for flag in needed:
            p.add_argument(f"--{flag}", type=int, required=True)
        if name == "multipartite":
            p.add_argument("--parts", type=_parts, required=True, help="e.g. 2,2,2")
        p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        p.add_argument("--output", "-o", help="write the graph here instead of stdout")
        p.add_argument("--verify", action="store_true", help="recount cliques and compare with the formula")
        p.set_defaults(func=cmd_construct)

    for name, func, help_ in (("count", cmd_count, "clique census of a graph"), ("analyze", cmd_analyze, "class report for a graph")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", nargs="?", help="graph file (graph6 or edge list); stdin if omitted")
        p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
        if name == "analyze":
            p.add_argument("--multipartite", type=_parts, help="analyse K_{a,b,...} given as a,b,...")
            p.add_argument("--max-vertices", type=int, default=MinorSearchBudget.max_vertices)
            p.add_argument("--max-branch-nodes", type=int, default=MinorSearchBudget.max_branch_nodes)
        p.set_defaults(func=func)

    p_ver = sub.add_parser("verify", help="exhaustive small-scale verification")
    vsub = p_ver.add_subparsers(dest="check", required=True)
    for name in ("nm", "class", "planar-census", "zykov"):
        p = vsub.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--threads", type=int, default=None, help=f"worker threads (default ${verify.THREADS_ENV} or 1)")
        if name == "class":
            p.add_argument("--class", dest="graph_class", required=True,
                           help="planar, k5free, k33free, degenerate, max-degree")
            p.add_argument("--d", type=int, help="degeneracy for --class degenerate")
            p.add_argument("--delta", type=int, help="maximum degree for --class max-degree")
        if name == "zykov":
            p.add_argument("--k", type=int, required=True)
        p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MinorBudgetExceeded as exc:
        print(f"error: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (BoundPreconditionError, GraphError, verify.HarnessLimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
