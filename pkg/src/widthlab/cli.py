"""Command-line interface.

Subcommands: ``param`` (one parameter of one graph), ``verify`` (named
checks over families), ``construct`` (substitutions and the gamma family),
``mwis`` (the three MWIS algorithms), and ``list-checks``.

Exit codes: 0 success / check passed, 1 check failed, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .checks import CHECK_NAMES, CheckSpec, default_params, run_check
from .config import DEFAULT_BUDGETS, DEFAULT_SUITE, load_config
from .constructions import SubstitutionKind, gamma_family, subdivided_claw, substitute
from .decomp import CostKind, chordal_clique_tree, cost
from .formats import FormatError, emit, parse
from .graphs import BudgetExceededError, Graph, named_graph
from .invariants import (
    chromatic_number,
    clique_number,
    independence_number,
    local_independence_number,
    max_degree,
    max_matching_size,
    max_independent_set,
)
from .modulators import (
    ModulatorSpec,
    feedback_vertex_number,
    modulator_number,
    oct_number,
    vertex_cover_number,
)
from .mwis import WeightedGraph, mwis_bipartite, mwis_exact, mwis_via_oct
from .widths import (
    alpha_chromatic,
    degeneracy,
    lambda_pathwidth,
    lambda_treedepth,
    lambda_treewidth,
)

CARD = CostKind.CARDINALITY
ALPHA = CostKind.INDEPENDENCE


class UsageError(Exception):
    pass


def _read_graph(args) -> Graph:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from None
    try:
        return parse(text, args.format)
    except FormatError as exc:
        raise UsageError(f"cannot parse {args.input} as {args.format}: {exc}") from None


def _witness_json(witness):
    if hasattr(witness, "to_json"):
        return witness.to_json()
    if isinstance(witness, tuple):
        return list(witness)
    return witness


def _resolve_parameter_name(name: str, kind: CostKind) -> tuple[str, CostKind]:
    """Map 'alpha-tw' style names onto (base name, independence kind)."""
    if name == "alpha-chi":
        return name, ALPHA
    if name.startswith("alpha-") and name != "alpha":
        return name[len("alpha-") :], ALPHA
    return name, kind


def _compute_parameter(g: Graph, name: str, kind: CostKind):
    """Returns (value, witness-or-None)."""
    if name in ("n", "order"):
        return g.n, None
    if name == "alpha":
        return independence_number(g), max_independent_set(g)
    if name == "omega":
        return clique_number(g), None
    if name == "chi":
        return chromatic_number(g), None
    if name in ("delta", "max-degree"):
        return max_degree(g), None
    if name == "local-alpha":
        return local_independence_number(g), None
    if name == "matching":
        return max_matching_size(g), None
    if name == "alpha-chi":
        result = alpha_chromatic(g)
        return result.value, result.witness
    if name == "tw":
        result = lambda_treewidth(g, kind)
        return result.value, result.witness
    if name == "pw":
        result = lambda_pathwidth(g, kind)
        return result.value, result.witness
    if name == "td":
        result = lambda_treedepth(g, kind)
        return result.value, result.witness
    if name == "degeneracy":
        result = degeneracy(g, kind)
        return result.value, result.witness
    if name == "vc":
        if kind is ALPHA:
            return modulator_number(g, ModulatorSpec("tw", 1), ALPHA)
        return vertex_cover_number(g)
    if name == "fvs":
        if kind is ALPHA:
            return modulator_number(g, ModulatorSpec("tw", 2), ALPHA)
        return feedback_vertex_number(g)
    if name == "oct":
        if kind is ALPHA:
            return modulator_number(g, ModulatorSpec("chi", 2), ALPHA)
        return oct_number(g)
    if name == "alpha-tw-clique-tree":
        td = chordal_clique_tree(g)
        return cost(g, td, ALPHA), td
    if ":" in name:
        spec = ModulatorSpec.parse(name.removeprefix("mu:"))
        return modulator_number(g, spec, kind)
    raise UsageError(f"unknown parameter {name!r}")


def cmd_param(args) -> int:
    g = _read_graph(args)
    name, kind = _resolve_parameter_name(args.parameter, CostKind.parse(args.kind))
    start = time.perf_counter()
    value, witness = _compute_parameter(g, name, kind)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    out = {
        "parameter": args.parameter,
        "kind": kind.value,
        "value": value,
        "elapsed_ms": elapsed_ms,
    }
    if args.witness and witness is not None:
        out["witness"] = _witness_json(witness)
    print(json.dumps(out, sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    budgets, suite = DEFAULT_BUDGETS, DEFAULT_SUITE
    if args.config:
        budgets, suite = load_config(args.config)
    if args.check not in CHECK_NAMES:
        raise UsageError(
            f"unknown check {args.check!r}; see `widthlab list-checks`"
        )
    params = {}
    defaults = default_params(args.check, suite)
    if args.max_n is not None:
        for key in ("max_n",):
            if key in defaults:
                params[key] = args.max_n
    if args.seed is not None and "seed" in defaults:
        params["seed"] = args.seed
    if args.rho is not None and "rhos" in defaults:
        params["rhos"] = [args.rho]
    if args.c is not None and "cs" in defaults:
        params["cs"] = [args.c]
    if args.kind is not None and "kinds" in defaults:
        params["kinds"] = [args.kind]
    if args.family is not None:
        params["graphs"] = _resolve_family(args.family, args.seed)
    report = run_check(
        CheckSpec(args.check, params),
        budgets=budgets,
        suite=suite,
        jobs=args.jobs,
        log_path=args.log,
    )
    print(json.dumps(report.to_json(), sort_keys=True))
    return 0 if report.passed else 1


def _resolve_family(text: str, seed: int | None) -> list[str]:
    from .formats import to_graph6
    from .graphs import enumerate_graphs, random_graph

    try:
        head, _, rest = text.partition(":")
        if head == "all":
            n = int(rest)
            return [to_graph6(g) for g in enumerate_graphs(n)]
        if head == "upto":
            n = int(rest)
            out = []
            for k in range(1, n + 1):
                out.extend(to_graph6(g) for g in enumerate_graphs(k))
            return out
        if head == "stars":
            lo, hi = rest.split("-")
            return [to_graph6(named_graph(f"star{q}")) for q in range(int(lo), int(hi) + 1)]
        if head == "paths":
            lo, hi = rest.split("-")
            return [to_graph6(named_graph(f"P{s}")) for s in range(int(lo), int(hi) + 1)]
        if head == "random":
            n, p, count = rest.split(",")
            base = seed if seed is not None else DEFAULT_SUITE.default_seed
            return [
                to_graph6(random_graph(int(n), float(p), base + i))
                for i in range(int(count))
            ]
        if head == "named":
            return [to_graph6(named_graph(token)) for token in rest.split(",")]
        if head == "file":
            with open(rest) as fh:
                return [line.strip() for line in fh if line.strip()]
    except (ValueError, OSError) as exc:
        raise UsageError(f"bad family {text!r}: {exc}") from None
    raise UsageError(f"bad family {text!r}")


def cmd_construct(args) -> int:
    if args.kind == "gamma":
        g = gamma_family(args.n)
    elif args.kind == "subdivided-claw":
        g = subdivided_claw()
    else:
        kind = SubstitutionKind.parse(args.kind)
        g = Graph(1, (0,))
        for _ in range(args.iterate):
            g = substitute(g, kind)
    sys.stdout.write(emit(g, args.format))
    if args.format == "graph6":
        sys.stdout.write("\n")
    return 0


def cmd_mwis(args) -> int:
    g = _read_graph(args)
    if args.weights:
        try:
            with open(args.weights) as fh:
                weights = tuple(int(line) for line in fh.read().split())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read weights: {exc}") from None
    else:
        weights = (1,) * g.n
    try:
        wg = WeightedGraph(g, weights)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    start = time.perf_counter()
    if args.algorithm == "exact":
        result = mwis_exact(wg)
    elif args.algorithm == "bipartite":
        try:
            result = mwis_bipartite(wg)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        try:
            result = mwis_via_oct(wg, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    print(
        json.dumps(
            {
                "algorithm": args.algorithm,
                "weight": result.weight,
                "set": list(result.vertices),
                "elapsed_ms": elapsed_ms,
            },
            sort_keys=True,
        )
    )
    return 0


def cmd_list_checks(args) -> int:
    for name in CHECK_NAMES:
        print(name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="widthlab",
        description="Exact graph width parameters, their independence "
        "variants, modulators, and per-graph verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("param", help="compute one parameter of one graph")
    p.add_argument("parameter", help="e.g. alpha, omega, tw, alpha-pw, vc, tw:2")
    p.add_argument("--input", required=True, help="graph file, or - for stdin")
    p.add_argument("--format", default="graph6", choices=["graph6", "dimacs", "edges"])
    p.add_argument("--kind", default="card", help="card or alpha")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("verify", help="run a named verification check")
    p.add_argument("check")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--log", default=None, help="JSONL per-instance log path")
    p.add_argument("--rho", default=None, help="override target parameter (slack)")
    p.add_argument("--c", type=int, default=None, help="override threshold (slack)")
    p.add_argument("--kind", default=None, help="restrict cost kind (slack)")
    p.add_argument("--family", default=None, help="all:N, upto:N, stars:A-B, paths:A-B, random:N,P,COUNT, named:..., file:PATH")
    p.add_argument("--config", default=None, help="JSON budgets/suite override")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="emit constructed graphs")
    p.add_argument("kind", choices=["s-claw", "p5", "net", "gamma", "subdivided-claw"])
    p.add_argument("--iterate", type=int, default=1, help="substitution count from K1")
    p.add_argument("--n", type=int, default=1, help="gamma family index")
    p.add_argument("--format", default="graph6", choices=["graph6", "dimacs", "edges"])
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("mwis", help="maximum weight independent set")
    p.add_argument("--input", required=True)
    p.add_argument("--format", default="graph6", choices=["graph6", "dimacs", "edges"])
    p.add_argument("--weights", default=None, help="file, one integer per vertex")
    p.add_argument("--algorithm", default="exact", choices=["exact", "bipartite", "oct"])
    p.add_argument("--k", type=int, default=0, help="OCT independence bound")
    p.set_defaults(func=cmd_mwis)

    p = sub.add_parser("list-checks", help="list registered checks")
    p.set_defaults(func=cmd_list_checks)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FormatError, BudgetExceededError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
