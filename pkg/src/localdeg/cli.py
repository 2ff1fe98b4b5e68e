"""Command-line interface: ``localdeg {gen,props,verify,extend,search}``.

Exit codes: 0 success / all pass, 1 a check failed or a counterexample was
found, 2 usage or input error, 3 a search budget ran out.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

from . import __version__
from .cycles import BudgetExceeded, Cycle, canonical_sequence, find_extension_exhaustive, validate_cycle
from .families import parse_family_spec
from .graph import Graph, is_connected
from .harness import (
    THEOREMS,
    Limits,
    SearchConfig,
    SuiteConfig,
    exhaustive_search,
    json_number,
    random_search,
    run_suite,
    suite_exit_code,
)
from .invariants import diameter, edge_connectivity, girth, is_planar, vertex_connectivity
from .io import graph_to_text, parse_graph_file, report_line
from .moves import ExtensionMove, find_extension_by_moves, hamilton_by_extension
from .predicates import (
    is_claw_free,
    is_closed_locally_dirac,
    is_closed_locally_ore,
    is_locally_connected,
    is_locally_dirac,
    is_locally_hamiltonian,
    is_locally_isometric,
    is_locally_ore,
    min_clustering_coefficient,
    satisfies_dirac,
    satisfies_ore,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument("--seed", type=int, default=default(0), help="RNG seed (default 0)")
    parser.add_argument("--budget", type=int, default=default(None), help="search-node budget per check")
    parser.add_argument("--report", default=default(None), help="write output here instead of stdout")
    parser.add_argument("--format", choices=("json", "text"), default=default("json"))


def _graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("graph", nargs="?", help="edge-list file")
    parser.add_argument("--family", help='family spec, e.g. "path-strong-k3 m=5"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="localdeg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a family member as an edge list")
    gen.add_argument("spec", nargs="+", help="family id followed by key=value parameters")
    _global_flags(gen, suppress=True)

    props = sub.add_parser("props", help="evaluate predicates and invariants of one graph")
    _graph_source(props)
    _global_flags(props, suppress=True)

    verify = sub.add_parser("verify", help="run theorem checks and emit JSON-lines reports")
    verify.add_argument("--suite", choices=("catalog", "random", "exhaustive", "all"))
    verify.add_argument("--theorem", action="append", choices=THEOREMS, help="restrict to these ids (repeatable)")
    verify.add_argument("--family", action="append", default=[], help="extra family instance (repeatable)")
    verify.add_argument("--graph", action="append", default=[], help="extra edge-list file (repeatable)")
    verify.add_argument("--samples", type=int, default=100, help="random graphs in the random suite")
    verify.add_argument("--exhaustive-n", type=int, default=6, help="maximum order in the exhaustive suite")
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument("--timing", action="store_true", help="record wall-clock millis (breaks byte-identity)")
    _global_flags(verify, suppress=True)

    extend = sub.add_parser("extend", help="extend a cycle, or grow a Hamilton cycle by extensions")
    _graph_source(extend)
    extend.add_argument("--cycle", help="comma-separated cycle to extend once, e.g. 0,1,2")
    extend.add_argument("--seeds", type=int, default=10, help="seed triangles to try")
    _global_flags(extend, suppress=True)

    search = sub.add_parser("search", help="exhaustive or random counterexample search")
    search.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    search.add_argument("--filter", default="always", help='"+"-joined atoms, e.g. connected+locally-connected')
    search.add_argument("--property", default="always", help="property id or theorem id")
    search.add_argument("--max-n", type=int, default=7, help="exhaustive: maximum order")
    search.add_argument("--samples", type=int, default=1000, help="random: number of samples")
    search.add_argument("--n-min", type=int, default=4)
    search.add_argument("--n-max", type=int, default=10)
    _global_flags(search, suppress=True)
    return parser


def _limits(args) -> Limits:
    return Limits() if args.budget is None else Limits(budget=args.budget)


def _load_graph(args) -> tuple[str, Graph]:
    if (args.graph is None) == (args.family is None):
        raise UsageError("give exactly one of an edge-list file or --family")
    if args.family is not None:
        spec = parse_family_spec(args.family)
        return str(spec), spec.build()
    return args.graph, parse_graph_file(args.graph)


@contextmanager
def _output(args):
    if args.report is None:
        yield sys.stdout
    else:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _cmd_gen(args) -> int:
    G = parse_family_spec(" ".join(args.spec)).build()
    with _output(args) as out:
        out.write(graph_to_text(G))
    return EXIT_OK


def graph_properties(G: Graph, budget: int | None = None) -> dict:
    """The predicate and invariant summary printed by ``props``."""

    def guarded(fn):
        try:
            return fn()
        except BudgetExceeded:
            return None

    out: dict = {"n": G.n, "m": G.edge_count}
    if G.n:
        out["min_degree"], out["max_degree"] = G.min_degree, G.max_degree
    out["connected"] = is_connected(G)
    out["dirac"] = satisfies_dirac(G)
    out["ore"] = satisfies_ore(G)
    out["locally_dirac"] = is_locally_dirac(G)
    out["locally_dirac_order3"] = is_locally_dirac(G, require_order3=True)
    out["locally_ore"] = is_locally_ore(G)
    out["closed_locally_ore"] = is_closed_locally_ore(G)
    out["closed_locally_dirac"] = is_closed_locally_dirac(G)
    out["locally_connected"] = is_locally_connected(G)
    out["claw_free"] = is_claw_free(G)
    out["locally_isometric"] = is_locally_isometric(G)
    out["locally_hamiltonian"] = guarded(lambda: is_locally_hamiltonian(G, budget))
    if G.n and G.min_degree >= 2:
        out["min_clustering"] = str(min_clustering_coefficient(G))
    if G.n:
        out["kappa"] = vertex_connectivity(G).value
    if G.n >= 2:
        out["lambda"] = edge_connectivity(G).value
    out["diameter"] = json_number(diameter(G))
    out["girth"] = json_number(girth(G))
    out["planar"] = is_planar(G).planar
    return out


def _cmd_props(args) -> int:
    name, G = _load_graph(args)
    props = graph_properties(G, args.budget)
    with _output(args) as out:
        if args.format == "json":
            out.write(report_line({"instance": name, **props}) + "\n")
        else:
            out.write(f"instance: {name}\n")
            out.writelines(f"{k}: {v}\n" for k, v in props.items())
    return EXIT_OK


def _cmd_verify(args) -> int:
    families = [parse_family_spec(text) for text in args.family]
    graphs = [(path, parse_graph_file(path)) for path in args.graph]
    suite = args.suite
    catalog = None
    if suite is None:
        if families or graphs:
            suite, catalog = "catalog", families
        else:
            suite = "catalog"
    elif families:
        graphs = [(str(spec), spec.build()) for spec in families] + graphs
    config = SuiteConfig(
        suite=suite,
        seed=args.seed,
        theorems=tuple(args.theorem) if args.theorem else THEOREMS,
        catalog=catalog,
        graphs=graphs,
        samples=args.samples,
        exhaustive_n=args.exhaustive_n,
        limits=_limits(args),
        timing=args.timing,
        workers=args.workers,
    )
    reports = run_suite(config)
    with _output(args) as out:
        for r in reports:
            if args.format == "json":
                out.write(report_line(r.to_dict()) + "\n")
            else:
                note = r.detail.get("why", "") if r.status == "skipped" else ""
                out.write(f"{r.status:8} {r.theorem:13} {r.instance} {note}".rstrip() + "\n")
    return suite_exit_code(reports)


def _cmd_extend(args) -> int:
    name, G = _load_graph(args)
    budget = args.budget
    with _output(args) as out:
        if args.cycle is not None:
            try:
                seq = [int(tok) for tok in args.cycle.split(",")]
            except ValueError:
                raise UsageError(f"bad --cycle {args.cycle!r}; expected comma-separated integers") from None
            C = Cycle(canonical_sequence(validate_cycle(G, seq).vertices))
            found = find_extension_by_moves(G, C)
            if found is None:
                nxt = find_extension_exhaustive(G, C, budget)
                if nxt is not None:
                    (x,) = set(nxt) - set(C)
                    found = (ExtensionMove("Exhaustive", x), nxt)
            if found is None:
                out.write(report_line({"instance": name, "extended": False, "cycle": list(C.vertices)}) + "\n")
                return EXIT_FAIL
            move, after = found
            out.write(report_line(move.to_record(after)) + "\n")
            return EXIT_OK
        trace = hamilton_by_extension(G, budget=budget, max_seeds=args.seeds)
        if trace is None:
            out.write(report_line({"instance": name, "hamiltonian_by_extension": False}) + "\n")
            return EXIT_FAIL
        out.write(trace.to_jsonl())
    return EXIT_OK


def _cmd_search(args) -> int:
    config = SearchConfig(
        filter=args.filter,
        property=args.property,
        exhaustive_n=args.max_n,
        samples=args.samples,
        seed=args.seed,
        n_min=args.n_min,
        n_max=args.n_max,
        limits=_limits(args),
    )
    result = exhaustive_search(config) if args.mode == "exhaustive" else random_search(config)
    record = {
        "mode": args.mode,
        "filter": args.filter,
        "property": args.property,
        "seed": args.seed if args.mode == "random" else None,
        **result.to_dict(),
    }
    with _output(args) as out:
        if args.format == "json":
            out.write(report_line(record) + "\n")
        else:
            verdict = "counterexample found" if result.counterexample else "no counterexample"
            out.write(f"{verdict}: generated {result.generated}, tested {result.tested}\n")
            for n, count in sorted(result.tested_by_order.items()):
                out.write(f"  n={n}: tested {count}\n")
    if result.counterexample is not None:
        return EXIT_FAIL
    return EXIT_BUDGET if result.skipped_budget else EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "props": _cmd_props,
    "verify": _cmd_verify,
    "extend": _cmd_extend,
    "search": _cmd_search,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"localdeg: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError, OSError) as exc:
        print(f"localdeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
