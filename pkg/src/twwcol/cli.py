"""Command-line interface: ``twwcol <subcommand> ...``.

Exit codes: 0 success, 1 a bound was violated, 2 usage error, 3 invalid
input, 4 a size or search budget was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import generators
from .bounds import CSV_COLUMNS, verify_instance
from .errors import (
    DisconnectedGraphError,
    NotACographError,
    ResourceLimitError,
    SizeGuardError,
    TwwColError,
)
from .graph import Graph, bomega, degeneracy, girth
from .io import (
    format_graph,
    format_order,
    format_witness,
    profile_csv,
    profile_json,
    read_graph,
    read_order,
    read_witness,
)
from .nice_ordering import cograph_order, nice_order_incremental, nice_order_per_component
from .order import LinearOrder
from .reachability import PARAMS, exact_param, profile
from .trigraph import exact_tww, width

DEFAULT_SEED = 0

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_RESOURCE = 4


class UsageError(Exception):
    pass


def parse_radii(text: str) -> list[int]:
    """``'3'``, ``'1..4'`` or ``'1,2,5'`` to a sorted list of positive radii."""
    out = set()
    for part in text.split(","):
        part = part.strip()
        m = re.fullmatch(r"(\d+)\.\.(\d+)", part)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            out.update(range(lo, hi + 1))
        elif part.isdigit():
            out.add(int(part))
        else:
            raise argparse.ArgumentTypeError(f"bad radius range {text!r}")
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError("radii must be positive and non-empty")
    return sorted(out)


def positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def named_graph(name: str) -> Graph:
    """``k4``, ``c5``, ``p3``, ``petersen`` ..."""
    name = name.lower()
    if name == "petersen":
        return Graph.petersen()
    m = re.fullmatch(r"([kcp])(\d+)", name)
    if not m:
        raise argparse.ArgumentTypeError(f"unknown base graph {name!r} (try k4, c5, p3, petersen)")
    kind, n = m.group(1), int(m.group(2))
    try:
        return {"k": Graph.complete, "c": Graph.cycle, "p": Graph.path}[kind](n)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text: str, path) -> None:
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"gen {args.kind} needs --{' --'.join(missing)}")


# -- subcommands -----------------------------------------------------------------


def cmd_gen(args) -> int:
    witness = None
    if args.kind == "subdivided-clique":
        _need(args, "n", "k")
        g = generators.subdivided_clique(args.n, args.k)
    elif args.kind == "theta-lift":
        g = generators.theta_lift(args.base, guard=args.guard)
    elif args.kind == "two-lift-tower":
        _need(args, "levels")
        if args.out is None:
            raise UsageError("gen two-lift-tower needs --out (the witness goes next to it)")
        tower = generators.random_tower(args.base, args.levels, seed=args.seed)
        g = tower.top
        if g.n > args.guard:
            raise SizeGuardError(f"tower top has {g.n} vertices (guard {args.guard})", g.n)
        witness = generators.undo_lift_witness(tower)
    elif args.kind == "lex-clique":
        _need(args, "s")
        g = generators.lex_product_clique(args.base, args.s)
    elif args.kind == "cograph":
        _need(args, "n")
        g = generators.random_cograph(args.n, seed=args.seed)
    elif args.kind == "complete":
        _need(args, "n")
        g = Graph.complete(args.n)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown kind {args.kind}")

    _emit(format_graph(g), args.out)
    summary = f"n={g.n} m={g.m}"
    if args.girth:
        summary += f" girth={girth(g)}"
    if witness is not None:
        wpath = args.witness_out or f"{args.out}.witness"
        Path(wpath).write_text(format_witness(witness))
        summary += f" witness={wpath} width={width(witness)}"
    print(summary, file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_OK


def _load_witness(args, g):
    return read_witness(args.witness, g, scheme=args.scheme)


def cmd_order(args) -> int:
    g = read_graph(args.graph)
    if args.cograph:
        order = cograph_order(g)
    elif args.witness is None:
        raise UsageError("a witness file is required unless --cograph is given")
    else:
        seq = _load_witness(args, g)
        if args.per_component:
            order = nice_order_per_component(seq, args.s)
        else:
            order = nice_order_incremental(seq, args.s)
    _emit(format_order(order), args.out)
    info = sys.stderr if args.out in (None, "-") else sys.stdout
    for r in args.r:
        p = profile(g, order, r, budget=args.budget)
        print(f"r={r} wcol={p.wcol} scol={p.scol} adm={p.adm}", file=info)
    return EXIT_OK


def cmd_params(args) -> int:
    g = read_graph(args.graph)
    order = read_order(args.order, g) if args.order else LinearOrder.identity(g.n)
    if args.profile:
        if args.exact:
            raise UsageError("--profile describes one order and cannot be combined with --exact")
        chunks = []
        for r in args.r:
            p = profile(g, order, r, budget=args.budget)
            chunks.append(profile_csv(p) if args.format == "csv" else profile_json(p) + "\n")
        _emit("".join(chunks), args.out)
        return EXIT_OK

    rows = []
    for r in args.r:
        row = {"r": r}
        if args.exact:
            for which in PARAMS:
                row[which] = exact_param(g, which, r, budget=args.budget, limit=args.limit)[0]
        else:
            p = profile(g, order, r, budget=args.budget)
            row.update(wcol=p.wcol, scol=p.scol, adm=p.adm)
        rows.append(row)
    if args.format == "json":
        text = json.dumps({"exact": args.exact, "rows": rows}, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=("r",) + PARAMS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def _atlas_instances(max_n):
    import networkx as nx

    for idx, h in enumerate(nx.graph_atlas_g()):
        if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h):
            yield f"atlas-{idx:04d}", Graph.from_networkx(h)


def _verify_atlas_one(job):
    instance, g, radii, budget = job
    _, seq = exact_tww(g, budget=budget)
    return verify_instance(g, seq, radii, instance=instance, budget=budget)


def cmd_verify(args) -> int:
    if args.all_connected:
        if args.max_n is None:
            raise UsageError("--all-connected needs --max-n")
        if args.max_n > 7:
            raise UsageError("the graph atlas stops at 7 vertices")
        jobs = [(name, g, args.r, args.budget) for name, g in _atlas_instances(args.max_n)]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_verify_atlas_one, jobs, chunksize=8))
        else:
            reports = [_verify_atlas_one(j) for j in jobs]
        reports.sort(key=lambda rep: rep.instance)
    else:
        if args.graph is None or args.witness is None:
            raise UsageError("verify needs GRAPH and WITNESS, or --all-connected --max-n N")
        g = read_graph(args.graph)
        seq = _load_witness(args, g)
        reports = [verify_instance(g, seq, args.r, instance=Path(args.graph).stem,
                                   budget=args.budget)]

    if args.format == "json":
        text = json.dumps([rep.as_dict() for rep in reports], indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for rep in reports:
            w.writerows(rep.csv_rows())
        text = buf.getvalue()
    _emit(text, args.out)

    tally = {}
    for rep in reports:
        for c in rep.checks:
            tally[c.verdict] = tally.get(c.verdict, 0) + 1
    partial = sum(rep.partial for rep in reports)
    counts = " ".join(f"{k}={v}" for k, v in sorted(tally.items()))
    print(f"instances={len(reports)} partial={partial} {counts}", file=sys.stderr)
    for rep in reports:
        for c in rep.violated:
            print(f"VIOLATED {rep.instance} {c.name} r={c.r}: {c.computed} > {c.bound}",
                  file=sys.stderr)
    return EXIT_VIOLATED if any(rep.violated for rep in reports) else EXIT_OK


def cmd_tww(args) -> int:
    g = read_graph(args.graph)
    d, seq = exact_tww(g, budget=args.budget, limit=args.limit)
    if args.out:
        Path(args.out).write_text(format_witness(seq))
    print(d)
    return EXIT_OK


def cmd_girth(args) -> int:
    print(girth(read_graph(args.graph)))
    return EXIT_OK


def cmd_bomega(args) -> int:
    print(bomega(read_graph(args.graph), budget=args.budget))
    return EXIT_OK


def cmd_degeneracy(args) -> int:
    g = read_graph(args.graph)
    k, order = degeneracy(g)
    if args.out:
        Path(args.out).write_text(format_order(order))
    print(k)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twwcol",
        description="Twin-width witnesses, nice vertex orders and generalized colouring numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def budgeted(p):
        p.add_argument("--budget", type=positive_int, default=None,
                       help="search budget (default: $TWW_BUDGET or 10^7)")

    def radii(p, default="1..3"):
        p.add_argument("--r", type=parse_radii, default=parse_radii(default),
                       help=f"radii, e.g. 2, 1..4 or 1,3 (default {default})")

    def witness_opts(p):
        p.add_argument("--scheme", choices=("fresh", "pace"), default="fresh",
                       help="witness id scheme: merges create node n+k (fresh) "
                            "or keep the first id (pace)")

    p = sub.add_parser("gen", help="generate a graph family")
    p.add_argument("kind", choices=("subdivided-clique", "theta-lift", "two-lift-tower",
                                    "lex-clique", "cograph", "complete"))
    p.add_argument("--n", type=positive_int)
    p.add_argument("--k", type=int, help="subdivisions per edge")
    p.add_argument("--s", type=positive_int, help="clique size for lex-clique")
    p.add_argument("--base", type=named_graph, default=named_graph("k4"),
                   help="base graph: kN, cN, pN or petersen (default k4)")
    p.add_argument("--levels", type=int, help="number of 2-lifts in a tower")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"random seed (default {DEFAULT_SEED})")
    p.add_argument("--guard", type=positive_int, default=generators.DEFAULT_SIZE_GUARD,
                   help="refuse to build graphs with more vertices")
    p.add_argument("--girth", action="store_true", help="report the girth")
    p.add_argument("-o", "--out", help="graph file (default stdout)")
    p.add_argument("--witness-out", help="witness file for towers (default OUT.witness)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("order", help="nice vertex order from a contraction witness")
    p.add_argument("graph")
    p.add_argument("witness", nargs="?")
    p.add_argument("--s", type=positive_int, help="smallness threshold (default: biclique number)")
    p.add_argument("--cograph", action="store_true", help="use the cotree order, no witness")
    p.add_argument("--per-component", action="store_true",
                   help="order connected components independently")
    p.add_argument("-o", "--out", help="order file (default stdout)")
    witness_opts(p)
    radii(p)
    budgeted(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("params", help="wcol, scol and adm of an order or exactly")
    p.add_argument("graph")
    p.add_argument("--order", help="order file (default: vertex id order)")
    p.add_argument("--exact", action="store_true", help="minimise over all orders")
    p.add_argument("--limit", type=positive_int, default=11, help="largest n for --exact")
    p.add_argument("--profile", action="store_true", help="per-vertex table instead of maxima")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--out")
    radii(p)
    budgeted(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("verify", help="check every bound on one instance or the atlas")
    p.add_argument("graph", nargs="?")
    p.add_argument("witness", nargs="?")
    p.add_argument("--all-connected", action="store_true",
                   help="every connected graph of the atlas, with optimal witnesses")
    p.add_argument("--max-n", type=positive_int)
    p.add_argument("--jobs", type=positive_int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("-o", "--out")
    witness_opts(p)
    radii(p)
    budgeted(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tww", help="exact twin-width with a witness")
    p.add_argument("graph")
    p.add_argument("-o", "--out", help="write the witness here")
    p.add_argument("--limit", type=positive_int, default=9, help="largest n searched")
    budgeted(p)
    p.set_defaults(func=cmd_tww)

    p = sub.add_parser("girth", help="length of a shortest cycle")
    p.add_argument("graph")
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("bomega", help="largest s with K_{s,s} as a subgraph")
    p.add_argument("graph")
    budgeted(p)
    p.set_defaults(func=cmd_bomega)

    p = sub.add_parser("degeneracy", help="degeneracy and a degeneracy order")
    p.add_argument("graph")
    p.add_argument("-o", "--out", help="write the order here")
    p.set_defaults(func=cmd_degeneracy)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"twwcol: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, SizeGuardError) as exc:
        extra = ""
        if getattr(exc, "best_known", None) is not None:
            extra = f" (best known: {exc.best_known})"
        print(f"twwcol: resource limit: {exc}{extra}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DisconnectedGraphError, NotACographError) as exc:
        print(f"twwcol: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (TwwColError, ValueError, OSError) as exc:
        print(f"twwcol: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
