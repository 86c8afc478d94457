"""Command-line front end: compute, verify, enumerate, generate, benchmark.

Exit codes are fixed so shell harnesses can tell failure classes apart:

* 0 success (``verify``: ordering valid)
* 1 ``verify``: ordering invalid (diagnostic on stderr)
* 2 malformed input, bad arguments, refused enumeration size
* 3 disconnected graph without ``--allow-disconnected``
* 4 ``order --check``: self-verification failed
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import ENGINES, FAMILIES, FAST_ENGINES, run_bench
from .counters import OpCounters
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    format_edge_list,
    generate,
    parse_dimacs,
    parse_edge_list,
)
from .labels import SearchKind, format_label
from .reference import InvalidPrefixError, enumerate_orderings, reference_search
from .verify import replay_selection_labels, verify_ordering

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_BAD_INPUT = 2
EXIT_DISCONNECTED = 3
EXIT_CHECK_FAILED = 4

ENUMERATE_SIZE_LIMIT = 12


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", default="-",
                   help="graph file, or - for standard input (default)")
    p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p.add_argument("--source", type=int, default=None,
                   help="start vertex, overriding the input file")
    p.add_argument("--allow-disconnected", action="store_true",
                   help="restart at the smallest unnumbered vertex instead of "
                        "rejecting disconnected graphs")


def _add_search_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--search", required=True,
                   choices=("lexbfs", "lexup", "lexdfs", "lexdown"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexsearch",
        description="Lexicographic graph search orderings "
                    "(LexBFS, LexUP, LexDFS, LexDOWN).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_order = sub.add_parser("order", help="compute an ordering")
    _add_search_arg(p_order)
    _add_graph_args(p_order)
    p_order.add_argument("--engine", choices=ENGINES, default="fast")
    p_order.add_argument("--trace", action="store_true",
                         help="print one 'step i: vertex v label [...]' line per step")
    p_order.add_argument("--check", action="store_true",
                         help="verify the computed ordering; exit 4 on failure")
    p_order.add_argument("--json", action="store_true",
                         help="emit {'order': ..., 'counters': ...} JSON")

    p_verify = sub.add_parser("verify", help="check an ordering file")
    _add_search_arg(p_verify)
    _add_graph_args(p_verify)
    p_verify.add_argument("--ordering", required=True,
                          help="file of whitespace-separated 1-based vertex ids")

    p_enum = sub.add_parser("enumerate", help="list all orderings of a search")
    _add_search_arg(p_enum)
    _add_graph_args(p_enum)
    p_enum.add_argument("--prefix", default="",
                        help="forced ordering prefix, e.g. '1 2'")
    p_enum.add_argument("--limit", type=int, default=None)
    p_enum.add_argument("--force", action="store_true",
                        help=f"enumerate even when n > {ENUMERATE_SIZE_LIMIT}")

    p_gen = sub.add_parser("generate", help="emit a graph from a family")
    p_gen.add_argument("--family", required=True,
                       choices=("grid", "path", "cycle", "clique", "random"))
    p_gen.add_argument("--rows", type=int)
    p_gen.add_argument("--cols", type=int)
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--p", type=float)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--source", type=int, default=1)

    p_bench = sub.add_parser("bench", help="operation-count benchmark (JSON)")
    _add_search_arg(p_bench)
    p_bench.add_argument("--family", required=True, choices=FAMILIES)
    p_bench.add_argument("--sizes", required=True,
                         help="comma-separated vertex counts, e.g. 1000,2000")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--engine", choices=ENGINES, default="fast")

    return parser


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    g = parse_dimacs(text) if args.format == "dimacs" else parse_edge_list(text)
    if args.source is not None:
        g = g.with_source(args.source)
    return g


def cmd_order(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    kind = SearchKind.from_name(args.search)
    if args.engine == "reference":
        sigma, trace = reference_search(
            g, kind, record_candidates=False,
            allow_disconnected=args.allow_disconnected,
        )
        counters = OpCounters(
            comparisons=trace.comparisons, label_entries=trace.label_entries
        )
        selection_labels = trace.selection_labels() if args.trace else None
    else:
        sigma, counters = FAST_ENGINES[kind](
            g, allow_disconnected=args.allow_disconnected
        )
        selection_labels = (
            replay_selection_labels(
                g, kind, sigma, allow_disconnected=args.allow_disconnected
            )
            if args.trace
            else None
        )
    trace_lines = None
    if args.trace:
        trace_lines = [
            f"step {i}: vertex {v} label {format_label(lab)}"
            for i, (v, lab) in enumerate(zip(sigma, selection_labels), start=1)
        ]
    if args.check:
        verdict = verify_ordering(
            g, kind, sigma, allow_disconnected=args.allow_disconnected
        )
        if not verdict:
            print(f"self-check failed: {verdict.message()}", file=sys.stderr)
            return EXIT_CHECK_FAILED
    if args.json:
        payload = {"order": sigma, "counters": counters.to_json_dict()}
        if trace_lines is not None:
            payload["trace"] = trace_lines
        print(json.dumps(payload))
    else:
        if trace_lines:
            print("\n".join(trace_lines))
        print(" ".join(str(v) for v in sigma))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    kind = SearchKind.from_name(args.search)
    with open(args.ordering, "r", encoding="utf-8") as handle:
        tokens = handle.read().split()
    try:
        sigma = [int(t) for t in tokens]
    except ValueError as exc:
        print(f"malformed ordering file: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    verdict = verify_ordering(
        g, kind, sigma, allow_disconnected=args.allow_disconnected
    )
    if verdict:
        print("valid")
        return EXIT_OK
    print(verdict.message(), file=sys.stderr)
    return EXIT_INVALID


def cmd_enumerate(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    kind = SearchKind.from_name(args.search)
    if g.n > ENUMERATE_SIZE_LIMIT and not args.force:
        print(
            f"refusing to enumerate n={g.n} > {ENUMERATE_SIZE_LIMIT} "
            "(use --force to override)",
            file=sys.stderr,
        )
        return EXIT_BAD_INPUT
    prefix = [int(t) for t in args.prefix.split()] if args.prefix.strip() else []
    orderings = enumerate_orderings(g, kind, prefix=prefix, limit=args.limit)
    for sigma in orderings:
        print(" ".join(str(v) for v in sigma))
    print(f"count {len(orderings)}")
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    params = {"source": args.source}
    if args.family == "grid":
        if args.rows is None or args.cols is None:
            print("grid needs --rows and --cols", file=sys.stderr)
            return EXIT_BAD_INPUT
        params.update(rows=args.rows, cols=args.cols)
    elif args.family == "random":
        if args.n is None or args.p is None:
            print("random needs --n and --p", file=sys.stderr)
            return EXIT_BAD_INPUT
        params.update(n=args.n, p=args.p, seed=args.seed)
    else:
        if args.n is None:
            print(f"{args.family} needs --n", file=sys.stderr)
            return EXIT_BAD_INPUT
        params.update(n=args.n)
    g = generate(args.family, **params)
    sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(t) for t in args.sizes.split(",") if t.strip()]
    except ValueError:
        print(f"malformed --sizes: {args.sizes!r}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if not sizes or any(s < 1 for s in sizes):
        print("sizes must be positive integers", file=sys.stderr)
        return EXIT_BAD_INPUT
    report = run_bench(
        args.family, sizes, args.seed, SearchKind.from_name(args.search), args.engine
    )
    print(json.dumps(report, indent=2))
    return EXIT_OK


_COMMANDS = {
    "order": cmd_order,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "generate": cmd_generate,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except InvalidPrefixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
