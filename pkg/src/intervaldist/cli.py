"""Command-line interface.

Exit codes: 0 success, 1 not an interval graph (or a failed check), 2 usage
or input-format error, 3 scale or work limit reached.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .counting import count_at_node, distinguishing_number, labeled
from .errors import (
    DisconnectedGraph,
    GraphFormatError,
    ListAssignmentError,
    NoColoringFound,
    NotIntervalGraph,
    ScaleLimit,
)
from .graph import Graph, parse_graph_text
from .labeling import labeled_to_dot, labeled_to_json
from .listcolor import construct_list_coloring, format_coloring, parse_list_file
from .oracle import corpus_manifest, random_interval_graph
from .verification import run_all

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_SCALE = 0, 1, 2, 3


def _read_graph(path: str | None, stdin: TextIO) -> Graph:
    if path is None or path == "-":
        text = stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_graph_text(text)


def _cmd_recognize(args, out, stdin) -> int:
    g = _read_graph(args.input, stdin)
    try:
        labeled(g)
    except NotIntervalGraph:
        print("not interval", file=out)
        return EXIT_NEGATIVE
    print("interval", file=out)
    return EXIT_OK


def _cmd_pqtree(args, out, stdin) -> int:
    lt = labeled(_read_graph(args.input, stdin))
    out.write(labeled_to_dot(lt) if args.format == "dot" else labeled_to_json(lt) + "\n")
    return EXIT_OK


def _cmd_dnumber(args, out, stdin) -> int:
    print(f"D(G) = {distinguishing_number(_read_graph(args.input, stdin))}", file=out)
    return EXIT_OK


def _cmd_count(args, out, stdin) -> int:
    if args.k < 1:
        raise GraphFormatError("--k must be positive")
    lt = labeled(_read_graph(args.input, stdin))
    print(f"D(G;{args.k}) = {count_at_node(lt, 0, args.k)}", file=out)
    return EXIT_OK


def _cmd_listcolor(args, out, stdin) -> int:
    g = _read_graph(args.input, stdin)
    with open(args.lists) as fh:
        lists = parse_list_file(fh.read())
    out.write(format_coloring(construct_list_coloring(g, lists)))
    return EXIT_OK


def _cmd_verify(args, out, stdin) -> int:
    if not 1 <= args.nmax <= 7:
        raise GraphFormatError("--nmax must be between 1 and 7")
    for n, count, digest in corpus_manifest(args.nmax):
        print(f"corpus n={n} graphs={count} sha256={digest}", file=out)
    results = run_all(args.nmax, args.trials, args.seed)
    for r in results:
        print(r.line(), file=out)
    passed = all(r.passed for r in results)
    print(f"{'ALL PASS' if passed else 'FAILURES'} {sum(r.passed for r in results)}/{len(results)}", file=out)
    return EXIT_OK if passed else EXIT_NEGATIVE


def _cmd_gen(args, out, stdin) -> int:
    if args.n < 1:
        raise GraphFormatError("--n must be positive")
    out.write(random_interval_graph(args.n, args.seed).to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intervaldist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", help="edge-list or interval file (default: stdin)")
        return p

    graph_command("recognize", "decide whether the graph is an interval graph").set_defaults(func=_cmd_recognize)
    p = graph_command("pqtree", "print the labeled PQ-tree")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_pqtree)
    graph_command("dnumber", "print the distinguishing number").set_defaults(func=_cmd_dnumber)
    p = graph_command("count", "print the number of classes of distinguishing k-colorings")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_count)
    p = graph_command("listcolor", "print a distinguishing coloring from the given lists")
    p.add_argument("--lists", required=True, help="list file: 'n k' then n lines of k colors")
    p.set_defaults(func=_cmd_listcolor)

    p = sub.add_parser("verify", help="cross-check against the brute-force oracle")
    p.add_argument("--nmax", type=int, default=7)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="print a random interval representation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None,
        stdin: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out, stdin)
    except NotIntervalGraph as exc:
        print(f"error: not an interval graph: {exc}", file=err)
        return EXIT_NEGATIVE
    except (GraphFormatError, DisconnectedGraph, ListAssignmentError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (ScaleLimit, NoColoringFound) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_SCALE
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
