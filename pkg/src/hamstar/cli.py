"""hamstar: command-line front end.

Exit status: 0 when everything checked out, 1 when a counterexample was
found, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import shutil
import subprocess
import sys
from typing import Iterator, Optional, Sequence

from .enumerate import graphs_up_to
from .errors import HamstarError
from .extractor import extract_star
from .graph import Graph, equality_family, sharpness_family
from .graph6 import parse_graph6, read_graph6, to_graph6
from .verdict import COUNTEREXAMPLE
from .verifier import MODES, check_main_theorem, sweep

SCHEMA = 1
INTERNAL_MAX_N = 9

log = logging.getLogger("hamstar")


class UsageError(Exception):
    pass


def _emit(doc: dict, fmt: str):
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA, **doc}))
    else:
        for key, value in doc.items():
            print(f"{key}: {value}")


def _input_graphs(args) -> Iterator[Graph]:
    if args.graph is not None:
        yield parse_graph6(args.graph, line=1)
        return
    if args.input == "-":
        yield from read_graph6(sys.stdin)
        return
    with open(args.input) as fh:
        yield from read_graph6(fh)


def _cmd_check(args) -> int:
    status = 0
    for g in _input_graphs(args):
        verdict = check_main_theorem(g, args.t, args.strict)
        if verdict.kind == COUNTEREXAMPLE:
            status = 1
        _emit({"graph6": to_graph6(g), "t": args.t, "strict": args.strict,
               "verdict": verdict.to_json()}, args.format)
    return status


def _cmd_extract(args) -> int:
    status = 0
    for g in _input_graphs(args):
        verdict = extract_star(g, args.t, args.strict)
        if verdict.kind == COUNTEREXAMPLE:
            status = 1
        doc = {"graph6": to_graph6(g), "t": args.t, "verdict": verdict.to_json()}
        if verdict.trace is not None:
            doc["trace"] = verdict.trace.to_json()
        _emit(doc, args.format)
    return status


def _geng_lines(n: int, connected: bool) -> Iterator[str]:
    geng = shutil.which("geng") or shutil.which("nauty-geng")
    if geng is None:
        raise UsageError(f"n={n} is beyond the internal enumerator (n <= {INTERNAL_MAX_N}); "
                         "install nauty's geng or pass --input")
    cmd = [geng, "-q"] + (["-c"] if connected else []) + [str(n)]
    with subprocess.Popen(cmd, stdout=subprocess.PIPE, text=True) as proc:
        yield from proc.stdout
    if proc.returncode:
        raise UsageError(f"geng exited with status {proc.returncode}")


def _enumerated(n_min: int, n_max: int, connected: bool) -> Iterator[str]:
    internal_top = min(n_max, INTERNAL_MAX_N)
    if n_min <= internal_top:
        for g in graphs_up_to(internal_top, connected=connected, n_min=n_min):
            yield to_graph6(g)
    for n in range(max(n_min, INTERNAL_MAX_N + 1), n_max + 1):
        yield from _geng_lines(n, connected)


def _cmd_sweep(args) -> int:
    if args.input is not None:
        stream = sys.stdin if args.input == "-" else open(args.input)
    else:
        if args.n_max is None:
            raise UsageError("sweep needs --n-max or --input")
        # the degree-sum inequality holds for all graphs; the other checks need connectivity
        stream = _enumerated(args.n_min, args.n_max, connected=args.mode != "lemma1")
    try:
        report = sweep(stream, args.t, args.mode, args.strict, jobs=args.jobs)
    finally:
        if hasattr(stream, "close") and stream is not sys.stdin:
            stream.close()
    doc = report.to_json(timing=args.timing)
    doc.pop("schema")
    _emit(doc, args.format)
    return 1 if report.counterexamples else 0


def _cmd_gen_family(args) -> int:
    if args.h_graph is not None:
        g = equality_family(parse_graph6(args.h_graph, line=1), args.t)
    else:
        g = sharpness_family(args.t)
    if args.format == "json":
        _emit({"t": args.t, "n": g.n, "graph6": to_graph6(g)}, "json")
    else:
        print(to_graph6(g))
    return 0


def _cmd_codec(args) -> int:
    if args.decode is not None:
        g = parse_graph6(args.decode, line=1)
        _emit({"n": g.n, "edges": [list(e) for e in g.edges()], "graph6": to_graph6(g)}, args.format)
        return 0
    try:
        doc = json.loads(args.encode)
        g = Graph.from_edges(int(doc["n"]), [tuple(e) for e in doc.get("edges", [])])
    except (ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, HamstarError):
            raise
        raise UsageError(f"--encode expects JSON like {{\"n\": 3, \"edges\": [[0, 1]]}}: {exc}")
    if args.format == "json":
        _emit({"n": g.n, "graph6": to_graph6(g)}, "json")
    else:
        print(to_graph6(g))
    return 0


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("HAMSTAR_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamstar", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph_input=True):
        p.add_argument("--t", type=int, required=True, help="star size t (>= 5)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        if graph_input:
            src = p.add_mutually_exclusive_group(required=True)
            src.add_argument("--graph", help="one graph in graph6")
            src.add_argument("--input", help="file of graph6 lines, or - for stdin")
        p.add_argument("--strict", action=argparse.BooleanOptionalAction, default=True,
                       help="require sigma_2 strictly above the threshold (default)")

    p = sub.add_parser("check", help="decide the theorem's conclusion for given graphs")
    common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("extract", help="extract a star certificate with its trace")
    common(p)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("sweep", help="check every graph from an enumeration or file")
    common(p, graph_input=False)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--n-max", type=int, help="enumerate graphs with n-min..n-max vertices")
    src.add_argument("--input", help="file of graph6 lines, or - for stdin")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--mode", choices=MODES, default="main")
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="worker processes (default: $HAMSTAR_JOBS or 1)")
    p.add_argument("--timing", action="store_true", help="report wall time (output no longer reproducible)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("gen-family", help="print the sharpness graph, or H joined with t-1 independent vertices")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--h-graph", help="graph6 of H on t-3 vertices")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_gen_family)

    p = sub.add_parser("codec", help="graph6 encode/decode")
    op = p.add_mutually_exclusive_group(required=True)
    op.add_argument("--encode", metavar="JSON", help='e.g. \'{"n": 3, "edges": [[0, 1]]}\'')
    op.add_argument("--decode", metavar="GRAPH6")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_codec)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (HamstarError, UsageError, OSError) as exc:
        print(f"hamstar: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
