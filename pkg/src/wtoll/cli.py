"""Command-line interface.

Every analysis command prints one JSON run report:

    {"command": ..., "input": {"n": ..., "m": ..., "hash": ...},
     "result": {...operation payload..., "ms": ...}}

``--plain`` switches to short human-readable lines. Graph files are
edge lists (`.el`, default) or graph6 (`.g6`), auto-detected by extension
and overridable with ``--format``; the path ``-`` reads standard input.

Exit codes: 0 success, 2 parse/argument error, 3 disconnected input where
connectivity is required, 4 wtc cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .atoms import decompose
from .convexity import DEFAULT_WTC_CAP, clique_reduction, reduction_edge_list, wtc_exact
from .errors import CapExceededError, DisconnectedGraphError, GraphParseError
from .generators import (
    bowtie_graph,
    complete_graph,
    cycle_graph,
    gnp_graph,
    path_graph,
    star_graph,
)
from .graph import Graph, parse_edge_list, parse_graph6, to_edge_list
from .intervals import extreme_vertices, hull, interval
from .invariants import wth, wtn
from .twins import twin_classes

__all__ = ["main", "entry"]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "auto":
        fmt = "g6" if path.endswith(".g6") else "el"
    if fmt == "g6":
        for line in text.splitlines():
            if line.strip():
                return parse_graph6(line)
        raise GraphParseError("empty graph6 input")
    return parse_edge_list(text)


def _report(command: str, g: Graph, result: dict) -> dict:
    return {
        "command": command,
        "input": {"n": g.n, "m": g.m, "hash": g.fingerprint()},
        "result": result,
    }


def _emit(args: argparse.Namespace, report: dict, plain: str) -> None:
    if args.plain:
        print(plain)
    else:
        print(json.dumps(report, sort_keys=True))


def _timed(fn, *fn_args):
    t0 = time.perf_counter()
    out = fn(*fn_args)
    return out, round((time.perf_counter() - t0) * 1000.0, 3)


def _cmd_set_op(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    op = interval if args.command == "interval" else hull
    result, ms = _timed(op, g, args.vertices)
    payload = {"set": sorted(result), "size": len(result), "ms": ms}
    _emit(args, _report(args.command, g, payload), " ".join(map(str, sorted(result))))
    return 0


def _cmd_invariant(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    if args.command == "wtn":
        res, ms = _timed(wtn, g)
    elif args.command == "wth":
        res, ms = _timed(wth, g)
    else:
        res, ms = _timed(wtc_exact, g, args.cap)
    payload = {
        "value": res.value,
        "witness": sorted(res.witness),
        "case_tag": res.case_tag,
        "ms": ms,
    }
    plain = (
        f"{args.command} = {res.value} (case {res.case_tag}); "
        f"witness: {' '.join(map(str, sorted(res.witness)))}"
    )
    _emit(args, _report(args.command, g, payload), plain)
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    dec, ms = _timed(decompose, g)
    atoms = [
        {
            "vertices": sorted(a),
            "shared": sorted(s),
            "exclusive": sorted(e),
            "extremal": x,
        }
        for a, s, e, x in zip(dec.atoms, dec.shared, dec.exclusive, dec.extremal)
    ]
    payload = {"atoms": atoms, "count": len(atoms), "ms": ms}
    plain = "\n".join(
        f"atom {i}: {{{' '.join(map(str, a['vertices']))}}}"
        f" shared={{{' '.join(map(str, a['shared']))}}}"
        f"{' extremal' if a['extremal'] else ''}"
        for i, a in enumerate(atoms)
    )
    _emit(args, _report("decompose", g, payload), plain)
    return 0


def _cmd_twins(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    part, ms = _timed(twin_classes, g)
    payload = {"classes": [sorted(c) for c in part.classes], "ms": ms}
    plain = "\n".join(
        f"class {i}: {' '.join(map(str, sorted(c)))}" for i, c in enumerate(part.classes)
    )
    _emit(args, _report("twins", g, payload), plain)
    return 0


def _cmd_extreme(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.format)
    ext, ms = _timed(extreme_vertices, g)
    payload = {"set": sorted(ext), "size": len(ext), "ms": ms}
    _emit(args, _report("extreme", g, payload), " ".join(map(str, sorted(ext))))
    return 0


def _generate(args: argparse.Namespace) -> str:
    family = args.family
    params = args.params
    simple = {
        "path": path_graph,
        "cycle": cycle_graph,
        "complete": complete_graph,
        "star": star_graph,
    }
    if family in simple:
        if len(params) != 1:
            raise ValueError(f"{family} takes one parameter: the vertex count")
        return to_edge_list(simple[family](int(params[0])))
    if family == "bowtie":
        if params:
            raise ValueError("bowtie takes no parameters")
        return to_edge_list(bowtie_graph())
    if family == "random-gnp":
        if len(params) != 2:
            raise ValueError("random-gnp takes two parameters: n and p")
        return to_edge_list(gnp_graph(int(params[0]), float(params[1]), seed=args.seed))
    if family == "clique-reduction":
        if len(params) != 2:
            raise ValueError("clique-reduction takes two parameters: a graph file and k")
        g = _load_graph(params[0], args.format)
        return reduction_edge_list(clique_reduction(g, int(params[1])))
    raise ValueError(f"unknown family {family!r}")


def _cmd_generate(args: argparse.Namespace) -> int:
    text = _generate(args)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _bench_pair(g: Graph) -> tuple[int, ...]:
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if not g.has_edge(u, w):
                return (u, w)
    return (0, 1) if g.n >= 2 else (0,)


def _cmd_bench(args: argparse.Namespace) -> int:
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["graph", "n", "m", "op", "value", "ms"])
    root = Path(args.corpus)
    files = sorted(p for p in root.iterdir() if p.suffix in (".el", ".g6"))
    for path in files:
        try:
            g = _load_graph(str(path), args.format)
        except (OSError, GraphParseError) as exc:
            print(f"warning: skipping {path.name}: {exc}", file=sys.stderr)
            continue
        pair = _bench_pair(g)
        ops = [
            ("interval", lambda: len(interval(g, pair))),
            ("hull", lambda: len(hull(g, pair))),
            ("wtn", lambda: wtn(g).value),
            ("wth", lambda: wth(g).value),
        ]
        for name, fn in ops:
            try:
                value, ms = _timed(fn)
            except (ValueError, CapExceededError) as exc:
                print(f"warning: {path.name} {name}: {exc}", file=sys.stderr)
                continue
            writer.writerow([path.name, g.n, g.m, name, value, ms])
    text = out.getvalue()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wtoll",
        description="Weakly toll walks, intervals, hulls, and convexity invariants.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("auto", "el", "g6"),
        default="auto",
        help="graph file format (default: by extension, .g6 = graph6, else edge list)",
    )
    common.add_argument(
        "--plain", action="store_true", help="human-readable output instead of JSON"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, doc in (("interval", "weakly toll interval I(S)"), ("hull", "weakly toll hull H(S)")):
        p = sub.add_parser(name, help=doc, parents=[common])
        p.add_argument("graph")
        p.add_argument("vertices", nargs="+", type=int)
        p.set_defaults(func=_cmd_set_op)

    for name, doc in (
        ("wtn", "weakly toll interval number"),
        ("wth", "weakly toll hull number"),
        ("wtc", "weakly toll convexity number"),
    ):
        p = sub.add_parser(name, help=doc, parents=[common])
        p.add_argument("graph")
        if name == "wtc":
            p.add_argument(
                "--cap",
                type=int,
                default=DEFAULT_WTC_CAP,
                help="max n for the exhaustive search on reducible graphs",
            )
        p.set_defaults(func=_cmd_invariant)

    for name, doc, func in (
        ("decompose", "maximal prime subgraphs (atoms)", _cmd_decompose),
        ("twins", "true-twin classes", _cmd_twins),
        ("extreme", "weakly toll extreme vertices", _cmd_extreme),
    ):
        p = sub.add_parser(name, help=doc, parents=[common])
        p.add_argument("graph")
        p.set_defaults(func=func)

    p = sub.add_parser("generate", help="emit a graph from a named family", parents=[common])
    p.add_argument(
        "family",
        choices=("path", "cycle", "complete", "star", "bowtie", "random-gnp", "clique-reduction"),
    )
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser(
        "bench", help="time interval/hull/wtn/wth over a corpus directory", parents=[common]
    )
    p.add_argument("corpus")
    p.add_argument("--output", "-o")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (GraphParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
