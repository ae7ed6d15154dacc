"""Command-line interface.

Exit codes: 0 success (or positive verdict), 1 negative verdict, 2 usage
error, 3 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import chordal, megset, oracle
from .errors import IdOutOfRange, InvalidParam, MegkitError, ParseError, SizeCapExceeded
from .graph import UNREACHABLE, bfs_distances
from .io import GraphDocument, format_dimacs, format_edgelist, parse_graph

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _id_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _read(path: str) -> tuple[bytes, GraphDocument]:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError("Malformed", data[: exc.start].count(b"\n") + 1, "not UTF-8 text") from None
    return data, parse_graph(text)


def _labels(doc: GraphDocument, vs) -> list[int]:
    return sorted(doc.label(v) for v in vs)


def _fmt_set(labels) -> str:
    return "{" + ", ".join(str(x) for x in labels) + "}"


def _vertices(doc: GraphDocument, labels: list[int]) -> list[int]:
    try:
        return [doc.vertex_of(x) for x in labels]
    except IdOutOfRange as exc:
        raise UsageError(str(exc)) from None


def _edge(doc, e):
    return [doc.label(e[0]), doc.label(e[1])]


def cmd_mandatory(args, doc):
    g = doc.graph
    fn = megset.mandatory_naive if args.naive else megset.mandatory_fast
    mand = _labels(doc, fn(g))
    result = {"algorithm": "naive" if args.naive else "fast", "mandatory": mand, "size": len(mand)}
    return EXIT_OK, result, _fmt_set(mand)


def cmd_verify(args, doc):
    g = doc.graph
    labels = _id_list(args.set)
    members = _vertices(doc, labels)
    report = megset.monitored_edges(g, members)
    result = {
        "set": sorted(set(labels)),
        "is_meg_set": report.is_meg_set,
        "total_edges": report.total_edges,
        "monitored_count": report.monitored_count,
        "edges": [
            {"edge": _edge(doc, r.edge), "monitored": r.monitored,
             "witnesses": [_edge(doc, p) for p in r.witnesses]}
            for r in report.records
        ],
    }
    verdict = "meg-set" if report.is_meg_set else "not a meg-set"
    lines = [f"{verdict} ({report.monitored_count} of {report.total_edges} edges monitored)"]
    missing = report.unmonitored
    if missing:
        lines.append("unmonitored: " + " ".join("{}-{}".format(*_edge(doc, e)) for e in missing))
    return (EXIT_OK if report.is_meg_set else EXIT_NO), result, "\n".join(lines)


def cmd_chordal(args, doc):
    cert = chordal.check_chordal(doc.graph)
    verts = [doc.label(v) for v in cert.vertices]
    result = {"chordal": cert.is_chordal, "certificate": {"kind": cert.kind, "vertices": verts}}
    if cert.is_chordal:
        text = "chordal\nPEO: " + " ".join(map(str, verts))
    else:
        text = "not chordal\nhole " + "-".join(map(str, verts))
    return (EXIT_OK if cert.is_chordal else EXIT_NO), result, text


def cmd_minmeg(args, doc):
    res = oracle.min_meg_brute(doc.graph, use_mandatory_pruning=not args.no_prune,
                               max_size=args.max_size, check_unique=not args.skip_unique)
    opt = _labels(doc, res.optimum)
    result = {
        "optimum": opt,
        "optimum_size": res.optimum_size,
        "is_unique_minimum": res.is_unique_minimum,
        "nodes_enumerated": res.nodes_enumerated,
        "pruning": not args.no_prune,
    }
    uniq = {True: "unique minimum", False: "not unique", None: "uniqueness not checked"}
    text = (f"{_fmt_set(opt)}\nsize {res.optimum_size}, {uniq[res.is_unique_minimum]}, "
            f"{res.nodes_enumerated} sets enumerated")
    return EXIT_OK, result, text


def cmd_monitor(args, doc):
    g = doc.graph
    pair = _id_list(args.pair)
    if len(pair) != 2 or pair[0] == pair[1]:
        raise UsageError("--pair needs two distinct vertices, e.g. --pair 0,2")
    a, b = _vertices(doc, pair)
    edges = megset.edges_monitored_by_pair(g, a, b)
    d = bfs_distances(g, a)[b]
    result = {
        "pair": sorted(pair),
        "distance": None if d is UNREACHABLE else d,
        "monitored_edges": [_edge(doc, e) for e in edges],
    }
    dist = "unreachable" if d is UNREACHABLE else f"distance {d}"
    text = f"pair {_fmt_set(sorted(pair))} at {dist} monitors {len(edges)} edge(s)"
    if edges:
        text += ": " + " ".join("{}-{}".format(*_edge(doc, e)) for e in edges)
    return EXIT_OK, result, text


def cmd_gen(args):
    try:
        g = chordal.gen_chordal(args.n, args.attach, args.seed, max_degree=args.max_degree)
    except InvalidParam as exc:
        raise UsageError(str(exc)) from None
    return format_dimacs(g) if args.format == "dimacs" else format_edgelist(g)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="megkit", description="Monitoring edge-geodetic sets of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="graph file (edge list or DIMACS); '-' for stdin")
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        return sp

    sp = with_file("mandatory", "list the mandatory vertices")
    sp.add_argument("--naive", action="store_true", help="use the direct support check")
    sp = with_file("verify", "check whether a vertex set is a meg-set")
    sp.add_argument("--set", required=True, help="comma-separated vertices, may be empty")
    with_file("chordal", "test chordality and print a certificate")
    sp = with_file("minmeg", "exhaustive minimum meg-set (small graphs)")
    sp.add_argument("--no-prune", action="store_true", help="do not force mandatory vertices")
    sp.add_argument("--skip-unique", action="store_true", help="skip the uniqueness pass")
    sp.add_argument("--max-size", type=int, default=None, metavar="K")
    sp = with_file("monitor", "edges monitored by one vertex pair")
    sp.add_argument("--pair", required=True, help="two vertices, e.g. 0,2")

    sp = sub.add_parser("gen", help="generate a random connected chordal graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--attach", type=int, required=True, help="maximum attachment clique size")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--max-degree", type=int, default=None)
    sp.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    return p


COMMANDS = {
    "mandatory": cmd_mandatory,
    "verify": cmd_verify,
    "chordal": cmd_chordal,
    "minmeg": cmd_minmeg,
    "monitor": cmd_monitor,
}


def _thread_cap() -> int:
    """Value of ``MEGKIT_THREADS`` (0 = default). All kernels run on one
    thread, so any cap is already honoured; the variable is only validated."""
    raw = os.environ.get("MEGKIT_THREADS", "").strip()
    if not raw:
        return 0
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"MEGKIT_THREADS must be an integer, got {raw!r}") from None
    if cap < 0:
        raise UsageError("MEGKIT_THREADS must be >= 0")
    return cap


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        _thread_cap()
        if args.command == "gen":
            stdout.write(cmd_gen(args))
            return EXIT_OK
        try:
            data, doc = _read(args.file)
        except OSError as exc:
            print(f"megkit: error: cannot read {args.file}: {exc.strerror}", file=stderr)
            return EXIT_PARSE
        t0 = time.perf_counter()
        code, result, text = COMMANDS[args.command](args, doc)
        elapsed = (time.perf_counter() - t0) * 1000.0
    except UsageError as exc:
        print(f"megkit: error: {exc}", file=stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"megkit: parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except SizeCapExceeded as exc:
        print(f"megkit: {exc}", file=stderr)
        return EXIT_NO
    except MegkitError as exc:
        print(f"megkit: error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.json:
        g = doc.graph
        payload = {
            "command": args.command,
            "input": {
                "sha256": hashlib.sha256(data).hexdigest(),
                "format": doc.format,
                "n": g.n,
                "m": g.m,
            },
            "result": result,
            "timing_ms": round(elapsed, 3),
        }
        stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        stdout.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
