"""Edge-list and DIMACS graph formats.

Edge list::

    # comment
    n m
    u v        (m lines, 0-indexed)

DIMACS::

    c comment
    p edge n m
    e u v      (m lines, 1-indexed)

DIMACS documents carry a label table mapping vertex ``i`` to ``i + 1`` so
that reports speak the file's own numbering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateEdge, IdOutOfRange, ParseError, SelfLoop
from .graph import Graph, build_graph

__all__ = [
    "GraphDocument",
    "parse_edgelist",
    "parse_dimacs",
    "parse_graph",
    "format_edgelist",
    "format_dimacs",
]


@dataclass(frozen=True)
class GraphDocument:
    format: str
    graph: Graph
    labels: tuple[int, ...] | None = None

    def label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]

    def vertex_of(self, label: int) -> int:
        """Inverse of :meth:`label`; raises ``IdOutOfRange`` for unknown labels."""
        if self.labels is None:
            v = label
        else:
            v = label - self.labels[0] if self.labels else -1
        if not 0 <= v < self.graph.n:
            raise IdOutOfRange(f"unknown vertex label {label}")
        return v


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError("Malformed", lineno, f"expected an integer, got {tok!r}") from None


def _collect_edges(n: int, m: int, edges: list, header_line: int, last_line: int, offset: int) -> Graph:
    seen = set()
    pairs = []
    for lineno, u, v in edges:
        u -= offset
        v -= offset
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError("IdOutOfRange", lineno, f"vertex id outside the declared range")
        if u == v:
            raise ParseError("SelfLoop", lineno, f"self-loop at {u + offset}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError("DuplicateEdge", lineno, f"edge {u + offset} {v + offset} repeated")
        seen.add(key)
        pairs.append(key)
    if len(pairs) != m:
        raise ParseError("EdgeCountMismatch", last_line if pairs else header_line,
                         f"header declares {m} edges, found {len(pairs)}")
    try:
        return build_graph(n, pairs)
    except (IdOutOfRange, SelfLoop, DuplicateEdge) as exc:  # pragma: no cover - prevalidated
        raise ParseError(type(exc).__name__, header_line, str(exc)) from exc


def parse_edgelist(text: str) -> GraphDocument:
    header = None
    edges = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError("Malformed", lineno, f"expected two integers, got {raw.strip()!r}")
        a, b = _int(toks[0], lineno), _int(toks[1], lineno)
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("Malformed", lineno, "negative count in header")
            header = (a, b, lineno)
        else:
            edges.append((lineno, a, b))
            last = lineno
    if header is None:
        raise ParseError("Malformed", max(last, 1), "missing 'n m' header line")
    n, m, hline = header
    return GraphDocument("edgelist", _collect_edges(n, m, edges, hline, last, 0))


def parse_dimacs(text: str) -> GraphDocument:
    header = None
    edges = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        kind = toks[0]
        if kind == "p":
            if header is not None:
                raise ParseError("Malformed", lineno, "second 'p' line")
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise ParseError("Malformed", lineno, "expected 'p edge n m'")
            n, m = _int(toks[2], lineno), _int(toks[3], lineno)
            if n < 0 or m < 0:
                raise ParseError("Malformed", lineno, "negative count in header")
            header = (n, m, lineno)
        elif kind == "e":
            if header is None:
                raise ParseError("MissingHeader", lineno, "'e' line before the 'p' line")
            if len(toks) != 3:
                raise ParseError("Malformed", lineno, "expected 'e u v'")
            edges.append((lineno, _int(toks[1], lineno), _int(toks[2], lineno)))
            last = lineno
        else:
            raise ParseError("Malformed", lineno, f"unknown line type {kind!r}")
    if header is None:
        raise ParseError("MissingHeader", max(last, 1), "no 'p edge n m' line")
    n, m, hline = header
    g = _collect_edges(n, m, edges, hline, last, 1)
    return GraphDocument("dimacs", g, tuple(range(1, n + 1)))


def parse_graph(text: str, fmt: str = "auto") -> GraphDocument:
    """Parse ``text`` as ``edgelist``, ``dimacs``, or sniff the format."""
    if fmt == "auto":
        fmt = "edgelist"
        for raw in text.splitlines():
            toks = raw.split()
            if toks and not toks[0].startswith("#"):
                if toks[0] in ("p", "c", "e"):
                    fmt = "dimacs"
                break
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown format {fmt!r}")


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
