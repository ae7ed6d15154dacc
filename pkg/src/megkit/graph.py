"""Immutable simple undirected graphs and hop-distance primitives.

Vertices are the dense ids ``0..n-1``. Edges are stored canonically as
``(u, v)`` with ``u < v``; adjacency is kept both as sorted tuples (for
deterministic iteration) and as frozensets (for constant-time membership).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateEdge, IdOutOfRange, NotAnEdge, SelfLoop

__all__ = [
    "UNREACHABLE",
    "Graph",
    "build_graph",
    "bfs_distances",
    "distance_avoiding_edge",
    "count_shortest_paths",
    "canonical_edge",
    "induced_subgraph",
]


class _Unreachable:
    """Distance between vertices in different components.

    Orders after every integer and refuses arithmetic.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("megkit.UNREACHABLE")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


UNREACHABLE = _Unreachable()


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Build instances with :func:`build_graph`; the object is never mutated
    afterwards and can be shared freely.
    """

    __slots__ = ("_n", "_edges", "_adj", "_adjsets", "_csr")

    def __init__(self, n: int, edges: tuple, adj: tuple):
        self._n = n
        self._edges = edges
        self._adj = adj
        self._adjsets = tuple(frozenset(a) for a in adj)
        self._csr = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def vertices(self) -> range:
        return range(self._n)

    def adjacency(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of ``v``."""
        self._check(v)
        return self._adj[v]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adjsets[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adjsets[u]

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Compressed sparse row arrays ``(indptr, indices)`` of the adjacency."""
        if self._csr is None:
            indptr = np.zeros(self._n + 1, dtype=np.int64)
            indptr[1:] = np.cumsum([len(a) for a in self._adj])
            indices = np.fromiter(
                (w for a in self._adj for w in a), dtype=np.int64, count=int(indptr[-1])
            )
            indptr.flags.writeable = False
            indices.flags.writeable = False
            self._csr = (indptr, indices)
        return self._csr

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise IdOutOfRange(f"vertex {v} not in 0..{self._n - 1}")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={len(self._edges)})"


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Validate ``pairs`` and return the canonical graph on ``n`` vertices.

    Raises :class:`IdOutOfRange`, :class:`SelfLoop` or :class:`DuplicateEdge`.
    """
    if n < 0:
        raise IdOutOfRange(f"negative vertex count {n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for pair in pairs:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise IdOutOfRange(f"edge ({u}, {v}) has an id outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = canonical_edge(u, v)
        if e in seen:
            raise DuplicateEdge(f"edge {e} given twice")
        seen.add(e)
        adj[u].append(v)
        adj[v].append(u)
    edges = tuple(sorted(seen))
    return Graph(n, edges, tuple(tuple(sorted(a)) for a in adj))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices``.

    Returns the relabelled graph and the tuple mapping new ids to old ids
    (sorted ascending).
    """
    old = tuple(sorted(set(vertices)))
    for v in old:
        g._check(v)
    index = {v: i for i, v in enumerate(old)}
    pairs = [
        (index[u], index[v]) for (u, v) in g.edges if u in index and v in index
    ]
    return build_graph(len(old), pairs), old


def _bfs(g: Graph, source: int, banned_edge: tuple[int, int] | None = None) -> list:
    dist: list = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g._adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] is UNREACHABLE:
                if banned_edge is not None and canonical_edge(u, w) == banned_edge:
                    continue
                dist[w] = du
                queue.append(w)
    return dist


def bfs_distances(g: Graph, source: int, avoid_edge: Sequence[int] | None = None) -> list:
    """Hop distances from ``source``; unreachable vertices get ``UNREACHABLE``.

    With ``avoid_edge`` the distances are those of ``g`` minus that edge.
    """
    g._check(source)
    banned = None if avoid_edge is None else _require_edge(g, avoid_edge)
    return _bfs(g, source, banned_edge=banned)


def distance_avoiding_edge(g: Graph, a: int, b: int, e: Sequence[int]) -> int | _Unreachable:
    """Hop distance from ``a`` to ``b`` in ``g`` with edge ``e`` deleted."""
    g._check(a)
    g._check(b)
    edge = _require_edge(g, e)
    return _bfs(g, a, banned_edge=edge)[b]


def count_shortest_paths(g: Graph, a: int) -> tuple[list, list[int]]:
    """BFS from ``a`` returning ``(distances, counts)``.

    ``counts[v]`` is the number of distinct shortest ``a``-``v`` paths, 0 when
    ``v`` is unreachable. Counts are exact Python integers.
    """
    g._check(a)
    n = g.n
    dist: list = [UNREACHABLE] * n
    sigma = [0] * n
    dist[a] = 0
    sigma[a] = 1
    queue = deque([a])
    adj = g._adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        su = sigma[u]
        for w in adj[u]:
            dw = dist[w]
            if dw is UNREACHABLE:
                dist[w] = du
                sigma[w] = su
                queue.append(w)
            elif dw == du:
                sigma[w] += su
    return dist, sigma


def _require_edge(g: Graph, e: Sequence[int]) -> tuple[int, int]:
    u, v = e
    g._check(u)
    g._check(v)
    if v not in g._adjsets[u]:
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    return canonical_edge(u, v)
