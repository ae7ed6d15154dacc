"""Edge monitoring by vertex pairs, meg-set verification and mandatory vertices.

A pair ``{a, b}`` monitors an edge when the edge lies on every shortest
``a``-``b`` path. A meg-set monitors every edge. A vertex is mandatory when
it has a *support*: a neighbour ``w`` such that every induced 2-path
``w v x`` has ``w`` and ``x`` sharing a second common neighbour.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import IdOutOfRange, SameVertex
from .graph import (
    UNREACHABLE,
    Graph,
    _require_edge,
    count_shortest_paths,
    distance_avoiding_edge,
    bfs_distances,
)

__all__ = [
    "WITNESS_CAP",
    "EdgeRecord",
    "MonitorReport",
    "SupportState",
    "as_vertex_set",
    "pair_monitors_edge",
    "pair_monitors_edge_by_counting",
    "edges_monitored_by_pair",
    "monitored_edges",
    "is_meg_set",
    "supports",
    "mandatory_naive",
    "mandatory_fast",
    "support_state",
    "simplicial_subset_check",
]

WITNESS_CAP = 8

VertexSet = tuple[int, ...]


def as_vertex_set(g: Graph, members: Iterable[int]) -> VertexSet:
    """Sorted, deduplicated tuple of ids, validated against ``g``."""
    out = tuple(sorted(set(members)))
    for v in out:
        if not 0 <= v < g.n:
            raise IdOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    return out


# -- single pair --------------------------------------------------------------

def pair_monitors_edge(g: Graph, a: int, b: int, e: Sequence[int]) -> bool:
    """True iff ``e`` lies on every shortest ``a``-``b`` path.

    Decided by deleting ``e`` and checking whether the distance grows.
    Pairs in different components monitor nothing.
    """
    if a == b:
        raise SameVertex(f"pair ({a}, {a}) is not a pair")
    g._check(b)
    base = bfs_distances(g, a)[b]
    if base is UNREACHABLE:
        _require_edge(g, e)
        return False
    return distance_avoiding_edge(g, a, b, e) > base


def pair_monitors_edge_by_counting(g: Graph, a: int, b: int, e: Sequence[int]) -> bool:
    """Same predicate as :func:`pair_monitors_edge`, decided by counting
    shortest paths through the edge in either orientation."""
    if a == b:
        raise SameVertex(f"pair ({a}, {a}) is not a pair")
    x, y = _require_edge(g, e)
    da, sa = count_shortest_paths(g, a)
    db, sb = count_shortest_paths(g, b)
    dab = da[b]
    if dab is UNREACHABLE:
        return False
    for p, q in ((x, y), (y, x)):
        if da[p] is UNREACHABLE or db[q] is UNREACHABLE:
            continue
        if da[p] + 1 + db[q] == dab and sa[p] * sb[q] == sa[b]:
            return True
    return False


def edges_monitored_by_pair(g: Graph, a: int, b: int) -> list[tuple[int, int]]:
    """All edges monitored by ``{a, b}``, in canonical edge order."""
    if a == b:
        raise SameVertex(f"pair ({a}, {a}) is not a pair")
    pairs = as_vertex_set(g, (a, b))
    _, masks = next(_pair_masks(g, pairs, pairs), (None, None))
    if masks is None:
        return []
    return [g.edges[k] for k in np.flatnonzero(masks[0])]


# -- sets of vertices ---------------------------------------------------------

def _distance_tables(g: Graph, sources: Sequence[int]):
    """Distance (-1 for unreachable) and path-count rows for each source."""
    n = g.n
    dist = np.full((len(sources), n), -1, dtype=np.int64)
    counts = []
    for r, s in enumerate(sources):
        d, sigma = count_shortest_paths(g, s)
        dist[r] = [-1 if x is UNREACHABLE else x for x in d]
        counts.append(sigma)
    big = max((max(c) for c in counts), default=0)
    # products of two counts must fit in int64
    dtype = np.int64 if big < 2**31 else object
    sig = np.array(counts, dtype=dtype).reshape(len(sources), n)
    return dist, sig


def _pair_masks(g: Graph, members: VertexSet, sources: VertexSet | None = None
                ) -> Iterator[tuple[int, np.ndarray]]:
    """For each member ``a`` (restricted to ``sources``), yield ``(ia, mask)``
    where ``mask[r, k]`` says pair ``{a, members[ia + 1 + r]}`` monitors edge
    ``k``."""
    if g.m == 0 or len(members) < 2:
        return
    dist, sig = _distance_tables(g, members)
    edges = np.array(g.edges, dtype=np.int64)
    X, Y = edges[:, 0], edges[:, 1]
    mem = np.array(members, dtype=np.int64)
    wanted = None if sources is None else set(sources)
    for ia in range(len(members) - 1):
        if wanted is not None and members[ia] not in wanted:
            continue
        rows = slice(ia + 1, len(members))
        dab = dist[ia, mem[rows]][:, None]
        sab = sig[ia, mem[rows]][:, None]
        db = dist[rows]
        sb = sig[rows]
        mask = np.zeros((len(members) - ia - 1, g.m), dtype=bool)
        for P, Q in ((X, Y), (Y, X)):
            dap = dist[ia, P][None, :]
            dbq = db[:, Q]
            ok = (dab >= 0) & (dap >= 0) & (dbq >= 0) & (dap + 1 + dbq == dab)
            if ok.any():
                ok &= (sig[ia, P][None, :] * sb[:, Q]) == sab
                mask |= ok
        yield ia, mask


@dataclass(frozen=True)
class EdgeRecord:
    edge: tuple[int, int]
    monitored: bool
    witnesses: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class MonitorReport:
    records: tuple[EdgeRecord, ...]
    total_edges: int
    monitored_count: int

    @property
    def is_meg_set(self) -> bool:
        return self.monitored_count == self.total_edges

    @property
    def unmonitored(self) -> list[tuple[int, int]]:
        return [r.edge for r in self.records if not r.monitored]


def monitored_edges(g: Graph, members: Iterable[int], witness_cap: int = WITNESS_CAP) -> MonitorReport:
    """Per-edge monitoring status of ``members``.

    Witness pairs are listed in lexicographic order, at most ``witness_cap``
    per edge.
    """
    M = as_vertex_set(g, members)
    m = g.m
    found = np.zeros(m, dtype=np.int64)
    witnesses: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for ia, mask in _pair_masks(g, M):
        need = found < witness_cap
        if not need.any():
            break
        mask = mask & need[None, :]
        # keep only the first (cap - found) hits per edge, by partner order
        rank = np.cumsum(mask, axis=0)
        keep = mask & (rank + found[None, :] <= witness_cap)
        rows, cols = np.nonzero(keep.T)
        a = M[ia]
        for k, r in zip(rows.tolist(), cols.tolist()):
            witnesses[k].append((a, M[ia + 1 + r]))
        found += keep.sum(axis=0)
    records = tuple(
        EdgeRecord(edge=g.edges[k], monitored=bool(witnesses[k]), witnesses=tuple(witnesses[k]))
        for k in range(m)
    )
    return MonitorReport(records, m, sum(1 for r in records if r.monitored))


def is_meg_set(g: Graph, members: Iterable[int]) -> bool:
    M = as_vertex_set(g, members)
    covered = np.zeros(g.m, dtype=bool)
    if g.m == 0:
        return True
    for _, mask in _pair_masks(g, M):
        covered |= mask.any(axis=0)
        if covered.all():
            return True
    return False


# -- supports and mandatory vertices -------------------------------------------

def _is_support(g: Graph, u: int, w: int) -> bool:
    adjsets = g._adjsets
    aw = adjsets[w]
    for x in g._adj[u]:
        if x != w and x not in aw and len(aw & adjsets[x]) < 2:
            return False
    return True


def supports(g: Graph, u: int) -> VertexSet:
    """Neighbours of ``u`` that are supports of ``u``."""
    return tuple(w for w in g.adjacency(u) if _is_support(g, u, w))


def mandatory_naive(g: Graph) -> VertexSet:
    """Mandatory vertices by checking every neighbour as a support directly."""
    return tuple(v for v in g.vertices() if any(_is_support(g, v, w) for w in g._adj[v]))


@dataclass(frozen=True)
class SupportState:
    """Fixpoint of the candidate-support elimination.

    ``candidates[v]`` is the set of neighbours of ``v`` never eliminated as
    supports; ``mandatory_flags[v]`` is true iff that set is nonempty.
    """

    candidates: tuple[tuple[int, ...], ...]
    mandatory_flags: tuple[bool, ...]


def _alive_mask(g: Graph) -> np.ndarray:
    from ._kernels import support_elimination

    indptr, indices = g.csr()
    return support_elimination(indptr, indices)


def support_state(g: Graph) -> SupportState:
    indptr, indices = g.csr()
    alive = _alive_mask(g)
    cand = tuple(
        tuple(indices[indptr[v]:indptr[v + 1]][alive[indptr[v]:indptr[v + 1]]].tolist())
        for v in range(g.n)
    )
    return SupportState(cand, tuple(bool(c) for c in cand))


def mandatory_fast(g: Graph) -> VertexSet:
    """Mandatory vertices in O(n * Delta^2) time.

    Every neighbour starts as a support candidate. For each pivot ``i`` the
    number of length-2 paths from ``i`` is tabulated; then for each
    neighbour ``j`` of ``i``, a candidate ``k`` of ``j`` is dropped when
    ``k`` is not adjacent to ``i`` and ``j`` is their only common
    neighbour. Vertices left with a candidate are mandatory.
    """
    if g.n == 0 or g.m == 0:
        return ()
    indptr, _ = g.csr()
    alive = _alive_mask(g)
    csum = np.concatenate(([0], np.cumsum(alive, dtype=np.int64)))
    remaining = csum[indptr[1:]] - csum[indptr[:-1]]
    return tuple(np.flatnonzero(remaining > 0).tolist())


def simplicial_subset_check(g: Graph) -> bool:
    """Every simplicial vertex of positive degree is mandatory."""
    from .chordal import is_simplicial

    mand = set(mandatory_fast(g))
    return all(v in mand for v in g.vertices() if g._adj[v] and is_simplicial(g, v))

