"""Chordality recognition with certificates, and a random chordal generator."""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidParam, NotInducedP3
from .graph import Graph, build_graph

__all__ = [
    "ChordalityCertificate",
    "is_simplicial",
    "lex_bfs_order",
    "check_chordal",
    "verify_certificate",
    "gen_chordal",
    "find_cycle_through_p3",
    "eliminate_simplicial",
]


@dataclass(frozen=True)
class ChordalityCertificate:
    """Either a perfect elimination ordering (``kind == "peo"``) of all
    vertices, or a chordless cycle of length at least 4 (``kind == "hole"``)."""

    kind: str
    vertices: tuple[int, ...]

    @property
    def is_chordal(self) -> bool:
        return self.kind == "peo"


def is_simplicial(g: Graph, v: int) -> bool:
    nbrs = g.adjacency(v)
    adjsets = g._adjsets
    for i, x in enumerate(nbrs):
        ax = adjsets[x]
        for y in nbrs[i + 1:]:
            if y not in ax:
                return False
    return True


class _Cell:
    __slots__ = ("members", "heap", "prev", "next", "split", "stamp")

    def __init__(self):
        self.members: set[int] = set()
        self.heap: list[int] = []
        self.prev = None
        self.next = None
        self.split = None
        self.stamp = -1

    def add(self, v):
        self.members.add(v)
        heapq.heappush(self.heap, v)

    def pop_min(self):
        heap = self.heap
        while heap[0] not in self.members:
            heapq.heappop(heap)
        v = heapq.heappop(heap)
        self.members.discard(v)
        return v


def lex_bfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS by partition refinement.

    Among vertices with the largest label the smallest id is taken, so a
    disconnected graph restarts at its smallest unvisited id.
    """
    n = g.n
    if n == 0:
        return []
    head = _Cell()
    for v in range(n):
        head.add(v)
    cell_of = [head] * n
    visited = [False] * n
    order = []
    adj = g._adj
    for step in range(n):
        while not head.members:
            head = head.next
            head.prev = None
        v = head.pop_min()
        visited[v] = True
        order.append(v)
        for w in adj[v]:
            if visited[w]:
                continue
            cell = cell_of[w]
            if cell.stamp != step:
                new = _Cell()
                new.next = cell
                new.prev = cell.prev
                if cell.prev is not None:
                    cell.prev.next = new
                else:
                    head = new
                cell.prev = new
                cell.stamp = step
                cell.split = new
            cell.members.discard(w)
            cell.split.add(w)
            cell_of[w] = cell.split
    return order


def _peo_violation(g: Graph, peo: list[int]):
    """Return ``(v, x, y)`` with ``x, y`` later non-adjacent neighbours of
    ``v`` in ``peo``, or None when ``peo`` is a perfect elimination order."""
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    adjsets = g._adjsets
    for v in peo:
        later = [w for w in g._adj[v] if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=pos.__getitem__)
        ap = adjsets[parent]
        for w in later:
            if w != parent and w not in ap:
                return v, parent, w
    return None


def _hole_through(g: Graph, v: int, x: int, y: int):
    """Chordless cycle ``v x ... y`` using a shortest x-y path that avoids
    N[v] except x and y; None if no such path exists."""
    blocked = set(g._adjsets[v])
    blocked.add(v)
    blocked.discard(x)
    blocked.discard(y)
    parent = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            break
        for w in g._adj[u]:
            if w not in parent and w not in blocked:
                parent[w] = u
                queue.append(w)
    if y not in parent:
        return None
    path = []
    u = y
    while u is not None:
        path.append(u)
        u = parent[u]
    path.reverse()
    return [v] + path


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    rotated = cycle[i:] + cycle[:i]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def check_chordal(g: Graph) -> ChordalityCertificate:
    """Return a PEO when ``g`` is chordal and a hole otherwise.

    The certificate is verified against ``g`` before it is returned.
    """
    order = lex_bfs_order(g)
    peo = order[::-1]
    bad = _peo_violation(g, peo)
    if bad is None:
        cert = ChordalityCertificate("peo", tuple(peo))
    else:
        cycle = _hole_through(g, *bad)
        if cycle is None:
            cycle = _find_any_hole(g)
        cert = ChordalityCertificate("hole", _canonical_cycle(cycle))
    if not verify_certificate(g, cert):
        raise AssertionError(f"internal error: certificate {cert} failed verification")
    return cert


def _find_any_hole(g: Graph) -> list[int]:
    # every hole passes through some v with two non-adjacent hole neighbours
    for v in range(g.n):
        for x, y in combinations(g._adj[v], 2):
            if y not in g._adjsets[x]:
                cycle = _hole_through(g, v, x, y)
                if cycle is not None:
                    return cycle
    raise AssertionError("internal error: no hole in a graph failing the PEO test")


def verify_certificate(g: Graph, cert: ChordalityCertificate) -> bool:
    """Check a certificate independently of how it was produced."""
    adjsets = g._adjsets
    if cert.kind == "peo":
        peo = list(cert.vertices)
        if sorted(peo) != list(range(g.n)):
            return False
        pos = {v: i for i, v in enumerate(peo)}
        for v in peo:
            later = [w for w in g._adj[v] if pos[w] > pos[v]]
            for x, y in combinations(later, 2):
                if y not in adjsets[x]:
                    return False
        return True
    if cert.kind == "hole":
        cyc = list(cert.vertices)
        k = len(cyc)
        if k < 4 or len(set(cyc)) != k or any(not 0 <= v < g.n for v in cyc):
            return False
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if (cyc[j] in adjsets[cyc[i]]) != consecutive:
                    return False
        return True
    return False


def eliminate_simplicial(g: Graph) -> bool:
    """Repeatedly delete a simplicial vertex; True iff the graph empties.

    Quadratic-ish and meant only as a cross-check on small graphs.
    """
    alive = set(range(g.n))
    adj = [set(a) for a in g._adj]
    while alive:
        for v in sorted(alive):
            nb = adj[v]
            if all(y in adj[x] for x, y in combinations(sorted(nb), 2)):
                break
        else:
            return False
        alive.discard(v)
        for w in adj[v]:
            adj[w].discard(v)
        adj[v] = set()
    return True


def gen_chordal(n: int, attach_max: int, seed: int, *, max_degree: int | None = None) -> Graph:
    """Random connected chordal graph by reverse simplicial elimination.

    Vertex ``i`` is joined to a clique grown greedily from a uniformly chosen
    earlier vertex, adding uniformly chosen common neighbours until the clique
    has ``attach_max`` members or cannot grow. With ``max_degree`` set, only
    vertices whose degree is still below the cap are eligible, so the output
    has maximum degree at most ``max_degree``.
    """
    if n < 1:
        raise InvalidParam(f"n must be >= 1, got {n}")
    if attach_max < 1:
        raise InvalidParam(f"attach_max must be >= 1, got {attach_max}")
    if max_degree is not None and max_degree <= attach_max:
        raise InvalidParam("max_degree must exceed attach_max")
    rng = random.Random(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = []
    # open vertices: degree below max_degree; swap-remove list
    open_list: list[int] = [0]
    open_pos = {0: 0}

    def close(v):
        i = open_pos.pop(v)
        last = open_list.pop()
        if last != v:
            open_list[i] = last
            open_pos[last] = i

    for i in range(1, n):
        if max_degree is None:
            u = rng.randrange(i)
            cand = set(adj[u])
        else:
            u = open_list[rng.randrange(len(open_list))]
            cand = {w for w in adj[u] if w in open_pos}
        clique = [u]
        while len(clique) < attach_max and cand:
            w = rng.choice(sorted(cand))
            clique.append(w)
            cand &= adj[w]
        for w in clique:
            adj[w].add(i)
            adj[i].add(w)
            edges.append((w, i))
        if max_degree is not None:
            for w in clique:
                if len(adj[w]) >= max_degree:
                    close(w)
            open_pos[i] = len(open_list)
            open_list.append(i)
    return build_graph(n, edges)


def find_cycle_through_p3(g: Graph, a: int, b: int, c: int) -> list[int] | None:
    """Cycle containing the consecutive vertices ``a, b, c``.

    Uses a shortest ``a``-``c`` path in ``g - b``; returns the cycle as
    ``[a, b, c, ..., ]`` (closing back to ``a``) or None if ``a`` and ``c``
    are disconnected once ``b`` is removed.
    """
    for v in (a, b, c):
        g._check(v)
    adjsets = g._adjsets
    if a == c or b not in adjsets[a] or c not in adjsets[b] or c in adjsets[a]:
        raise NotInducedP3(f"{a}-{b}-{c} is not an induced 2-path")
    parent = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == c:
            break
        for w in g._adj[u]:
            if w != b and w not in parent:
                parent[w] = u
                queue.append(w)
    if c not in parent:
        return None
    back = []
    u = parent[c]
    while u != a:
        back.append(u)
        u = parent[u]
    return [a, b, c] + back
