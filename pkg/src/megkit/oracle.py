"""Exhaustive computations for small graphs: minimum meg-sets, meg-minimality
and composition of meg-sets across a cut vertex."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .errors import InvalidComponentMegSet, NotACutVertex, SizeCapExceeded
from .graph import Graph, induced_subgraph
from .megset import VertexSet, _pair_masks, as_vertex_set, is_meg_set, mandatory_fast

__all__ = [
    "MinMegResult",
    "pair_monitor_table",
    "min_meg_brute",
    "iter_meg_sets",
    "check_meg_minimal",
    "articulation_points",
    "cut_components",
    "compose_cut_vertex",
]


@dataclass(frozen=True)
class MinMegResult:
    optimum: VertexSet
    optimum_size: int
    is_unique_minimum: bool | None
    nodes_enumerated: int


def pair_monitor_table(g: Graph) -> dict[tuple[int, int], int]:
    """Bitmask of monitored edge indices for every vertex pair ``(a, b)``, a < b."""
    V = tuple(range(g.n))
    table = {}
    for ia, mask in _pair_masks(g, V):
        packed = np.packbits(mask, axis=1, bitorder="little")
        for r in range(mask.shape[0]):
            table[(ia, ia + 1 + r)] = int.from_bytes(packed[r].tobytes(), "little")
    return table


class _Checker:
    def __init__(self, g: Graph):
        self.full = (1 << g.m) - 1
        self.table = pair_monitor_table(g)

    def __call__(self, members: Sequence[int]) -> bool:
        if self.full == 0:
            return True
        table = self.table
        acc = 0
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                acc |= table[(a, b)]
        return acc == self.full


def _candidates(forced: VertexSet, free: VertexSet, size: int) -> Iterator[VertexSet]:
    # lex order on free combinations is lex order on the sorted unions
    for combo in combinations(free, size - len(forced)):
        yield tuple(sorted(forced + combo))


def min_meg_brute(g: Graph, use_mandatory_pruning: bool = True, max_size: int | None = None,
                  check_unique: bool = True) -> MinMegResult:
    """Smallest meg-set by exhaustive search in cardinality-lexicographic order.

    With pruning only supersets of the mandatory set are tried. The
    uniqueness pass scans every remaining candidate of the optimum size.
    Raises :class:`SizeCapExceeded` when no meg-set of size ``<= max_size``
    exists.
    """
    n = g.n
    check = _Checker(g)
    forced = mandatory_fast(g) if use_mandatory_pruning else ()
    free = tuple(v for v in range(n) if v not in set(forced))
    cap = n if max_size is None else min(max_size, n)
    enumerated = 0
    for size in range(len(forced), cap + 1):
        found = None
        unique = None
        for cand in _candidates(forced, free, size):
            enumerated += 1
            if check(cand):
                if found is None:
                    found = cand
                    if not check_unique:
                        break
                    unique = True
                else:
                    unique = False
                    break
        if found is not None:
            return MinMegResult(found, size, unique, enumerated)
    raise SizeCapExceeded(f"no meg-set with at most {cap} vertices")


def iter_meg_sets(g: Graph) -> Iterator[VertexSet]:
    """Every meg-set of ``g`` in cardinality-lexicographic order (2^n sets)."""
    check = _Checker(g)
    V = tuple(range(g.n))
    for size in range(g.n + 1):
        for cand in combinations(V, size):
            if check(cand):
                yield cand


def check_meg_minimal(g: Graph) -> bool:
    """True iff the mandatory set is the unique minimum meg-set of ``g``."""
    res = min_meg_brute(g, use_mandatory_pruning=False, check_unique=True)
    return bool(res.is_unique_minimum) and res.optimum == mandatory_fast(g)


def articulation_points(g: Graph) -> VertexSet:
    """Cut vertices via an iterative low-link DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = set()
    timer = 0
    adj = g._adj
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(adj[w])))
                    if u == root:
                        children += 1
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[u])
                    if parent != root and low[u] >= disc[parent]:
                        cut.add(parent)
        if children > 1:
            cut.add(root)
    return tuple(sorted(cut))


def cut_components(g: Graph, v: int) -> list[VertexSet]:
    """Components of ``g - v`` that contain a neighbour of ``v``, ordered by
    smallest member."""
    g._check(v)
    seen = {v}
    comps = []
    for s in g.adjacency(v):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        i = 0
        while i < len(comp):
            for w in g._adj[comp[i]]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
            i += 1
        comps.append(tuple(sorted(comp)))
    comps.sort()
    return comps


def compose_cut_vertex(g: Graph, v: int, component_megsets: Sequence[Sequence[int]]) -> VertexSet:
    """Union of per-component meg-sets minus the cut vertex ``v``.

    ``component_megsets[i]`` must be a meg-set of the subgraph induced by the
    ``i``-th component of ``g - v`` (ordered as in :func:`cut_components`)
    together with ``v``.
    """
    if v not in articulation_points(g):
        raise NotACutVertex(f"vertex {v} is not a cut vertex")
    comps = cut_components(g, v)
    if len(component_megsets) != len(comps):
        raise InvalidComponentMegSet(
            f"expected {len(comps)} component meg-sets, got {len(component_megsets)}"
        )
    union = set()
    for comp, S in zip(comps, component_megsets):
        members = set(comp) | {v}
        S = as_vertex_set(g, S)
        if not set(S) <= members:
            raise InvalidComponentMegSet(f"{S} is not inside component {comp} + {v}")
        sub, old = induced_subgraph(g, members)
        index = {x: i for i, x in enumerate(old)}
        if not is_meg_set(sub, [index[x] for x in S]):
            raise InvalidComponentMegSet(f"{S} is not a meg-set of component {comp} + {v}")
        union |= set(S)
    union.discard(v)
    result = tuple(sorted(union))
    if not is_meg_set(g, result):
        raise AssertionError(f"composed set {result} is not a meg-set")
    return result
