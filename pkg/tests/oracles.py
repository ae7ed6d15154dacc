"""Independent reference computations for the test-suite.

Everything here works from first principles (simple-path enumeration,
exhaustive subset search) and shares no code with the library beyond the
``Graph`` container.
"""

import random
from itertools import combinations

from megkit import build_graph


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph(n, list(combinations(range(n), 2)))


def star(leaves):
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def er_graph(n, p, rng):
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_tree(n, rng):
    return build_graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def simple_paths(g, a, b):
    """All simple a-b paths as vertex lists (exponential; tiny graphs only)."""
    out = []
    stack = [(a, [a])]
    while stack:
        u, p = stack.pop()
        if u == b:
            out.append(p)
            continue
        for w in g.adjacency(u):
            if w not in p:
                stack.append((w, p + [w]))
    return out


def shortest_paths(g, a, b):
    ps = simple_paths(g, a, b)
    if not ps:
        return []
    k = min(len(p) for p in ps)
    return [p for p in ps if len(p) == k]


def path_edges(p):
    return {(min(x, y), max(x, y)) for x, y in zip(p, p[1:])}


def monitors_enum(g, a, b, e):
    ps = shortest_paths(g, a, b)
    return bool(ps) and all(tuple(e) in path_edges(p) for p in ps)


def monitor_table_enum(g):
    """{(a, b): set of monitored edges} for all pairs a < b."""
    table = {}
    for a, b in combinations(range(g.n), 2):
        ps = shortest_paths(g, a, b)
        if not ps:
            table[(a, b)] = set()
            continue
        common = set.intersection(*(path_edges(p) for p in ps))
        table[(a, b)] = common
    return table


def is_meg_set_enum(g, members, table=None):
    table = table if table is not None else monitor_table_enum(g)
    covered = set()
    for a, b in combinations(sorted(members), 2):
        covered |= table[(a, b)]
    return covered == set(g.edges)


def all_meg_sets_enum(g):
    table = monitor_table_enum(g)
    return [
        s for k in range(g.n + 1) for s in combinations(range(g.n), k)
        if is_meg_set_enum(g, s, table)
    ]


def mandatory_by_definition(g):
    """Intersection of all meg-sets (V is always one)."""
    sets = all_meg_sets_enum(g)
    common = set(range(g.n))
    for s in sets:
        common &= set(s)
    return tuple(sorted(common))


def path_count_enum(g, a):
    counts = []
    for v in range(g.n):
        counts.append(1 if v == a else len(shortest_paths(g, a, v)))
    return counts


def rng_for(*key):
    return random.Random(repr(key))


def chordal_completion(g, order):
    """``g`` plus the fill edges of eliminating vertices in ``order``."""
    adj = [set(g.adjacency(v)) for v in g.vertices()]
    edges = set(g.edges)
    done = set()
    for v in order:
        later = sorted(w for w in adj[v] if w not in done)
        for x, y in combinations(later, 2):
            if y not in adj[x]:
                adj[x].add(y)
                adj[y].add(x)
                edges.add((x, y))
        done.add(v)
    return build_graph(g.n, sorted(edges))


def random_chordal(n, rng):
    """A chordal graph on n vertices from one of several constructions."""
    from megkit import gen_chordal

    kind = rng.randrange(3)
    if kind == 0:
        return gen_chordal(n, rng.randint(1, 5), rng.randrange(10**9))
    if kind == 1:
        return random_tree(n, rng)
    base = er_graph(n, rng.choice([0.15, 0.25, 0.4]), rng)
    order = list(range(n))
    rng.shuffle(order)
    return chordal_completion(base, order)
