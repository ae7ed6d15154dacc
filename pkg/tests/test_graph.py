import pickle

import pytest
from hypothesis import given

from conftest import graphs
from megkit import (
    UNREACHABLE,
    bfs_distances,
    build_graph,
    count_shortest_paths,
    distance_avoiding_edge,
)
from megkit.errors import DuplicateEdge, IdOutOfRange, NotAnEdge, SelfLoop
from megkit.graph import induced_subgraph
from oracles import complete, cycle, path, path_count_enum


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.n == 3
    assert g.edges == ((0, 1), (1, 2))
    assert g.max_degree == 2
    assert g.adjacency(1) == (0, 2)


def test_build_single_vertex():
    g = build_graph(1, [])
    assert g.n == 1 and g.m == 0 and g.max_degree == 0


@pytest.mark.parametrize(
    "n, pairs, exc",
    [
        (3, [(0, 0)], SelfLoop),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (3, [(0, 3)], IdOutOfRange),
        (3, [(-1, 1)], IdOutOfRange),
    ],
)
def test_build_rejects(n, pairs, exc):
    with pytest.raises(exc):
        build_graph(n, pairs)


def test_edges_are_canonical_and_adjacency_sorted():
    g = build_graph(4, [(3, 0), (2, 1), (0, 2)])
    assert g.edges == ((0, 2), (0, 3), (1, 2))
    assert g.adjacency(0) == (2, 3)
    assert g.has_edge(3, 0) and not g.has_edge(1, 3)


def test_graph_is_hashable_and_picklable():
    g = cycle(5)
    assert g == pickle.loads(pickle.dumps(g))
    assert hash(g) == hash(cycle(5))


def test_bfs_examples():
    assert bfs_distances(path(3), 0) == [0, 1, 2]
    assert bfs_distances(build_graph(2, []), 0) == [0, UNREACHABLE]
    assert bfs_distances(cycle(5), 0) == [0, 1, 2, 2, 1]
    with pytest.raises(IdOutOfRange):
        bfs_distances(path(3), 3)


def test_unreachable_ordering():
    assert UNREACHABLE > 10**9
    assert 3 < UNREACHABLE
    assert not UNREACHABLE < UNREACHABLE
    assert UNREACHABLE == UNREACHABLE and UNREACHABLE != 0
    assert pickle.loads(pickle.dumps(UNREACHABLE)) is UNREACHABLE
    with pytest.raises(TypeError):
        UNREACHABLE + 1


def test_distance_avoiding_edge_examples():
    assert distance_avoiding_edge(cycle(4), 0, 1, (0, 1)) == 3
    assert distance_avoiding_edge(path(3), 0, 2, (0, 1)) is UNREACHABLE
    assert distance_avoiding_edge(complete(3), 0, 1, (1, 2)) == 1
    with pytest.raises(NotAnEdge):
        distance_avoiding_edge(path(3), 0, 2, (0, 2))


def test_count_shortest_paths_examples():
    _, c = count_shortest_paths(cycle(4), 0)
    assert c[2] == 2
    _, c = count_shortest_paths(path(3), 0)
    assert c[2] == 1
    _, c = count_shortest_paths(complete(4), 0)
    assert c == [1, 1, 1, 1]
    d, c = count_shortest_paths(build_graph(3, [(0, 1)]), 0)
    assert d[2] is UNREACHABLE and c[2] == 0


def test_induced_subgraph():
    sub, old = induced_subgraph(cycle(5), [0, 1, 2, 4])
    assert old == (0, 1, 2, 4)
    assert sub.edges == ((0, 1), (0, 3), (1, 2))


@given(graphs(max_n=9))
def test_distance_symmetry(g):
    rows = [bfs_distances(g, v) for v in g.vertices()]
    for u in g.vertices():
        for v in g.vertices():
            assert rows[u][v] == rows[v][u]


@given(graphs(max_n=9))
def test_triangle_inequality(g):
    rows = [bfs_distances(g, v) for v in g.vertices()]
    for a in g.vertices():
        for b in g.vertices():
            for c in g.vertices():
                if UNREACHABLE not in (rows[a][b], rows[b][c]):
                    assert rows[a][c] <= rows[a][b] + rows[b][c]


@given(graphs(max_n=8))
def test_edge_deletion_never_shortens(g):
    for a in g.vertices():
        base = bfs_distances(g, a)
        for e in g.edges:
            for b in g.vertices():
                assert distance_avoiding_edge(g, a, b, e) >= base[b]


@given(graphs(max_n=8))
def test_path_counts_match_enumeration(g):
    for a in g.vertices():
        _, counts = count_shortest_paths(g, a)
        assert counts == path_count_enum(g, a)
