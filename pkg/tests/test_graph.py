from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs

from asymcolor.errors import Disconnected, LoopEdge, VertexOutOfRange
from asymcolor.families import complete, complete_bipartite, cycle
from asymcolor.graph import (
    bfs_levels,
    build_graph,
    connected_components,
    induced_subgraph,
    satisfies_hypothesis,
    stats,
)


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.adj == ((1,), (0, 2), (1,))


def test_build_rejects_loop():
    with pytest.raises(LoopEdge):
        build_graph(2, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(VertexOutOfRange):
        build_graph(2, [(0, 2)])


def test_build_collapses_duplicates():
    assert build_graph(4, [(1, 0), (0, 1), (2, 3)]).edges == ((0, 1), (2, 3))


def test_edge_ids_follow_sorted_order():
    g = build_graph(4, [(2, 3), (0, 3), (0, 1)])
    assert [g.edge_id(u, v) for u, v in [(0, 1), (3, 0), (3, 2)]] == [0, 1, 2]
    assert g.has_edge(3, 0) and not g.has_edge(1, 2)


@pytest.mark.parametrize(
    "g, expect",
    [
        (complete(4), (3, 3, True, False)),
        (complete_bipartite(2, 4), (2, 4, True, False)),
        (complete_bipartite(1, 3), (1, 3, True, False)),
        (complete(2), (1, 1, True, True)),
        (build_graph(4, [(0, 1), (2, 3)]), (1, 1, False, False)),
    ],
)
def test_stats(g, expect):
    assert tuple(stats(g)) == expect


def test_hypothesis_examples():
    assert satisfies_hypothesis(cycle(5))
    assert not satisfies_hypothesis(complete(2))
    assert not satisfies_hypothesis(complete_bipartite(1, 3))
    assert satisfies_hypothesis(build_graph(1, []))
    assert not satisfies_hypothesis(build_graph(4, [(0, 1), (2, 3)]))


def test_levels_of_c5():
    assert bfs_levels(cycle(5), 0).levels == ((0,), (1, 4), (2, 3))


def test_levels_of_k24_from_big_side():
    lv = bfs_levels(complete_bipartite(2, 4), 2)
    assert lv.levels == ((2,), (0, 1), (3, 4, 5))


def test_levels_of_k4():
    assert bfs_levels(complete(4), 0).levels == ((0,), (1, 2, 3))


def test_levels_disconnected():
    with pytest.raises(Disconnected):
        bfs_levels(build_graph(3, [(0, 1)]), 0)


def test_induced():
    sub, mapping = induced_subgraph(complete(4), {1, 2, 3})
    assert sub == complete(3) and mapping == {1: 0, 2: 1, 3: 2}
    sub, _ = induced_subgraph(cycle(5), {0, 1, 2})
    assert sub.edges == ((0, 1), (1, 2))
    sub, mapping = induced_subgraph(cycle(5), set())
    assert sub.n == 0 and mapping == {}
    with pytest.raises(VertexOutOfRange):
        induced_subgraph(cycle(5), {7})


def test_components():
    assert connected_components(build_graph(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]
    assert connected_components(cycle(5)) == [[0, 1, 2, 3, 4]]
    assert connected_components(build_graph(3, [])) == [[0], [1], [2]]


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


@given(graphs(), st.data())
def test_levels_edges_span_at_most_one(g, data):
    comps = connected_components(g)
    if len(comps) != 1:
        return
    root = data.draw(st.integers(0, g.n - 1))
    lv = bfs_levels(g, root)
    assert lv.level_of[root] == 0 and lv.levels[0] == (root,)
    assert all(abs(lv.level_of[u] - lv.level_of[v]) <= 1 for u, v in g.edges)


@settings(max_examples=50)
@given(graphs())
def test_components_partition(g):
    comps = connected_components(g)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == list(range(g.n))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
    sub, mapping = induced_subgraph(g, range(g.n))
    assert sub == g and all(k == v for k, v in mapping.items())
