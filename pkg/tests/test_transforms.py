import random

import pytest

from matchbook.graph import EdgeVertex, GraphError, Plain, Tag, cycle, make_graph, path, star
from matchbook.transforms import line_graph_edge_count, transform
from oracles import random_connected


@pytest.mark.parametrize("kind,edges", [("S", 6), ("R", 9), ("Q", 9), ("T", 12)])
def test_star_counts(kind, edges):
    t = transform(star(3), kind)
    assert t.vertex_count == 7 and t.edge_count == edges


def test_subdivided_edge_is_a_path():
    s = transform(path(2), "S")
    assert s.edge_count == 2 and s.degrees == (1, 1, 2)
    assert s.tag_of(EdgeVertex(Plain(0), Plain(1))) is Tag.WHITE


def test_disconnected_input_rejected():
    with pytest.raises(GraphError):
        transform(make_graph(range(3), [(0, 1)]), "S")
    with pytest.raises(GraphError):
        transform(path(3), "X")


def _random_graphs(count, seed):
    rng = random.Random(seed)
    return [random_connected(rng, rng.randint(2, 10), rng.choice([0.1, 0.3, 0.5])) for _ in range(count)]


@pytest.mark.parametrize("g", _random_graphs(60, 1), ids=lambda g: repr(g))
def test_edge_counts_and_inclusions(g):
    m, lm = g.edge_count, line_graph_edge_count(g)
    ts = {k: transform(g, k) for k in "SRQT"}
    assert [ts[k].edge_count for k in "SRQT"] == [2 * m, 3 * m, 2 * m + lm, 3 * m + lm]
    t = ts["T"].labeled_edge_set
    assert ts["Q"].labeled_edge_set < t or lm == 0
    assert ts["R"].labeled_edge_set <= t
    assert ts["S"].labeled_edge_set <= ts["R"].labeled_edge_set
    assert ts["S"].labeled_edge_set <= ts["Q"].labeled_edge_set
    for k in "SRQT":
        assert ts[k].labels == ts["S"].labels


def test_q_of_triangle():
    q = transform(cycle(3), "Q")
    assert q.edge_count == 9 and set(q.degrees) == {2, 4}
