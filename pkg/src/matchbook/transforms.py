"""The subdivision-type unary operations S, R, Q and T.

All four produce a graph on ``V(G) ∪ E(G)``: original vertices keep their
labels and are tagged Black, each edge ``uv`` becomes a White
``EdgeVertex(u, v)``. They differ only in which edges are kept:

* S: each edge replaced by a path of length two;
* R: S plus the original edges;
* Q: S plus an edge between the new vertices of every two adjacent edges;
* T: the total graph, i.e. R plus the Q line-graph edges.
"""

from __future__ import annotations

import enum
from itertools import combinations

from .graph import EdgeVertex, Graph, GraphError, Tag, is_connected, make_graph


class TransformKind(enum.Enum):
    S = "S"
    R = "R"
    Q = "Q"
    T = "T"


def _kind(kind) -> TransformKind:
    try:
        return kind if isinstance(kind, TransformKind) else TransformKind(str(kind).upper())
    except ValueError:
        raise GraphError(f"unknown transform {kind!r}") from None


def transform(g: Graph, kind) -> Graph:
    """Apply S, R, Q or T to a connected graph.

    Vertex order: the original vertices in their order, then one White vertex
    per edge in edge order.
    """
    kind = _kind(kind)
    if not is_connected(g):
        raise GraphError("transforms are defined for connected, nonempty graphs")
    n = g.vertex_count
    labels = list(g.labels) + [EdgeVertex(g.labels[u], g.labels[v]) for u, v in g.edges]
    tags = [Tag.BLACK] * n + [Tag.WHITE] * g.edge_count

    edges = []
    for e, (u, v) in enumerate(g.edges):
        edges.append((u, n + e))
        edges.append((v, n + e))
    if kind in (TransformKind.R, TransformKind.T):
        edges.extend(g.edges)
    if kind in (TransformKind.Q, TransformKind.T):
        incident: list[list[int]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(g.edges):
            incident[u].append(e)
            incident[v].append(e)
        # two distinct simple edges share at most one endpoint, so no repeats
        for es in incident:
            edges.extend((n + a, n + b) for a, b in combinations(es, 2))
    return make_graph(labels, edges, tags)


def line_graph_edge_count(g: Graph) -> int:
    return sum(d * (d - 1) // 2 for d in g.degrees)
