"""F-sums ``G1 +_F G2``.

One copy of ``F(G1)`` per vertex of ``G2``; Black vertices with the same name
are joined across copies whose ``G2`` vertices are adjacent. White vertices
never get inter-copy edges.
"""

from __future__ import annotations

from .graph import Graph, Pair, Tag, cartesian_product, make_graph
from .transforms import transform


def f_sum(g1: Graph, g2: Graph, kind) -> Graph:
    """Build ``g1 +_F g2`` straight from the adjacency rule.

    Copies are ordered by ``g2`` vertex index; within a copy the vertices
    follow the order of ``F(g1)``.
    """
    fg = transform(g1, kind)
    k = fg.vertex_count
    labels = [Pair(x, u) for u in g2.labels for x in fg.labels]
    tags = [t for _ in g2.labels for t in fg.tags]
    edges = []
    for j in range(g2.vertex_count):
        base = j * k
        edges.extend((base + a, base + b) for a, b in fg.edges)
    blacks = [i for i, t in enumerate(fg.tags) if t is Tag.BLACK]
    for a, b in g2.edges:
        edges.extend((a * k + i, b * k + i) for i in blacks)
    return make_graph(labels, edges, tags)


def f_sum_via_product(g1: Graph, g2: Graph, kind) -> Graph:
    """Reference path: ``F(g1) □ g2`` minus the inter-copy edges at White vertices."""
    prod = cartesian_product(transform(g1, kind), g2)
    keep = []
    for a, b in prod.edges:
        la, lb = prod.labels[a], prod.labels[b]
        inter_copy = la.x == lb.x
        if inter_copy and prod.tags[a] is Tag.WHITE:
            continue
        keep.append((a, b))
    return make_graph(prod.labels, keep, prod.tags)
