"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import random

import networkx as nx

from matchbook.graph import Graph, is_connected, make_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return make_graph(range(len(nodes)), [(pos[a], pos[b]) for a, b in h.edges()])


def _chromatic_number(n: int, conflicts: list[set[int]]) -> int:
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda i: -len(conflicts[i]))
    for k in range(1, n + 1):
        color = [-1] * n

        def go(t: int) -> bool:
            if t == n:
                return True
            i = order[t]
            used = {color[j] for j in conflicts[i] if color[j] >= 0}
            top = max(color) + 1
            for c in range(min(k, top + 1)):
                if c not in used:
                    color[i] = c
                    if go(t + 1):
                        return True
            color[i] = -1
            return False

        if go(0):
            return k
    raise AssertionError


def brute_mbt(g: Graph) -> int:
    """Minimum over every spine permutation of the chromatic number of the
    edge conflict graph (shared endpoint or interleaving chords)."""
    m = g.edge_count
    best = m
    for perm in itertools.permutations(range(g.vertex_count)):
        pos = {v: i for i, v in enumerate(perm)}
        conflicts = [set() for _ in range(m)]
        for i, j in itertools.combinations(range(m), 2):
            (a, b), (c, d) = g.edges[i], g.edges[j]
            shared = len({a, b, c, d}) < 4
            a, b = sorted((pos[a], pos[b]))
            c, d = sorted((pos[c], pos[d]))
            if shared or (a < c < b) != (a < d < b):
                conflicts[i].add(j)
                conflicts[j].add(i)
        best = min(best, _chromatic_number(m, conflicts))
    return best


def brute_chromatic_index(g: Graph) -> int:
    m = g.edge_count
    conflicts = [set() for _ in range(m)]
    for i, j in itertools.combinations(range(m), 2):
        if set(g.edges[i]) & set(g.edges[j]):
            conflicts[i].add(j)
            conflicts[j].add(i)
    return _chromatic_number(m, conflicts)


def is_outerplanar(g: Graph) -> bool:
    """G is outerplanar iff G plus a universal apex vertex is planar."""
    h = to_nx(g)
    apex = g.vertex_count
    h.add_edges_from((apex, v) for v in range(g.vertex_count))
    return nx.check_planarity(h)[0]


def random_connected(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for a, b in itertools.combinations(range(n), 2):
        if (a, b) not in edges and rng.random() < extra:
            edges.add((a, b))
    g = make_graph(range(n), edges)
    assert n == 0 or is_connected(g)
    return g


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    return make_graph(range(n), [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_outerplanar(rng: random.Random, n: int) -> Graph:
    """Random maximal outerplanar graph (triangulated polygon) minus random
    edges, kept connected."""
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {tuple(sorted((perm[i], perm[(i + 1) % n]))) for i in range(n)} if n >= 3 else set()
    if n == 2:
        edges = {(0, 1)}

    def triangulate(poly):
        if len(poly) < 4:
            return
        i = rng.randrange(len(poly))
        j = (i + rng.randrange(2, len(poly) - 1)) % len(poly)
        a, b = sorted((i, j))
        edges.add(tuple(sorted((poly[a], poly[b]))))
        triangulate(poly[a:b + 1])
        triangulate(poly[b:] + poly[:a + 1])

    triangulate(perm)
    edges = list(edges)
    rng.shuffle(edges)
    drop = rng.randint(0, max(0, len(edges) - (n - 1)))
    for e in edges[:]:
        if drop == 0:
            break
        trial = make_graph(range(n), [f for f in edges if f != e])
        if is_connected(trial):
            edges.remove(e)
            drop -= 1
    return make_graph(range(n), edges)
