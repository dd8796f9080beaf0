"""Tagged simple graphs with structured vertex labels.

Vertices carry a stable label and a Black/White tag. Black vertices stand for
original vertices, White vertices for edges of some underlying graph; the
F-sum constructions key every spine rule off that tag.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, NamedTuple, Optional, Sequence, Union


class GraphError(ValueError):
    """Raised for malformed graph input or unsupported parameters."""


class SizeBudgetExceeded(GraphError):
    """Raised when a desk-scale search is asked to handle too large an input."""


class Tag(enum.Enum):
    BLACK = "black"
    WHITE = "white"


class Color(enum.Enum):
    RED = "red"
    BLUE = "blue"


# ---------------------------------------------------------------------------
# Labels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Plain:
    """An original vertex, named by an int or a string."""

    name: Union[int, str]

    def __str__(self) -> str:
        return str(self.name)


@dataclass(frozen=True)
class EdgeVertex:
    """A vertex standing for the edge ``u v``; stored with ``u < v``."""

    u: "Label"
    v: "Label"

    def __post_init__(self) -> None:
        if label_key(self.v) < label_key(self.u):
            a, b = self.v, self.u
            object.__setattr__(self, "u", a)
            object.__setattr__(self, "v", b)

    def __str__(self) -> str:
        return f"{self.u}~{self.v}"


@dataclass(frozen=True)
class Pair:
    """F-sum / product vertex: ``x`` from the left factor, ``u`` from the right."""

    x: "Label"
    u: "Label"

    def __str__(self) -> str:
        return f"({self.x},{self.u})"


Label = Union[Plain, EdgeVertex, Pair]


def label_key(label: Label) -> tuple:
    """Total order on labels, usable across the three label kinds."""
    if isinstance(label, Plain):
        name = label.name
        return (0, (0, name, "") if isinstance(name, int) else (1, 0, name))
    if isinstance(label, EdgeVertex):
        return (1, label_key(label.u), label_key(label.v))
    if isinstance(label, Pair):
        return (2, label_key(label.x), label_key(label.u))
    raise TypeError(f"not a vertex label: {label!r}")


def as_label(obj: Union[Label, int, str]) -> Label:
    if isinstance(obj, (Plain, EdgeVertex, Pair)):
        return obj
    if isinstance(obj, (int, str)) and not isinstance(obj, bool):
        return Plain(obj)
    raise GraphError(f"cannot use {obj!r} as a vertex label")


def canonical_pair(a: Label, b: Label) -> tuple[Label, Label]:
    return (a, b) if label_key(a) <= label_key(b) else (b, a)


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph.

    Build instances with :func:`make_graph` or :func:`graph_from_edges`; the
    constructor assumes its arguments are already normalized.
    """

    labels: tuple[Label, ...]
    tags: tuple[Tag, ...]
    edges: tuple[tuple[int, int], ...]
    _index: dict = field(repr=False, compare=False)

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def index(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label}") from None

    def __contains__(self, label: object) -> bool:
        return label in self._index

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in self.labels]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def label_edges(self) -> list[tuple[Label, Label]]:
        """Edges as canonical label pairs, in edge order."""
        return [canonical_pair(self.labels[u], self.labels[v]) for u, v in self.edges]

    @cached_property
    def labeled_edge_set(self) -> frozenset:
        return frozenset(self.label_edges())

    def tag_of(self, label: Label) -> Tag:
        return self.tags[self.index(label)]

    def same_as(self, other: "Graph") -> bool:
        """Identical labeled vertex set, tags and edge set."""
        return (
            dict(zip(self.labels, self.tags)) == dict(zip(other.labels, other.tags))
            and self.labeled_edge_set == other.labeled_edge_set
        )

    def relabel(self, mapping) -> "Graph":
        labels = [mapping(l) if callable(mapping) else mapping[l] for l in self.labels]
        return make_graph(labels, self.edges, self.tags)

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


def make_graph(
    labels: Sequence,
    edges: Iterable[tuple[int, int]],
    tags: Optional[Sequence[Tag]] = None,
) -> Graph:
    """Build a normalized graph from labels and index-pair edges.

    Edges are canonicalized to ``u < v`` and sorted. Loops, repeated edges,
    repeated labels and out-of-range endpoints raise :class:`GraphError`.
    """
    labs = tuple(as_label(l) for l in labels)
    n = len(labs)
    index: dict = {}
    for i, lab in enumerate(labs):
        if lab in index:
            raise GraphError(f"duplicate label {lab}")
        index[lab] = i
    if tags is None:
        tag_t = (Tag.BLACK,) * n
    else:
        tag_t = tuple(Tag(t) for t in tags)
        if len(tag_t) != n:
            raise GraphError("tags and labels differ in length")
    seen = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {e} has an endpoint out of range")
        if u == v:
            raise GraphError(f"loop at vertex {labs[u]}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge {labs[key[0]]}-{labs[key[1]]}")
        seen.add(key)
    return Graph(labs, tag_t, tuple(sorted(seen)), index)


def graph_from_edges(
    vertices: Sequence,
    label_edges: Iterable[tuple],
    tags: Optional[Sequence[Tag]] = None,
) -> Graph:
    """Like :func:`make_graph` but with edges given as label pairs."""
    labs = [as_label(v) for v in vertices]
    pos = {l: i for i, l in enumerate(labs)}
    idx_edges = []
    for a, b in label_edges:
        a, b = as_label(a), as_label(b)
        if a not in pos or b not in pos:
            raise GraphError(f"edge {a}-{b} names an unknown vertex")
        idx_edges.append((pos[a], pos[b]))
    return make_graph(labs, idx_edges, tags)


# ---------------------------------------------------------------------------
# Structural queries
# ---------------------------------------------------------------------------

class DegreeProfile(NamedTuple):
    degrees: tuple[int, ...]
    max_degree: int
    is_regular: bool


def degree_profile(g: Graph) -> DegreeProfile:
    d = g.degrees
    return DegreeProfile(d, max(d, default=0), len(set(d)) <= 1)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    out = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.vertex_count > 0 and len(components(g)) == 1


def bipartition(g: Graph) -> Optional[list[Color]]:
    """Proper Red/Blue 2-coloring, or ``None`` if ``g`` has an odd cycle.

    In each component the least-index vertex is Red.
    """
    side = _two_color(g)
    if side is None:
        return None
    return [Color.RED if s == 0 else Color.BLUE for s in side]


def _two_color(g: Graph) -> Optional[list[int]]:
    side = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def odd_closed_walk(g: Graph) -> Optional[list[int]]:
    """An odd cycle as a vertex list ``[v0, ..., v_{2r}]`` (closing edge implied).

    Returns ``None`` for bipartite graphs.
    """
    n = g.vertex_count
    depth = [-1] * n
    parent = [-1] * n
    for s in range(n):
        if depth[s] >= 0:
            continue
        depth[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif depth[w] == depth[u]:
                    # same BFS level: tree paths to the common ancestor plus uw
                    left, right = [u], [w]
                    a, b = u, w
                    while a != b:
                        a, b = parent[a], parent[b]
                        left.append(a)
                        right.append(b)
                    return left + right[-2::-1]
    return None


def is_odd_cycle(g: Graph) -> bool:
    prof = degree_profile(g)
    return (
        g.vertex_count >= 3
        and g.vertex_count % 2 == 1
        and prof.is_regular
        and prof.max_degree == 2
        and is_connected(g)
    )


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """``g1 □ g2`` with vertices ``Pair(x, u)``; tags come from the ``g1`` side."""
    n1, n2 = g1.vertex_count, g2.vertex_count
    labels = [Pair(x, u) for u in g2.labels for x in g1.labels]
    tags = [t for _ in g2.labels for t in g1.tags]
    edges = []
    for j in range(n2):
        base = j * n1
        edges.extend((base + a, base + b) for a, b in g1.edges)
    for a, b in g2.edges:
        edges.extend((a * n1 + i, b * n1 + i) for i in range(n1))
    return make_graph(labels, edges, tags)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return make_graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return make_graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """``S_n``: center ``0`` joined to leaves ``1..n``."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return make_graph(range(n + 1), [(0, i) for i in range(1, n + 1)])


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    offs = sorted(set(offsets))
    if n < 3 or not offs:
        raise GraphError("circulant needs n >= 3 and at least one offset")
    for s in offs:
        if not 1 <= s <= n // 2:
            raise GraphError(f"circulant offset {s} outside 1..{n // 2}")
    edges = {tuple(sorted((i, (i + s) % n))) for i in range(n) for s in offs}
    return make_graph(range(n), edges)


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return make_graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides nonempty")
    return make_graph(range(a + b), [(i, a + j) for i in range(a) for j in range(b)])


GENERATORS = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "circulant": lambda n, *offs: circulant(n, offs),
    "complete": complete,
    "complete-bipartite": complete_bipartite,
}


def generate(kind: str, *params: int) -> Graph:
    try:
        fn = GENERATORS[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}; choose from {sorted(GENERATORS)}") from None
    try:
        return fn(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {kind}: {exc}") from None


# ---------------------------------------------------------------------------
# Isomorphism and outerplanarity (desk scale)
# ---------------------------------------------------------------------------

def find_isomorphism(g1: Graph, g2: Graph, max_vertices: int = 16) -> Optional[dict[int, int]]:
    """Edge-preserving bijection ``g1 -> g2`` by index, or ``None``. Tags ignored."""
    n = g1.vertex_count
    if max(n, g2.vertex_count) > max_vertices:
        raise SizeBudgetExceeded(f"isomorphism test capped at {max_vertices} vertices")
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    if sorted(g1.degrees) != sorted(g2.degrees):
        return None
    # place g1 vertices in BFS order so each new vertex has mapped neighbors early
    order: list[int] = []
    seen = [False] * n
    for s in sorted(range(n), key=lambda v: -g1.degrees[v]):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(g1.adjacency[u], key=lambda v: -g1.degrees[v]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    nb1 = [set(a) for a in g1.adjacency]
    nb2 = [set(a) for a in g2.adjacency]
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        for w in range(n):
            if used[w] or g2.degrees[w] != g1.degrees[u]:
                continue
            if all((mapping[x] in nb2[w]) == (x in nb1[u]) for x in mapping):
                mapping[u] = w
                used[w] = True
                if extend(i + 1):
                    return True
                del mapping[u]
                used[w] = False
        return False

    return dict(mapping) if extend(0) else None


def isomorphic(g1: Graph, g2: Graph, max_vertices: int = 16) -> bool:
    return find_isomorphism(g1, g2, max_vertices) is not None


def outerplanar_order(g: Graph, max_vertices: int = 12) -> Optional[list[int]]:
    """A vertex order in which all edges are pairwise non-crossing chords.

    Returns vertex indices, or ``None`` when no such order exists (``g`` is not
    outerplanar). Backtracks over orders with vertex 0 first; a partial order
    is abandoned as soon as a placed vertex with unplaced neighbors is enclosed
    by a chord, since its future edge would have to cross that chord.
    """
    n = g.vertex_count
    if n > max_vertices:
        raise SizeBudgetExceeded(f"outerplanar search capped at {max_vertices} vertices")
    if n <= 3:
        return list(range(n))
    if g.edge_count > 2 * n - 3:
        return None
    adj = g.adjacency
    pos = [-1] * n
    order: list[int] = []
    remaining = list(g.degrees)  # neighbors not yet placed

    def place(v: int) -> bool:
        d = len(order)
        for w in adj[v]:
            q = pos[w]
            if q >= 0:
                # new chord (q, d): every vertex strictly inside must be finished
                for x in order[q + 1:]:
                    if remaining[x] > (1 if x in adj[v] else 0):
                        return False
                    # edges x-y with y placed left of q would cross (q, d)
                    for y in adj[x]:
                        if 0 <= pos[y] < q:
                            return False
        pos[v] = d
        order.append(v)
        for w in adj[v]:
            remaining[w] -= 1
        return True

    def unplace(v: int) -> None:
        order.pop()
        pos[v] = -1
        for w in adj[v]:
            remaining[w] += 1

    def search() -> bool:
        if len(order) == n:
            return True
        for v in range(1, n):
            if pos[v] >= 0:
                continue
            if place(v):
                if search():
                    return True
                unplace(v)
        return False

    place(0)
    return list(order) if search() else None
