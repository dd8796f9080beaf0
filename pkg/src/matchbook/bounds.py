"""Edge colorings, chromatic index, and lower bounds on matching book thickness.

Every matching book embedding is a proper edge coloring (page = color), so
``Δ ≤ χ′ ≤ mbt``. Two structural facts raise the bound to ``Δ + 1``: a
regular graph is dispersable only if bipartite, and the circulants
``C(Z_n, {1, k})`` with ``n`` and ``k`` even are never dispersable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Optional

from .graph import (
    Graph,
    GraphError,
    canonical_pair,
    circulant,
    degree_profile,
    find_isomorphism,
    odd_closed_walk,
)

DEFAULT_COLORING_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    """A node-counted search ran out of budget before deciding."""

    def __init__(self, message: str, nodes: int = 0, bracket: Optional[tuple[int, int | None]] = None):
        super().__init__(message)
        self.nodes = nodes
        self.bracket = bracket


@dataclass(frozen=True)
class EdgeColoring:
    colors: dict  # canonical label pair -> color index
    color_count: int

    def is_proper(self) -> bool:
        at: dict = {}
        for (a, b), c in self.colors.items():
            for x in (a, b):
                if (x, c) in at:
                    return False
                at[x, c] = True
        return True


def edge_coloring(g: Graph, k: int, budget: int = DEFAULT_COLORING_BUDGET) -> Optional[EdgeColoring]:
    """A proper ``k``-edge-coloring of ``g``, or ``None`` if none exists.

    Backtracks over edges by descending endpoint-degree sum; colors are opened
    in order (the first edge always gets color 0). Raises
    :class:`BudgetExceeded` after ``budget`` search nodes.
    """
    coloring, _ = _edge_coloring_search(g, k, budget)
    return coloring


def _edge_coloring_search(g: Graph, k: int, budget: int) -> tuple[Optional[EdgeColoring], int]:
    if k < 1:
        raise GraphError("need at least one color")
    m = g.edge_count
    if m == 0:
        return EdgeColoring({}, 0), 0
    if g.max_degree > k:
        return None, 0
    deg = g.degrees
    order = sorted(range(m), key=lambda e: (-(deg[g.edges[e][0]] + deg[g.edges[e][1]]), g.edges[e]))
    ends = [g.edges[e] for e in order]
    used = [0] * g.vertex_count  # bitmask of colors at each vertex
    color = [-1] * m
    nodes = 0

    def search(i: int, opened: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        u, v = ends[i]
        busy = used[u] | used[v]
        for c in range(min(opened + 1, k)):
            if busy >> c & 1:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"edge coloring with {k} colors exceeded {budget} nodes", nodes)
            bit = 1 << c
            used[u] |= bit
            used[v] |= bit
            color[i] = c
            if search(i + 1, max(opened, c + 1)):
                return True
            used[u] ^= bit
            used[v] ^= bit
        return False

    if not search(0, 0):
        return None, nodes
    colors = {canonical_pair(g.labels[u], g.labels[v]): color[i] for i, (u, v) in enumerate(ends)}
    return EdgeColoring(colors, max(color) + 1), nodes


def chromatic_index(g: Graph, budget: int = DEFAULT_COLORING_BUDGET) -> tuple[int, EdgeColoring]:
    """Smallest ``k`` with a proper ``k``-edge-coloring (only Δ and Δ+1 are tried)."""
    delta = g.max_degree
    if delta == 0:
        return 0, EdgeColoring({}, 0)
    for k in (delta, delta + 1):
        col = edge_coloring(g, k, budget)
        if col is not None:
            return k, col
    raise AssertionError("Vizing's theorem violated; the coloring search is broken")


class BoundReason(enum.Enum):
    MAX_DEGREE = "MaxDegree"
    CHROMATIC_INDEX = "ChromaticIndex"
    REGULAR_NON_BIPARTITE = "RegularNonBipartite"
    CIRCULANT_EVEN_EVEN = "CirculantEvenEven"


@dataclass(frozen=True)
class BoundCertificate:
    """Lower bound ``mbt(G) >= value`` with a checkable witness.

    Witness payloads by reason:

    * MaxDegree: ``{"vertex": i}``
    * ChromaticIndex: ``{"infeasible_colors": k, "nodes": count}``
    * RegularNonBipartite: ``{"degree": d, "odd_walk": [v0, ..., v_{2r}]}``
    * CirculantEvenEven: ``{"n": n, "k": k, "mapping": {i: j}}``
    """

    value: int
    reason: BoundReason
    witness: dict[str, Any]

    def describe(self) -> str:
        return f"mbt >= {self.value} ({self.reason.value})"


def mbt_lower_bound(
    g: Graph,
    circulant_params: Optional[tuple[int, int]] = None,
    coloring_budget: int = DEFAULT_COLORING_BUDGET,
    max_coloring_edges: int = 40,
) -> BoundCertificate:
    """Best lower bound on ``mbt(g)`` from the rules above.

    ``circulant_params=(n, k)`` asserts that ``g`` came out of a pipeline
    producing ``C(Z_n, {1, k})``; the claim is checked by isomorphism before it
    is used. The chromatic index is only attempted for graphs with at most
    ``max_coloring_edges`` edges and is skipped if its search runs out of budget.
    Ties go to the more specific reason.
    """
    prof = degree_profile(g)
    delta = prof.max_degree
    best = BoundCertificate(delta, BoundReason.MAX_DEGREE,
                            {"vertex": prof.degrees.index(delta) if g.vertex_count else None})

    def offer(cert: BoundCertificate) -> None:
        nonlocal best
        if cert.value >= best.value:
            best = cert

    if 0 < g.edge_count <= max_coloring_edges:
        try:
            col, nodes = _edge_coloring_search(g, delta, coloring_budget)
        except BudgetExceeded:
            pass
        else:
            if col is None:
                offer(BoundCertificate(delta + 1, BoundReason.CHROMATIC_INDEX,
                                       {"infeasible_colors": delta, "nodes": nodes}))

    if prof.is_regular and delta > 0:
        walk = odd_closed_walk(g)
        if walk is not None:
            offer(BoundCertificate(delta + 1, BoundReason.REGULAR_NON_BIPARTITE,
                                   {"degree": delta, "odd_walk": walk}))

    if circulant_params is not None:
        n, k = circulant_params
        if n % 2 == 0 and k % 2 == 0 and g.vertex_count == n and 1 <= k <= n // 2:
            mapping = find_isomorphism(g, circulant(n, (1, k)), max_vertices=max(16, n))
            if mapping is not None:
                offer(BoundCertificate(delta + 1, BoundReason.CIRCULANT_EVEN_EVEN,
                                       {"n": n, "k": k, "mapping": mapping}))
    return best


def verify_certificate(g: Graph, cert: BoundCertificate) -> bool:
    """Re-check a certificate's witness against ``g`` from scratch."""
    w = cert.witness
    prof = degree_profile(g)
    if cert.reason is BoundReason.MAX_DEGREE:
        if g.vertex_count == 0:
            return cert.value == 0
        return g.degrees[w["vertex"]] == cert.value
    if cert.reason is BoundReason.CHROMATIC_INDEX:
        k = w["infeasible_colors"]
        return cert.value == k + 1 and edge_coloring(g, k) is None
    if cert.reason is BoundReason.REGULAR_NON_BIPARTITE:
        walk = w["odd_walk"]
        closed = list(zip(walk, walk[1:] + walk[:1]))
        return (
            prof.is_regular
            and prof.max_degree == w["degree"]
            and cert.value == w["degree"] + 1
            and len(walk) % 2 == 1
            and all(g.has_edge(a, b) for a, b in closed)
        )
    if cert.reason is BoundReason.CIRCULANT_EVEN_EVEN:
        n, k, mapping = w["n"], w["k"], w["mapping"]
        if n % 2 or k % 2 or g.vertex_count != n or cert.value != prof.max_degree + 1:
            return False
        target = circulant(n, (1, k))
        if sorted(mapping.values()) != list(range(n)):
            return False
        image = {tuple(sorted((mapping[a], mapping[b]))) for a, b in g.edges}
        return image == set(target.edges)
    return False


class Classification(enum.Enum):
    DISPERSABLE = "Dispersable"
    NEARLY_DISPERSABLE = "NearlyDispersable"
    OTHER = "Other"


def classify(g: Graph, mbt_value: int) -> Classification:
    delta = g.max_degree
    if mbt_value < delta:
        raise GraphError(f"mbt {mbt_value} is below the maximum degree {delta}")
    if mbt_value == delta:
        return Classification.DISPERSABLE
    if mbt_value == delta + 1:
        return Classification.NEARLY_DISPERSABLE
    return Classification.OTHER
