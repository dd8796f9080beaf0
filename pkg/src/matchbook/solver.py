"""Exact matching book thickness at desk scale, plus a heuristic upper bound."""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernel
from .bounds import BoundCertificate, BudgetExceeded, mbt_lower_bound
from .embedding import BookEmbedding
from .graph import Graph, GraphError, SizeBudgetExceeded, as_label

DEFAULT_BUDGET = 20_000_000
DEFAULT_MAX_VERTICES = 12
MAX_PAGES = 64


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    branches: int
    pages_tried: tuple[int, ...]
    elapsed: float
    backend: str


@dataclass(frozen=True)
class SolveResult:
    mbt: int
    embedding: BookEmbedding
    lower_certificate: BoundCertificate
    stats: SearchStats

    @property
    def certified_by_bound(self) -> bool:
        """Optimality follows from the certificate alone, without exhaustion."""
        return self.lower_certificate.value == self.mbt


def _edge_order(g: Graph) -> list[tuple[int, int]]:
    deg = g.degrees
    return sorted(g.edges, key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))


def _branches(n: int) -> list[int]:
    return [v for v in range(1, n) if not (v == n - 1 and n >= 3)]


def _embedding_from(g: Graph, order: Sequence[int], triples) -> BookEmbedding:
    used = 1 + max((p for *_, p in triples), default=-1)
    pages: list[list] = [[] for _ in range(used)]
    for u, v, p in triples:
        pages[p].append((g.labels[u], g.labels[v]))
    return BookEmbedding.build([g.labels[i] for i in order], pages)


def _decide(g: Graph, k: int, spine, budget: int, threads: int, backend):
    """One feasibility question. Returns ``(status, embedding, nodes, branches)``."""
    n, m = g.vertex_count, g.edge_count
    if m == 0:
        order = list(range(n)) if spine is None else [g.index(as_label(v)) for v in spine]
        return kernel.FOUND, BookEmbedding.build([g.labels[i] for i in order], []), 0, 0
    if k < 1 or k < g.max_degree:
        return kernel.EXHAUSTED, None, 0, 0
    k = min(k, MAX_PAGES)

    if spine is not None:
        order = [g.index(as_label(v)) for v in spine]
        if sorted(order) != list(range(n)):
            raise GraphError("fixed spine is not a permutation of the vertices")
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        edges = _edge_order(g)
        lo = [min(pos[u], pos[v]) for u, v in edges]
        hi = [max(pos[u], pos[v]) for u, v in edges]
        status, pages, nodes = backend.assign_pages(n, lo, hi, k, budget)
        if status != kernel.FOUND:
            return status, None, nodes, 1
        triples = [(u, v, p) for (u, v), p in zip(edges, pages)]
        return status, _embedding_from(g, order, triples), nodes, 1

    adjacency = [list(a) for a in g.adjacency]
    branches = _branches(n)
    if threads <= 1 or len(branches) <= 1:
        status, order, triples, nodes = backend.search_spine(n, adjacency, k, budget)
        emb = _embedding_from(g, order, triples) if status == kernel.FOUND else None
        return status, emb, nodes, len(branches)

    # Explore position-1 branches concurrently, then replay them in sequential
    # order so the witness and node count match the single-threaded search.
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(backend.search_spine, n, adjacency, k, budget, b) for b in branches]
        results = [f.result() for f in futures]
    spent = 0
    for i, (status, order, triples, nodes) in enumerate(results):
        if spent + nodes > budget:
            return kernel.OUT_OF_BUDGET, None, budget + 1, i + 1
        spent += nodes
        if status == kernel.FOUND:
            return status, _embedding_from(g, order, triples), spent, i + 1
    return kernel.EXHAUSTED, None, spent, len(branches)


def embed_with_k(
    g: Graph,
    k: int,
    spine: Optional[Sequence] = None,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    backend: Optional[str] = None,
) -> Optional[BookEmbedding]:
    """A matching book embedding with at most ``k`` pages, or ``None``.

    ``None`` means the search was exhausted; running out of ``budget`` search
    nodes raises :class:`BudgetExceeded` instead. With ``spine`` given only the
    page assignment is searched.
    """
    if k < 0:
        raise GraphError("k must be nonnegative")
    status, emb, nodes, _ = _decide(g, k, spine, budget, threads, kernel.get_backend(backend))
    if status == kernel.OUT_OF_BUDGET:
        raise BudgetExceeded(f"no decision for k={k} within {budget} nodes", nodes)
    return emb


def mbt_exact(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    spine: Optional[Sequence] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    circulant_params: Optional[tuple[int, int]] = None,
    backend: Optional[str] = None,
) -> SolveResult:
    """Exact matching book thickness (over all spines unless ``spine`` is fixed).

    Tries ``k`` upward from the best lower bound; the first feasible ``k`` is
    the answer. ``budget`` caps the total number of search nodes; when it runs
    out, :class:`BudgetExceeded` carries the bracket ``(lo, hi)`` known so far
    (``hi`` from :func:`heuristic_upper`).
    """
    if spine is None and g.vertex_count > max_vertices:
        raise SizeBudgetExceeded(
            f"free-spine search capped at {max_vertices} vertices (graph has {g.vertex_count})")
    impl = kernel.get_backend(backend)
    name = kernel.BACKEND_NAME if backend is None else backend
    t0 = time.perf_counter()
    cert = mbt_lower_bound(g, circulant_params=circulant_params)
    k = cert.value
    spent, branches, tried = 0, 0, []
    while True:
        tried.append(k)
        status, emb, nodes, br = _decide(g, k, spine, budget - spent, threads, impl)
        spent += nodes
        branches += br
        if status == kernel.FOUND:
            stats = SearchStats(spent, branches, tuple(tried), time.perf_counter() - t0, name)
            return SolveResult(emb.page_count, emb, cert, stats)
        if status == kernel.OUT_OF_BUDGET:
            hi = heuristic_upper(g).page_count if spine is None else None
            raise BudgetExceeded(
                f"mbt undecided at k={k} after {spent} nodes", spent, bracket=(k, hi))
        k += 1
        if k > max(g.edge_count, 1):
            raise AssertionError("search exhausted every page count; kernel is broken")


# ---------------------------------------------------------------------------
# heuristic
# ---------------------------------------------------------------------------

def _greedy_pages(order: Sequence[int], edges: Sequence[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """First-fit page assignment on a fixed spine, short chords first."""
    pos = {v: i for i, v in enumerate(order)}
    chords = sorted(
        ((min(pos[u], pos[v]), max(pos[u], pos[v]), u, v) for u, v in edges),
        key=lambda c: (c[1] - c[0], c[0]),
    )
    pages: list[list] = []
    arcs: list[list[tuple[int, int]]] = []
    busy: list[set] = []
    for a, b, u, v in chords:
        for p in range(len(pages)):
            if a in busy[p] or b in busy[p]:
                continue
            if any((c < a < d) != (c < b < d) for c, d in arcs[p]):
                continue
            break
        else:
            pages.append([])
            arcs.append([])
            busy.append(set())
            p = len(pages) - 1
        pages[p].append((u, v))
        arcs[p].append((a, b))
        busy[p].update((a, b))
    return pages


def _tight_pages(g: Graph, order: Sequence[int], greedy, impl, budget: int):
    """Lower the first-fit page count with exact assignment on the same spine."""
    best = greedy
    n = g.vertex_count
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    edges = _edge_order(g)
    lo = [min(pos[u], pos[v]) for u, v in edges]
    hi = [max(pos[u], pos[v]) for u, v in edges]
    for k in range(len(greedy) - 1, max(g.max_degree, 1) - 1, -1):
        status, pages, _ = impl.assign_pages(n, lo, hi, k, budget)
        if status != kernel.FOUND:
            break
        found: list[list] = [[] for _ in range(max(pages) + 1)]
        for e, p in zip(edges, pages):
            found[p].append(e)
        best = found
    return best


def _score(pages) -> tuple[int, int]:
    return (len(pages), min((len(p) for p in pages), default=0))


def heuristic_upper(
    g: Graph,
    seed: int = 0,
    tries: int = 4,
    steps: int = 150,
    assign_budget: int = 20_000,
    backend: Optional[str] = None,
) -> BookEmbedding:
    """A valid matching book embedding found by restarted local search.

    The first restart uses the graph's own vertex order, later ones random
    orders. Each restart hill-climbs over adjacent transpositions of the spine.
    A spine is scored by its first-fit page count, tightened by an exact page
    assignment on that spine capped at ``assign_budget`` nodes (fewer pages,
    then a smaller smallest page). No optimality claim.
    """
    n = g.vertex_count
    if g.edge_count == 0:
        return BookEmbedding.build(list(g.labels), [])
    impl = kernel.get_backend(backend)
    rng = random.Random(seed)

    def evaluate(order):
        return _tight_pages(g, order, _greedy_pages(order, g.edges), impl, assign_budget)

    best_order, best_pages = None, None
    for t in range(max(1, tries)):
        order = list(range(n))
        if t > 0:
            rng.shuffle(order)
        pages = evaluate(order)
        score = _score(pages)
        for _ in range(steps):
            i = rng.randrange(n - 1) if n > 1 else 0
            cand = order[:]
            cand[i], cand[i + 1] = cand[i + 1], cand[i]
            cpages = evaluate(cand)
            cscore = _score(cpages)
            if cscore <= score:
                order, pages, score = cand, cpages, cscore
        if best_pages is None or score < _score(best_pages):
            best_order, best_pages = order, pages
    return BookEmbedding.build(
        [g.labels[i] for i in best_order],
        [[(g.labels[u], g.labels[v]) for u, v in page] for page in best_pages],
    )
