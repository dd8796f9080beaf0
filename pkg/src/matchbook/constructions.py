"""Explicit matching book embeddings for transforms and F-sums.

Each builder returns an embedding and checks it with the validator before
handing it out; a page formula that does not validate raises
:class:`ConstructionError` with the report attached.

Layouts are written with 1-based vertex indices: ``idx[k]`` is the label of
``v_k``, and page ``t`` is stored at list position ``t - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .bounds import edge_coloring
from .embedding import BookEmbedding, ValidationReport, validate
from .fsum import f_sum
from .graph import (
    Color,
    EdgeVertex,
    Graph,
    GraphError,
    Label,
    Pair,
    Plain,
    Tag,
    as_label,
    bipartition,
    components,
    cycle,
    degree_profile,
    is_connected,
    is_odd_cycle,
    outerplanar_order,
    path,
    star,
)
from .transforms import TransformKind, _kind, transform


class ConstructionError(GraphError):
    """A construction's preconditions failed, or its output did not validate."""

    def __init__(self, message: str, report: Optional[ValidationReport] = None):
        super().__init__(message if report is None else f"{message}\n{report}")
        self.report = report


def _checked(g: Graph, emb: BookEmbedding, pages: int, what: str) -> BookEmbedding:
    report = validate(g, emb)
    if not report.ok:
        raise ConstructionError(f"{what}: layout failed validation", report)
    if emb.page_count != pages:
        raise ConstructionError(f"{what}: expected {pages} pages, built {emb.page_count}")
    return emb


# ---------------------------------------------------------------------------
# outerplanar graphs
# ---------------------------------------------------------------------------

def embed_outerplanar(g: Graph, max_vertices: int = 12) -> BookEmbedding:
    """Δ-page matching book embedding of an outerplanar graph that is not an odd cycle.

    Paths and even cycles get their alternating two-page layouts. Otherwise
    the spine is a one-page (printing cycle) order and the pages are the color
    classes of a Δ-edge-coloring. Edgeless graphs get one empty page.
    """
    if is_odd_cycle(g):
        raise ConstructionError("odd cycles are not dispersable")
    delta = g.max_degree
    if g.edge_count == 0:
        return BookEmbedding.build(list(g.labels), [[]])
    if delta <= 2 and is_connected(g):
        return _checked(g, _path_or_cycle_layout(g), delta, "outerplanar (path/cycle)")

    order = outerplanar_order(g, max_vertices=max_vertices)
    if order is None:
        raise ConstructionError("graph is not outerplanar")
    coloring = edge_coloring(g, delta)
    if coloring is None:
        # only possible for Δ = 2 with an odd-cycle component
        raise ConstructionError("graph has no Δ-edge-coloring (odd cycle component with Δ = 2)")
    pages: list[list] = [[] for _ in range(delta)]
    for e, c in coloring.colors.items():
        pages[c].append(e)
    emb = BookEmbedding.build([g.labels[i] for i in order], pages)
    return _checked(g, emb, delta, "outerplanar")


def _path_or_cycle_layout(g: Graph) -> BookEmbedding:
    adj = g.adjacency
    ends = [v for v in range(g.vertex_count) if len(adj[v]) == 1]
    start = ends[0] if ends else 0
    walk, prev = [start], -1
    while len(walk) < g.vertex_count:
        nxt = [w for w in adj[walk[-1]] if w != prev and w not in walk[-2:]]
        prev = walk[-1]
        walk.append(nxt[0])
    labels = [g.labels[v] for v in walk]
    pages: list[list] = [[], []]
    for i in range(len(walk) - 1):
        pages[i % 2].append((labels[i], labels[i + 1]))
    if not ends:
        # even cycle: the closing chord nests over everything on the second page
        pages[1].append((labels[-1], labels[0]))
    return BookEmbedding.build(labels, [p for p in pages if p])


# ---------------------------------------------------------------------------
# Q(S_n) and T(S_n)
# ---------------------------------------------------------------------------

def _star_indices(n: int, center: Label = Plain(0), leaves: Optional[Sequence[Label]] = None) -> dict[int, Label]:
    """Labels of ``Q(S_n)`` by layout index.

    ``v_0`` is the center, ``v_1..v_n`` the White vertices, and the leaf under
    White ``v_k`` is ``v_{2n-k+1}``.
    """
    leaves = list(leaves) if leaves is not None else [Plain(i) for i in range(1, n + 1)]
    idx: dict[int, Label] = {0: center}
    for k in range(1, n + 1):
        leaf = leaves[k - 1]
        idx[k] = EdgeVertex(center, leaf)
        idx[2 * n - k + 1] = leaf
    return idx


def _star_spine(n: int) -> list[int]:
    out = [0]
    for k in range(1, n + 1):
        out += [k, 2 * n - k + 1]
    return out


def _star_pages(n: int) -> list[list[tuple[int, int]]]:
    """The ``n+1`` residue pages of ``Q(S_n)`` as index pairs (page n+1 is residue 0)."""
    pages: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    mod = n + 1
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            pages[(i + j - 1) % mod].append((i, j))
    for k in range(1, n + 1):
        pages[(2 * k - 1) % mod].append((k, 2 * n - k + 1))
    return pages


def _index_embedding(idx: dict[int, Label], spine: Sequence[int], pages) -> BookEmbedding:
    return BookEmbedding.build([idx[i] for i in spine],
                               [[(idx[a], idx[b]) for a, b in page] for page in pages])


def embed_Q_star(n: int) -> BookEmbedding:
    """``(n+1)``-page embedding of ``Q(S_n)`` on the spine v0, v1, v2n, v2, v2n-1, ..., vn, vn+1."""
    if n < 1:
        raise ConstructionError("Q(S_n) needs n >= 1")
    emb = _index_embedding(_star_indices(n), _star_spine(n), _star_pages(n))
    return _checked(transform(star(n), TransformKind.Q), emb, n + 1, f"Q(S_{n})")


def embed_T_star(n: int) -> BookEmbedding:
    """``2n``-page embedding of ``T(S_n)`` for ``n >= 2``.

    The ``Q(S_n)`` layout plus the center-to-leaf edges: ``v0 v_{n+1}`` joins
    page n+1, and page ``p`` for ``n+2 <= p <= 2n`` holds only ``v0 v_p``.
    ``T(S_1)`` is a triangle and needs 3 > 2 pages, so ``n = 1`` is refused.
    """
    if n < 2:
        raise ConstructionError("T(S_1) is a triangle (mbt 3 > Δ 2); need n >= 2")
    pages = _star_pages(n)
    pages[n].append((0, n + 1))
    for p in range(n + 2, 2 * n + 1):
        pages.append([(0, p)])
    emb = _index_embedding(_star_indices(n), _star_spine(n), pages)
    return _checked(transform(star(n), TransformKind.T), emb, 2 * n, f"T(S_{n})")


# ---------------------------------------------------------------------------
# F-sums with a dispersable bipartite right factor
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DispersableInput:
    """A bipartite graph with a Δ-page matching book embedding and its 2-coloring."""

    graph: Graph
    embedding: BookEmbedding
    coloring: dict  # label -> Color

    def __post_init__(self) -> None:
        h = self.graph
        report = validate(h, self.embedding)
        if not report.ok:
            raise ConstructionError("embedding of H is invalid", report)
        if h.vertex_count > 1 and (h.max_degree < 1 or self.embedding.page_count != h.max_degree):
            raise ConstructionError(
                f"H needs a Δ(H)-page embedding with Δ(H) >= 1 "
                f"(Δ={h.max_degree}, pages={self.embedding.page_count})")
        for a, b in h.label_edges():
            if self.coloring[a] == self.coloring[b]:
                raise ConstructionError(f"coloring of H is not proper at {a}-{b}")

    @property
    def max_degree(self) -> int:
        return self.graph.max_degree


def dispersable_input(h: Graph, embedding: Optional[BookEmbedding] = None) -> DispersableInput:
    """Wrap ``h`` for the F-sum builders, computing what is missing.

    Without an explicit embedding the outerplanar layout is used, falling back
    to the exact solver.
    """
    colors = bipartition(h)
    if colors is None:
        raise ConstructionError("H must be bipartite")
    if embedding is None:
        if h.vertex_count == 1:
            embedding = BookEmbedding.build(list(h.labels), [])
        else:
            try:
                embedding = embed_outerplanar(h)
            except ConstructionError:
                from .solver import mbt_exact
                embedding = mbt_exact(h).embedding
    return DispersableInput(h, embedding, dict(zip(h.labels, colors)))


def _copy_spine(idx_spine: Sequence[Label], color: Color) -> list[Label]:
    return list(idx_spine) if color is Color.RED else list(idx_spine)[::-1]


def _fsum_spine(fg_spine: Sequence[Label], h: DispersableInput) -> list[Pair]:
    out: list[Pair] = []
    for u in h.embedding.spine:
        out.extend(Pair(x, u) for x in _copy_spine(fg_spine, h.coloring[u]))
    return out


def _bundle(blacks: Sequence[Label], h_edges) -> list[tuple[Pair, Pair]]:
    return [(Pair(x, a), Pair(x, b)) for a, b in h_edges for x in blacks]


def embed_fsum_generic(g: Graph, h: DispersableInput, kind, emb_fg: BookEmbedding) -> BookEmbedding:
    """Embedding of ``g +_F h`` with ``pages(emb_fg) + Δ(h)`` pages.

    One copy of ``emb_fg`` per vertex of ``h`` along h's spine, reversed for
    Blue vertices; page ``j`` of h becomes a page carrying, for every h-edge on
    it, the bundle of edges between same-named Black vertices of the two copies.
    """
    kind = _kind(kind)
    fg = transform(g, kind)
    report = validate(fg, emb_fg)
    if not report.ok:
        raise ConstructionError(f"embedding of {kind.value}(G) is invalid", report)
    target = f_sum(g, h.graph, kind)
    p = emb_fg.page_count
    if h.graph.vertex_count == 1:
        u = h.graph.labels[0]
        emb = emb_fg.relabel(lambda x: Pair(x, u))
        return _checked(target, emb, p, "F-sum with a single-vertex H")
    blacks = [x for x in emb_fg.spine if fg.tag_of(x) is Tag.BLACK]
    pages = [
        [(Pair(a, u), Pair(b, u)) for u in h.graph.labels for a, b in page]
        for page in emb_fg.pages
    ]
    pages += [_bundle(blacks, hp) for hp in h.embedding.pages]
    emb = BookEmbedding.build(_fsum_spine(emb_fg.spine, h), pages)
    return _checked(target, emb, p + h.embedding.page_count, f"G +_{kind.value} H (generic)")


def embed_transformed(g: Graph, kind) -> BookEmbedding:
    """Best available embedding of ``F(g)``: explicit layouts, else outerplanar, else exact search."""
    kind = _kind(kind)
    fg = transform(g, kind)
    sn = _as_star(g)
    if sn is not None and kind in (TransformKind.Q, TransformKind.T):
        n, center, leaves = sn
        if kind is TransformKind.Q or n >= 2:
            base = embed_Q_star(n) if kind is TransformKind.Q else embed_T_star(n)
            mapping = _star_relabeling(n, center, leaves)
            return _checked(fg, base.relabel(mapping), base.page_count, f"{kind.value}(star)")
    if not is_odd_cycle(fg) and fg.vertex_count <= 12 and outerplanar_order(fg) is not None:
        return embed_outerplanar(fg)
    from .solver import mbt_exact
    return mbt_exact(fg).embedding


def _as_star(g: Graph):
    """``(n, center, leaves)`` if ``g`` is a star ``S_n`` with ``n >= 1``."""
    if not is_connected(g) or g.edge_count != g.vertex_count - 1 or g.vertex_count < 2:
        return None
    deg = g.degrees
    c = max(range(g.vertex_count), key=lambda v: deg[v])
    if deg[c] != g.edge_count:
        return None
    if g.vertex_count == 2:
        c = 0
    return g.edge_count, g.labels[c], [g.labels[w] for w in g.adjacency[c]]


def _star_relabeling(n: int, center: Label, leaves: Sequence[Label]):
    src = _star_indices(n)
    dst = _star_indices(n, center, leaves)
    table = {src[i]: dst[i] for i in src}
    return table.__getitem__


def embed_star_Q(n: int, h: DispersableInput, page_choice: int = 0,
                 center: Label = Plain(0), leaves: Optional[Sequence[Label]] = None) -> BookEmbedding:
    """``(n + Δ(h))``-page embedding of ``S_n +_Q h``.

    Copies use the ``Q(S_n)`` layout (reversed for Blue). The H-page
    ``page_choice`` is spread over the residue pages: its bundle at leaf
    ``v_i`` goes to page ``2n+1-i`` and at the center to page ``n+1``; every
    other H-page becomes a page of full Black bundles. ``center``/``leaves``
    relabel the star (used when a short path is treated as a star).
    """
    if n < 1:
        raise ConstructionError("S_n +_Q H needs n >= 1")
    hg = h.graph
    leaves = list(leaves) if leaves is not None else [Plain(i) for i in range(1, n + 1)]
    sn = _star_graph(center, leaves)
    target = f_sum(sn, hg, TransformKind.Q)
    idx = _star_indices(n, center, leaves)
    if hg.vertex_count == 1:
        u = hg.labels[0]
        base = _index_embedding(idx, _star_spine(n), _star_pages(n))
        return _checked(target, base.relabel(lambda x: Pair(x, u)), n + 1, "S_n +_Q K_1")
    hpages = list(h.embedding.pages)
    if not 0 <= page_choice < len(hpages):
        raise ConstructionError(f"H has no page {page_choice}")
    chosen = hpages[page_choice]
    rest = [pg for i, pg in enumerate(hpages) if i != page_choice]

    copy_spine = [idx[i] for i in _star_spine(n)]
    pages: list[list] = []
    for t, page in enumerate(_star_pages(n), start=1):
        edges = [(Pair(idx[a], u), Pair(idx[b], u)) for u in hg.labels for a, b in page]
        black = idx[2 * n + 1 - t] if t <= n else idx[0]
        edges += _bundle([black], chosen)
        pages.append(edges)
    blacks = [idx[0]] + leaves
    pages += [_bundle(blacks, pg) for pg in rest]
    emb = BookEmbedding.build(_fsum_spine(copy_spine, h), pages)
    return _checked(target, emb, n + len(hpages), f"S_{n} +_Q H")


def _star_graph(center: Label, leaves: Sequence[Label]) -> Graph:
    from .graph import make_graph
    return make_graph([center, *leaves], [(0, i) for i in range(1, len(leaves) + 1)])


def _path_as_star(n: int) -> tuple[Label, list[Label]]:
    if n == 2:
        return Plain(0), [Plain(1)]
    return Plain(1), [Plain(0), Plain(2)]


def embed_path_Q(n: int, h: DispersableInput, page_choice: tuple[int, int] = (0, 1)) -> BookEmbedding:
    """Dispersable embedding of ``P_n +_Q h``.

    For ``n >= 4`` the copies follow ``v_1..v_{2n-1}`` (Blacks left to right,
    then Whites in reverse edge order), reversed for Blue. Page 1 holds
    ``v_i v_j`` with ``i+j = 2n``, page 2 those with ``i+j = 2n+1``, pages 3
    and 4 split the White path edges by parity and carry the Black bundles of
    the two chosen H-pages, and each remaining H-page becomes one page of
    Black bundles. ``n <= 3`` is the star case.
    """
    if n < 1:
        raise ConstructionError("P_n needs n >= 1")
    hg = h.graph
    if n == 1:
        emb = h.embedding.relabel(lambda u: Pair(Plain(0), u))
        return _checked(f_sum(path(1), hg, TransformKind.Q), emb, h.embedding.page_count, "P_1 +_Q H")
    if n <= 3:
        center, leaves = _path_as_star(n)
        emb = embed_star_Q(n - 1, h, page_choice=page_choice[0], center=center, leaves=leaves)
        return _checked(f_sum(path(n), hg, TransformKind.Q), emb, emb.page_count, f"P_{n} +_Q H")

    target = f_sum(path(n), hg, TransformKind.Q)
    idx: dict[int, Label] = {i: Plain(i - 1) for i in range(1, n + 1)}
    for i in range(1, n):
        idx[2 * n - i] = EdgeVertex(Plain(i - 1), Plain(i))
    copy_spine = [idx[i] for i in range(1, 2 * n)]
    blacks = [idx[i] for i in range(1, n + 1)]

    hpages = list(h.embedding.pages)
    if hg.vertex_count == 1:
        hpages = []
    e1_i, e2_i = page_choice
    if e1_i == e2_i:
        raise ConstructionError("the two chosen H-pages must differ")
    e1 = hpages[e1_i] if e1_i < len(hpages) else []
    e2 = hpages[e2_i] if e2_i < len(hpages) else []
    rest = [pg for i, pg in enumerate(hpages) if i not in (e1_i, e2_i)]

    intra: list[list[tuple[int, int]]] = [[], [], [], []]
    for i in range(1, 2 * n):
        for j in range(i + 1, 2 * n):
            if i + j == 2 * n:
                intra[0].append((i, j))
            elif i + j == 2 * n + 1:
                intra[1].append((i, j))
    for i in range(n + 1, 2 * n - 1):
        intra[2 if i % 2 else 3].append((i, i + 1))
    pages = [[(Pair(idx[a], u), Pair(idx[b], u)) for u in hg.labels for a, b in pg] for pg in intra]
    pages[2] += _bundle(blacks, e1)
    pages[3] += _bundle(blacks, e2)
    pages += [_bundle(blacks, pg) for pg in rest]
    emb = BookEmbedding.build(_fsum_spine(copy_spine, h), pages)
    expected = max(4, 2 + len(h.embedding.pages))
    return _checked(target, emb, expected, f"P_{n} +_Q H")


def embed_cycle_Q_cycle(p: int, q: int, page_choice: tuple[int, int] = (0, 1)) -> BookEmbedding:
    """5-page embedding of ``C_p +_Q C_q`` for even ``q``.

    Blacks ``v_1..v_p`` go round the cycle; Whites ``v_{p+1}..v_{2p}`` run the
    other way starting at the White of edge ``v_p v_{p-1}``, so ``v_{2p}`` is
    the White of the closing edge ``v_p v_1``. Copies follow ``v_1..v_{2p}``
    (reversed for Blue); the two pages of ``C_q`` feed the Black bundles on
    pages 4 and 5.
    """
    if p < 3:
        raise ConstructionError("C_p needs p >= 3")
    if q < 4 or q % 2:
        raise ConstructionError("q must be even and at least 4 (odd q is an open question)")
    h = dispersable_input(cycle(q))
    hg = h.graph
    target = f_sum(cycle(p), hg, TransformKind.Q)

    idx: dict[int, Label] = {i: Plain(i - 1) for i in range(1, p + 1)}
    for k in range(1, p + 1):
        a, b = (p - k) or p, p - k + 1  # v_{p-k} v_{p-k+1}, with v_0 = v_p
        idx[p + k] = EdgeVertex(Plain(a - 1), Plain(b - 1))
    copy_spine = [idx[i] for i in range(1, 2 * p + 1)]
    blacks = [idx[i] for i in range(1, p + 1)]

    intra: list[list[tuple[int, int]]] = [[] for _ in range(5)]
    for i in range(1, 2 * p + 1):
        for j in range(i + 1, 2 * p + 1):
            if (i + j) % (2 * p) == 0:
                intra[0].append((i, j))
            elif (i + j) % (2 * p) == 1:
                intra[1].append((i, j))
    intra[2].append((p, 2 * p))
    intra[3].append((p + 1, 2 * p))
    intra[4].append((2 * p - 1, 2 * p))
    if p % 2 == 0:
        intra[2] += [(i, i + 1) for i in range(p + 1, 2 * p - 2) if i % 2 == 1]
        intra[3] += [(i, i + 1) for i in range(p + 2, 2 * p - 1) if i % 2 == 0]
    else:
        intra[2] += [(i, i + 1) for i in range(p + 1, 2 * p - 1) if i % 2 == 0]
        intra[3] += [(i, i + 1) for i in range(p + 2, 2 * p - 2) if i % 2 == 1]

    pages = [[(Pair(idx[a], u), Pair(idx[b], u)) for u in hg.labels for a, b in pg] for pg in intra]
    e1, e2 = (h.embedding.pages[i] for i in page_choice)
    pages[3] += _bundle(blacks, e1)
    pages[4] += _bundle(blacks, e2)
    emb = BookEmbedding.build(_fsum_spine(copy_spine, h), pages)
    return _checked(target, emb, 5, f"C_{p} +_Q C_{q}")
