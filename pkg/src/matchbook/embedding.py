"""Matching book embeddings and their validator."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, GraphError, Label, Pair, as_label, canonical_pair, label_key


@dataclass(frozen=True)
class BookEmbedding:
    """Spine order of vertex labels plus one edge list per page.

    Edges are canonical label pairs; pages keep the order they were built in.
    """

    spine: tuple[Label, ...]
    pages: tuple[tuple[tuple[Label, Label], ...], ...]

    @classmethod
    def build(cls, spine: Iterable, pages: Iterable[Iterable[tuple]]) -> "BookEmbedding":
        sp = tuple(as_label(v) for v in spine)
        pg = tuple(
            tuple(sorted((canonical_pair(as_label(a), as_label(b)) for a, b in page),
                         key=lambda e: (label_key(e[0]), label_key(e[1]))))
            for page in pages
        )
        return cls(sp, pg)

    @property
    def page_count(self) -> int:
        return len(self.pages)

    def positions(self) -> dict:
        return {v: i for i, v in enumerate(self.spine)}

    def reversed(self) -> "BookEmbedding":
        return BookEmbedding(self.spine[::-1], self.pages)

    def page_of(self) -> dict:
        """Map each edge (canonical label pair) to its page index."""
        return {e: p for p, page in enumerate(self.pages) for e in page}

    def relabel(self, mapping) -> "BookEmbedding":
        f = mapping if callable(mapping) else mapping.__getitem__
        return BookEmbedding.build(
            [f(v) for v in self.spine],
            [[(f(a), f(b)) for a, b in page] for page in self.pages],
        )


def page_count(emb: BookEmbedding) -> int:
    return emb.page_count


def restrict_to_copy(emb: BookEmbedding, copy_label: Label) -> BookEmbedding:
    """Project an F-sum embedding onto the copy ``Pair(·, copy_label)``.

    The result is relabeled to the first coordinate; pages are kept (possibly
    empty) so page indices line up with the parent embedding.
    """
    copy_label = as_label(copy_label)
    spine = [v.x for v in emb.spine if isinstance(v, Pair) and v.u == copy_label]
    if not spine:
        raise GraphError(f"no copy for {copy_label} in this embedding")
    pages = [
        [(a.x, b.x) for a, b in page
         if isinstance(a, Pair) and isinstance(b, Pair) and a.u == copy_label == b.u]
        for page in emb.pages
    ]
    return BookEmbedding.build(spine, pages)


def edges_cross(positions, e1: tuple, e2: tuple) -> bool:
    """True iff the two chords interleave on the spine.

    ``positions`` maps vertices to spine positions (a dict or a sequence).
    Edges that share an endpoint never cross.
    """
    a, b = sorted((positions[e1[0]], positions[e1[1]]))
    c, d = sorted((positions[e2[0]], positions[e2[1]]))
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


class ViolationKind(enum.Enum):
    CROSSING = "Crossing"
    MATCHING = "MatchingViolation"
    MISSING_EDGE = "MissingEdge"
    DUPLICATE_EDGE = "DuplicateEdge"
    UNKNOWN_VERTEX = "UnknownVertex"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    page: int | None
    items: tuple

    def __str__(self) -> str:
        where = "" if self.page is None else f" on page {self.page + 1}"
        return f"{self.kind.value}{where}: " + ", ".join(_fmt(x) for x in self.items)


def _fmt(item) -> str:
    if isinstance(item, tuple):
        return "-".join(str(x) for x in item)
    return str(item)


@dataclass(frozen=True)
class ValidationReport:
    page_count: int
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        head = f"ok={str(self.ok).lower()} pages={self.page_count} violations={len(self.violations)}"
        return "\n".join([head] + [f"  {v}" for v in self.violations])


def _edge_key(e):
    return (label_key(e[0]), label_key(e[1]))


def validate(g: Graph, emb: BookEmbedding) -> ValidationReport:
    """Check ``emb`` is a matching book embedding of ``g``; report every problem.

    Violations come out sorted by page, then lexicographically by edge, with
    graph-level (page-less) entries first.
    """
    global_v: list[Violation] = []
    page_v: list[tuple] = []
    vertex_set = set(g.labels)

    # spine must be a permutation of V(g)
    pos: dict = {}
    dup_spine = set()
    for i, v in enumerate(emb.spine):
        if v not in vertex_set:
            global_v.append(Violation(ViolationKind.UNKNOWN_VERTEX, None, (v,)))
        if v in pos:
            dup_spine.add(v)
        else:
            pos[v] = i
    for v in sorted(dup_spine, key=label_key):
        global_v.append(Violation(ViolationKind.UNKNOWN_VERTEX, None, (v, "repeated on spine")))
    for v in sorted(vertex_set - set(pos), key=label_key):
        global_v.append(Violation(ViolationKind.UNKNOWN_VERTEX, None, (v, "missing from spine")))

    # pages must partition E(g)
    edge_set = g.labeled_edge_set
    seen: dict = {}
    for p, page in enumerate(emb.pages):
        for e in page:
            e = canonical_pair(*e)
            if e not in edge_set:
                if any(x not in vertex_set for x in e):
                    page_v.append((p, _edge_key(e), Violation(ViolationKind.UNKNOWN_VERTEX, p, (e,))))
                else:
                    page_v.append((p, _edge_key(e), Violation(ViolationKind.MISSING_EDGE, p, (e, "not an edge of the graph"))))
            elif e in seen:
                page_v.append((p, _edge_key(e), Violation(ViolationKind.DUPLICATE_EDGE, p, (e,))))
            else:
                seen[e] = p
    for e in sorted(edge_set - set(seen), key=_edge_key):
        global_v.append(Violation(ViolationKind.MISSING_EDGE, None, (e,)))

    # per page: matching and crossing
    for p, page in enumerate(emb.pages):
        edges = [canonical_pair(*e) for e in page]
        at_vertex: dict = {}
        for e in edges:
            for x in e:
                at_vertex.setdefault(x, []).append(e)
        for x in sorted(at_vertex, key=label_key):
            es = sorted(at_vertex[x], key=_edge_key)
            if len(es) > 1:
                page_v.append((p, _edge_key(es[0]), Violation(ViolationKind.MATCHING, p, (x, *es))))
        placed = [e for e in edges if e[0] in pos and e[1] in pos]
        placed.sort(key=lambda e: sorted((pos[e[0]], pos[e[1]])))
        for i, e1 in enumerate(placed):
            for e2 in placed[i + 1:]:
                if edges_cross(pos, e1, e2):
                    a, b = sorted((e1, e2), key=_edge_key)
                    page_v.append((p, _edge_key(a), Violation(ViolationKind.CROSSING, p, (a, b))))

    page_v.sort(key=lambda t: (t[0], t[1], t[2].kind.value))
    return ValidationReport(len(emb.pages), tuple(global_v) + tuple(v for *_, v in page_v))


def embedding_from_pages(spine: Sequence, pages: Sequence[Sequence[tuple]]) -> BookEmbedding:
    return BookEmbedding.build(spine, pages)


def pages_as_coloring(emb: BookEmbedding) -> dict:
    """Page index per edge; a valid matching embedding makes this a proper edge coloring."""
    return emb.page_of()
