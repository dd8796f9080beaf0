"""Graph and embedding documents, graph6 import, SVG arc diagrams.

Documents are JSON, written one vertex / edge / page per line so diffs stay
readable. Labels serialize as:

* ``Plain``: the bare name (JSON int or string);
* ``EdgeVertex``: ``{"edge": [u, v]}``;
* ``Pair``: ``{"pair": [x, u]}``.

``format_version`` is bumped whenever a change would make an older reader
misread a document; readers refuse versions they do not know.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from html import escape
from typing import Any, Optional

from .embedding import BookEmbedding, ViolationKind, validate
from .graph import EdgeVertex, Graph, GraphError, Label, Pair, Plain, Tag, graph_from_edges, make_graph

FORMAT_VERSION = 1


class ParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# labels
# ---------------------------------------------------------------------------

def label_to_json(label: Label) -> Any:
    if isinstance(label, Plain):
        return label.name
    if isinstance(label, EdgeVertex):
        return {"edge": [label_to_json(label.u), label_to_json(label.v)]}
    if isinstance(label, Pair):
        return {"pair": [label_to_json(label.x), label_to_json(label.u)]}
    raise TypeError(f"not a label: {label!r}")


def label_from_json(obj: Any, where: str = "label") -> Label:
    if isinstance(obj, bool):
        raise GraphError(f"{where}: booleans are not labels")
    if isinstance(obj, (int, str)):
        return Plain(obj)
    if isinstance(obj, dict) and len(obj) == 1:
        (key, val), = obj.items()
        if key in ("edge", "pair") and isinstance(val, list) and len(val) == 2:
            a = label_from_json(val[0], where)
            b = label_from_json(val[1], where)
            return EdgeVertex(a, b) if key == "edge" else Pair(a, b)
    raise GraphError(f"{where}: malformed label {json.dumps(obj)}")


# ---------------------------------------------------------------------------
# documents
# ---------------------------------------------------------------------------

def _dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(", ", ": "), ensure_ascii=False)


def _graph_lines(g: Graph, indent: str) -> list[str]:
    verts = [_dumps({"label": label_to_json(l), "tag": t.value}) for l, t in zip(g.labels, g.tags)]
    edges = [_dumps([label_to_json(a), label_to_json(b)]) for a, b in g.label_edges()]
    return [
        f'{indent}"format_version": {FORMAT_VERSION},',
        f'{indent}"vertices": [' + _block(verts, indent) + "],",
        f'{indent}"edges": [' + _block(edges, indent) + "]",
    ]


def _block(items: list[str], indent: str) -> str:
    if not items:
        return ""
    inner = indent + "  "
    return "\n" + ",\n".join(inner + s for s in items) + "\n" + indent


def serialize_graph(g: Graph) -> str:
    return "{\n" + "\n".join(_graph_lines(g, "  ")) + "\n}\n"


def _locate(text: str, fragment: str) -> tuple[Optional[int], Optional[int]]:
    i = text.find(fragment)
    if i < 0:
        return None, None
    line = text.count("\n", 0, i) + 1
    return line, i - (text.rfind("\n", 0, i) + 1) + 1


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _semantic(text: str, message: str, item: Any) -> ParseError:
    line, col = _locate(text, _dumps(item)) if item is not None else (None, None)
    if line is None and item is not None:
        line, col = _locate(text, json.dumps(item))
    return ParseError(message, line, col)


def _check_version(doc: dict, text: str) -> None:
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        line, col = _locate(text, '"format_version"')
        raise ParseError(f"unknown format_version {version!r}", line, col)


def graph_from_document(doc: Any, text: str = "") -> Graph:
    if not isinstance(doc, dict):
        raise ParseError("graph document must be a JSON object", 1, 1)
    _check_version(doc, text)
    labels, tags = [], []
    for i, v in enumerate(doc.get("vertices", [])):
        try:
            if not isinstance(v, dict) or "label" not in v:
                raise GraphError(f"vertices[{i}] needs a label")
            labels.append(label_from_json(v["label"], f"vertices[{i}]"))
            tags.append(Tag(v.get("tag", "black")))
        except (GraphError, ValueError) as exc:
            raise _semantic(text, str(exc), v) from None
    known = set(labels)
    edges = []
    for i, e in enumerate(doc.get("edges", [])):
        try:
            if not isinstance(e, list) or len(e) != 2:
                raise GraphError(f"edges[{i}] must be a pair of labels")
            a, b = label_from_json(e[0], f"edges[{i}]"), label_from_json(e[1], f"edges[{i}]")
            for x in (a, b):
                if x not in known:
                    raise GraphError(f"edges[{i}] names an unknown vertex {x}")
            edges.append((a, b))
        except GraphError as exc:
            raise _semantic(text, str(exc), e) from None
    try:
        return graph_from_edges(labels, edges, tags)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def parse_graph(text: str) -> Graph:
    """Read a graph document, or a graph6 line for an untagged graph."""
    stripped = text.lstrip()
    if not stripped.startswith("{"):
        return parse_graph6(text)
    return graph_from_document(_load_json(text), text)


def serialize_embedding(emb: BookEmbedding, g: Optional[Graph] = None, graph_ref: Optional[str] = None) -> str:
    """Embedding document with the graph inline, by reference, or absent."""
    lines = ["{", f'  "format_version": {FORMAT_VERSION},']
    if g is not None:
        glines = _graph_lines(g, "    ")
        lines.append('  "graph": {')
        lines.extend(glines)
        lines.append("  },")
    elif graph_ref is not None:
        lines.append(f'  "graph_ref": {_dumps(graph_ref)},')
    lines.append('  "spine": [' + ", ".join(_dumps(label_to_json(v)) for v in emb.spine) + "],")
    pages = [_dumps([[label_to_json(a), label_to_json(b)] for a, b in page]) for page in emb.pages]
    lines.append('  "pages": [' + _block(pages, "  ") + "]")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EmbeddingDocument:
    embedding: BookEmbedding
    graph: Optional[Graph]
    graph_ref: Optional[str]


def parse_embedding(text: str) -> EmbeddingDocument:
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("embedding document must be a JSON object", 1, 1)
    _check_version(doc, text)
    g = graph_from_document(doc["graph"], text) if "graph" in doc else None
    spine = []
    for i, v in enumerate(doc.get("spine", [])):
        try:
            spine.append(label_from_json(v, f"spine[{i}]"))
        except GraphError as exc:
            raise _semantic(text, str(exc), v) from None
    pages = []
    for p, page in enumerate(doc.get("pages", [])):
        edges = []
        for e in page:
            try:
                if not isinstance(e, list) or len(e) != 2:
                    raise GraphError(f"pages[{p}] entries must be label pairs")
                edges.append((label_from_json(e[0]), label_from_json(e[1])))
            except GraphError as exc:
                raise _semantic(text, str(exc), e) from None
        pages.append(edges)
    return EmbeddingDocument(BookEmbedding.build(spine, pages), g, doc.get("graph_ref"))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; vertices become Black ``Plain(0..n-1)``."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise ParseError("graph6 line contains characters outside '?'..'~'", 1, 1)
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        rest = data[8:]
    else:
        raise ParseError("truncated graph6 size header", 1, 1)
    need = n * (n - 1) // 2
    if len(rest) * 6 < need or len(rest) != math.ceil(need / 6):
        raise ParseError(f"graph6 body has wrong length for {n} vertices", 1, len(s))
    bits = [(d >> (5 - i)) & 1 for d in rest for i in range(6)]
    edges, k = [], 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return make_graph(range(n), edges)


def parse_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

PAGE_COLORS = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79",
)
VIOLATION_COLOR = "#d62728"


def render_svg(g: Graph, emb: BookEmbedding, spacing: float = 40.0, margin: float = 30.0,
               title: Optional[str] = None) -> str:
    """Arc diagram: spine left to right, one stroke color per page.

    Black vertices are filled dots, White vertices hollow. Edges involved in a
    validation problem are drawn red and dashed; the drawing is a diagnostic,
    so invalid embeddings still render.
    """
    report = validate(g, emb)
    bad = set()
    for v in report.violations:
        if v.kind in (ViolationKind.CROSSING, ViolationKind.MATCHING, ViolationKind.DUPLICATE_EDGE):
            bad.update(x for x in v.items if isinstance(x, tuple))
    pos = {v: i for i, v in enumerate(emb.spine)}
    n = len(emb.spine)
    longest = max((abs(pos[a] - pos[b]) for page in emb.pages for a, b in page
                   if a in pos and b in pos), default=0)
    width = 2 * margin + spacing * max(n - 1, 0)
    arc_h = longest * spacing / 2
    top = margin + (18 if title else 0)
    base = top + arc_h
    height = base + margin + 16

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{margin:.1f}" y="{margin:.1f}" font-family="sans-serif" '
                   f'font-size="13">{escape(title)}</text>')
    x0 = margin
    out.append(f'<line x1="{x0:.1f}" y1="{base:.1f}" x2="{width - margin:.1f}" y2="{base:.1f}" '
               'stroke="black" stroke-width="1"/>')
    for p, page in enumerate(emb.pages):
        color = PAGE_COLORS[p % len(PAGE_COLORS)]
        out.append(f'<g class="page" data-page="{p + 1}" fill="none" stroke="{color}" stroke-width="1.5">')
        for a, b in page:
            if a not in pos or b not in pos:
                continue
            i, j = sorted((pos[a], pos[b]))
            xa, xb = x0 + i * spacing, x0 + j * spacing
            r = (xb - xa) / 2
            extra = ""
            if (a, b) in bad:
                extra = f' stroke="{VIOLATION_COLOR}" stroke-dasharray="4 2"'
            out.append(f'<path d="M {xa:.1f} {base:.1f} A {r:.1f} {r:.1f} 0 0 1 {xb:.1f} {base:.1f}"{extra}/>')
        out.append("</g>")
    tag_of = dict(zip(g.labels, g.tags))
    for v, i in pos.items():
        x = x0 + i * spacing
        white = tag_of.get(v) is Tag.WHITE
        fill = "white" if white else "black"
        stroke = VIOLATION_COLOR if v not in tag_of else "black"
        out.append(f'<circle class="vertex" cx="{x:.1f}" cy="{base:.1f}" r="4" fill="{fill}" stroke="{stroke}"/>')
        out.append(f'<text x="{x:.1f}" y="{base + 16:.1f}" font-family="sans-serif" font-size="9" '
                   f'text-anchor="middle">{escape(str(v))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
