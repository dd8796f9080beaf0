import pytest

from matchbook.embedding import (
    BookEmbedding,
    ViolationKind,
    edges_cross,
    pages_as_coloring,
    restrict_to_copy,
    validate,
)
from matchbook.graph import GraphError, Pair, Plain, cycle, path
from matchbook.fsum import f_sum
from matchbook.transforms import transform
from matchbook.constructions import dispersable_input, embed_fsum_generic, embed_transformed


def test_edges_cross_examples():
    pos = [0, 1, 2, 3]
    assert edges_cross(pos, (0, 2), (1, 3))
    assert not edges_cross(pos, (0, 3), (1, 2))
    assert not edges_cross(pos, (0, 1), (2, 3))
    assert not edges_cross(pos, (0, 2), (2, 3))


def c4_embedding():
    return BookEmbedding.build([0, 1, 2, 3], [[(0, 1), (2, 3)], [(1, 2), (0, 3)]])


def test_valid_cycle():
    report = validate(cycle(4), c4_embedding())
    assert report.ok and report.page_count == 2
    assert str(report).startswith("ok=true pages=2")


def test_matching_violation_names_vertex():
    emb = BookEmbedding.build([0, 1, 2, 3], [[(0, 1), (1, 2), (2, 3)], [(0, 3)]])
    report = validate(cycle(4), emb)
    assert not report.ok
    kinds = {v.kind for v in report.violations}
    assert kinds == {ViolationKind.MATCHING}
    assert {Plain(1), Plain(2)} <= {x for v in report.violations for x in v.items}


def test_all_violation_kinds_reported():
    emb = BookEmbedding.build([0, 2, 1, 3, 9], [[(0, 1), (2, 3)], [(0, 1), (9, 3)]])
    report = validate(cycle(4), emb)
    kinds = {v.kind for v in report.violations}
    assert {ViolationKind.CROSSING, ViolationKind.DUPLICATE_EDGE,
            ViolationKind.MISSING_EDGE, ViolationKind.UNKNOWN_VERTEX} <= kinds
    pages = [v.page for v in report.violations if v.page is not None]
    assert pages == sorted(pages)


def test_reversal_and_coloring():
    emb = c4_embedding()
    assert validate(cycle(4), emb.reversed()).ok
    col = pages_as_coloring(emb)
    assert col[(Plain(0), Plain(3))] == 1 and len(col) == 4


def test_restrict_to_copy():
    h = dispersable_input(path(3))
    emb = embed_fsum_generic(path(3), h, "S", embed_transformed(path(3), "S"))
    g = f_sum(path(3), path(3), "S")
    assert validate(g, emb).ok
    for u in path(3).labels:
        sub = restrict_to_copy(emb, u)
        assert sub.page_count == emb.page_count
        assert validate(transform(path(3), "S"), sub).ok
    with pytest.raises(GraphError):
        restrict_to_copy(emb, Plain(99))
