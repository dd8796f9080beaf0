import random

import pytest

from matchbook.bounds import (
    BoundReason,
    Classification,
    chromatic_index,
    classify,
    edge_coloring,
    mbt_lower_bound,
    verify_certificate,
)
from matchbook.fsum import f_sum
from matchbook.graph import GraphError, complete, make_graph, complete_bipartite, cycle, path, star
from matchbook.transforms import transform
from oracles import brute_chromatic_index, random_connected


def test_edge_coloring_examples():
    assert edge_coloring(cycle(4), 2).is_proper()
    assert edge_coloring(cycle(5), 2) is None
    col = edge_coloring(cycle(5), 3)
    assert col.is_proper() and col.color_count == 3


@pytest.mark.parametrize("g,expected", [
    (cycle(4), 2), (cycle(5), 3), (complete(4), 3), (complete(5), 5),
    (complete_bipartite(3, 3), 3), (star(4), 4), (path(1), 0),
])
def test_chromatic_index_examples(g, expected):
    k, col = chromatic_index(g)
    assert k == expected and col.is_proper()


@pytest.mark.parametrize("seed", range(30))
def test_chromatic_index_matches_brute_force(seed):
    rng = random.Random(seed)
    g = random_connected(rng, rng.randint(2, 7), 0.4)
    assert chromatic_index(g)[0] == brute_chromatic_index(g)


def test_certificates():
    c5 = mbt_lower_bound(cycle(5))
    assert (c5.value, c5.reason) == (3, BoundReason.REGULAR_NON_BIPARTITE)
    assert verify_certificate(cycle(5), c5)

    tc4 = transform(cycle(4), "T")
    assert mbt_lower_bound(tc4).reason is BoundReason.REGULAR_NON_BIPARTITE
    hinted = mbt_lower_bound(tc4, circulant_params=(8, 2))
    assert (hinted.value, hinted.reason) == (5, BoundReason.CIRCULANT_EVEN_EVEN)
    assert verify_certificate(tc4, hinted)
    assert mbt_lower_bound(cycle(8), circulant_params=(8, 2)).reason is BoundReason.MAX_DEGREE

    g = transform(star(3), "Q")
    cert = mbt_lower_bound(g)
    assert cert.value == 4 and verify_certificate(g, cert)


def test_chromatic_index_certificate():
    g = make_graph(range(4), [(0, 1), (1, 2), (0, 2), (0, 3)])
    cert = mbt_lower_bound(g)
    assert cert.value == 3 and cert.reason is BoundReason.MAX_DEGREE
    odd = make_graph(range(5), [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])
    # Δ=3 with an odd cycle; class 1, so no chromatic-index raise
    assert mbt_lower_bound(odd).value == 3
    overfull = make_graph(range(5), [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (1, 3)])
    # 7 edges on 5 vertices with Δ=3 exceeds 3·floor(5/2)=6: class 2
    cert = mbt_lower_bound(overfull)
    assert (cert.value, cert.reason) == (4, BoundReason.CHROMATIC_INDEX)
    assert verify_certificate(overfull, cert)


def test_tampered_certificates_fail():
    cert = mbt_lower_bound(cycle(5))
    bad = type(cert)(cert.value, cert.reason, {"degree": 2, "odd_walk": [0, 1, 2, 3]})
    assert not verify_certificate(cycle(5), bad)
    assert not verify_certificate(cycle(6), cert)


def test_classify():
    assert classify(cycle(4), 2) is Classification.DISPERSABLE
    assert classify(cycle(5), 3) is Classification.NEARLY_DISPERSABLE
    assert classify(complete(4), 6) is Classification.OTHER
    with pytest.raises(GraphError):
        classify(cycle(4), 1)


def test_cycle_sum_bound():
    g = f_sum(cycle(3), cycle(4), "Q")
    cert = mbt_lower_bound(g)
    assert (cert.value, cert.reason) == (5, BoundReason.REGULAR_NON_BIPARTITE)
    assert verify_certificate(g, cert)
