"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--skip-python]

Each row times one exact solve per backend and checks that both backends
report the same mbt and node count.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from pathlib import Path

from matchbook import kernel
from matchbook.fsum import f_sum
from matchbook.graph import circulant, complete, complete_bipartite, cycle, make_graph
from matchbook.io import parse_graph6_lines
from matchbook.solver import embed_with_k, heuristic_upper, mbt_exact
from matchbook.transforms import transform

CORPUS = Path(__file__).resolve().parent.parent / "tests" / "data" / "connected_le6.g6"


def _lcf(n, shifts, repeat):
    """Cubic graph from LCF notation."""
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    for i in range(n):
        s = (shifts * repeat)[i]
        edges.add(tuple(sorted((i, (i + s) % n))))
    return make_graph(range(n), edges)


def _petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(range(10), outer + inner + [(i, i + 5) for i in range(5)])


def _corpus_sweep(backend):
    nodes = 0
    for g in parse_graph6_lines(CORPUS.read_text()):
        nodes += mbt_exact(g, backend=backend).stats.nodes
    return "-", nodes


def _solve(g):
    def run(backend):
        res = mbt_exact(g, backend=backend)
        return res.mbt, res.stats.nodes
    return run


def _exhaust(g, k):
    # k-page question with no answer: the whole tree is searched
    def run(backend):
        emb = embed_with_k(g, k, backend=backend)
        assert emb is None
        return "infeasible", None
    return run


def _assign(g, k):
    # fixed spine: page assignment only
    def run(backend):
        emb = embed_with_k(g, k, spine=list(g.labels), backend=backend)
        return emb is not None, None
    return run


def _heuristic(g):
    def run(backend):
        return heuristic_upper(g, tries=1, steps=40, backend=backend).page_count, None
    return run


CASES = [
    ("corpus: 143 graphs <= 6 vertices", _corpus_sweep),
    ("K6 (bound certifies)", _solve(complete(6))),
    ("K3,4", _solve(complete_bipartite(3, 4))),
    ("T(C4)", _solve(transform(cycle(4), "T"))),
    ("Q(K4)", _solve(transform(complete(4), "Q"))),
    ("Petersen, k=3", _exhaust(_petersen(), 3)),
    ("C(11, {1,3}), k=4", _exhaust(circulant(11, (1, 3)), 4)),
    ("truncated tetrahedron, k=3", _exhaust(_lcf(12, [2, 6, -2], 4), 3)),
    ("Frucht graph, k=3", _exhaust(_lcf(12, [-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2], 1), 3)),
    ("C3 +_Q C3 fixed spine, k=5", _assign(f_sum(cycle(3), cycle(3), "Q"), 5)),
    ("C3 +_Q C3 heuristic", _heuristic(f_sum(cycle(3), cycle(3), "Q"))),
]


def _time(fn, backend, repeat):
    samples, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples), result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-python", action="store_true", help="time only the compiled kernel")
    args = ap.parse_args(argv)
    if kernel._ckernel is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    print(f"{'case':<34} {'compiled s':>11} {'python s':>10} {'speedup':>8}  result")
    mismatches = 0
    for name, fn in CASES:
        tc, rc = _time(fn, "compiled", args.repeat)
        if args.skip_python:
            print(f"{name:<34} {tc:>11.4f} {'-':>10} {'-':>8}  {rc}")
            continue
        tp, rp = _time(fn, "python", max(1, args.repeat // 3))
        same = rc == rp
        mismatches += not same
        print(f"{name:<34} {tc:>11.4f} {tp:>10.4f} {tp / tc:>7.1f}x  {rc}{'' if same else f' != {rp}'}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
