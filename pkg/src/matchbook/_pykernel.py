"""Pure-Python search kernels.

Reference twin of ``_ckernel.pyx``: same search order, same node counting,
so both backends return identical witnesses and statistics. Statuses:
``1`` found, ``0`` exhausted, ``-1`` out of budget.
"""

from __future__ import annotations

FOUND, EXHAUSTED, OUT_OF_BUDGET = 1, 0, -1


class _OutOfBudget(Exception):
    pass


def assign_pages(n, lo, hi, k, budget):
    """Assign edges (given by spine positions ``lo < hi``) to at most ``k`` pages.

    Edges are tried in the given order; page ``p`` may be opened only once
    pages ``0..p-1`` are in use. Returns ``(status, pages, nodes)``.
    """
    m = len(lo)
    page = [-1] * m
    vmask = [0] * n
    nodes = 0

    def rec(e, used):
        nonlocal nodes
        if e == m:
            return FOUND
        a, b = lo[e], hi[e]
        limit = used if used < k - 1 else k - 1
        for p in range(limit + 1):
            bit = 1 << p
            if vmask[a] & bit or vmask[b] & bit:
                continue
            clash = False
            for f in range(e):
                if page[f] == p:
                    c, d = lo[f], hi[f]
                    if (a < c < b) != (a < d < b):
                        clash = True
                        break
            if clash:
                continue
            nodes += 1
            if nodes > budget:
                raise _OutOfBudget
            vmask[a] |= bit
            vmask[b] |= bit
            page[e] = p
            r = rec(e + 1, used if p < used else used + 1)
            if r != EXHAUSTED:
                return r
            vmask[a] ^= bit
            vmask[b] ^= bit
            page[e] = -1
        return EXHAUSTED

    try:
        status = rec(0, 0)
    except _OutOfBudget:
        return OUT_OF_BUDGET, [], nodes
    return status, (page if status == FOUND else []), nodes


def search_spine(n, adjacency, k, budget, branch=-1):
    """Joint search over spine orders and page assignments.

    Vertex 0 sits at position 0 (rotations of a spine preserve crossings) and
    vertex ``n-1`` may only be placed after vertex 1 (breaks reflection).
    Vertices are appended left to right; each new vertex's edges to placed
    vertices get pages immediately, which is sound because a later vertex can
    never land inside an existing chord. ``cover[p][x]`` counts page-``p``
    chords enclosing position ``x``; a placed vertex with ``r`` unplaced
    neighbors needs ``r`` pages on which it is neither used nor enclosed.

    ``branch >= 0`` restricts position 1 to that vertex. Returns
    ``(status, order, edge_pages, nodes)`` where ``edge_pages`` is a list of
    ``(u, v, page)`` triples.
    """
    adj = [[False] * n for _ in range(n)]
    for u in range(n):
        for w in adjacency[u]:
            adj[u][w] = True
    pos = [-1] * n
    order = [-1] * n
    rem = [len(adjacency[u]) for u in range(n)]
    vmask = [0] * n
    cover = [[0] * n for _ in range(k)]
    epage = {}
    nodes = 0

    def lookahead(d):
        for x in range(d + 1):
            u = order[x]
            need = rem[u]
            if need > 0:
                avail = 0
                mu = vmask[u]
                for p in range(k):
                    if not (mu >> p) & 1 and cover[p][x] == 0:
                        avail += 1
                if avail < need:
                    return False
        return True

    def place(d, used):
        nonlocal nodes
        if d == n:
            return FOUND
        for v in range(1, n):
            if pos[v] >= 0:
                continue
            if d == 1 and branch >= 0 and v != branch:
                continue
            if v == n - 1 and n >= 3 and pos[1] < 0:
                continue
            nodes += 1
            if nodes > budget:
                raise _OutOfBudget
            pos[v] = d
            order[d] = v
            row = adj[v]
            for w in range(n):
                if row[w]:
                    rem[w] -= 1
            r = assign(d, v, d - 1, used)
            if r != EXHAUSTED:
                return r
            for w in range(n):
                if row[w]:
                    rem[w] += 1
            pos[v] = -1
            order[d] = -1
        return EXHAUSTED

    def assign(d, v, q, used):
        nonlocal nodes
        row = adj[v]
        while q >= 0 and not row[order[q]]:
            q -= 1
        if q < 0:
            if not lookahead(d):
                return EXHAUSTED
            return place(d + 1, used)
        w = order[q]
        limit = used if used < k - 1 else k - 1
        for p in range(limit + 1):
            bit = 1 << p
            if vmask[v] & bit or vmask[w] & bit:
                continue
            cp = cover[p]
            if cp[q] > 0:
                continue
            nodes += 1
            if nodes > budget:
                raise _OutOfBudget
            vmask[v] |= bit
            vmask[w] |= bit
            epage[w, v] = p
            for x in range(q + 1, d):
                cp[x] += 1
            r = assign(d, v, q - 1, used if p < used else used + 1)
            if r != EXHAUSTED:
                return r
            for x in range(q + 1, d):
                cp[x] -= 1
            vmask[v] ^= bit
            vmask[w] ^= bit
            del epage[w, v]
        return EXHAUSTED

    if n == 0:
        return FOUND, [], [], 0
    pos[0] = 0
    order[0] = 0
    for w in adjacency[0]:
        rem[w] -= 1
    try:
        status = place(1, 0)
    except _OutOfBudget:
        return OUT_OF_BUDGET, [], [], nodes
    if status != FOUND:
        return status, [], [], nodes
    triples = sorted((u, v, p) for (u, v), p in epage.items())
    return FOUND, list(order), triples, nodes
