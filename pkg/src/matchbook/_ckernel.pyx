# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; line-for-line twin of ``_pykernel.py``.

Pages are bits of a 64-bit mask, so ``k <= 64``. The searches run without
the GIL so callers may explore top-level branches from several threads.
"""

from libc.stdlib cimport calloc, free

cdef enum:
    OUT_OF_BUDGET = -1
    EXHAUSTED = 0
    FOUND = 1

ctypedef unsigned long long u64


# ---------------------------------------------------------------------------
# fixed spine
# ---------------------------------------------------------------------------

cdef struct Fixed:
    int m
    int k
    int *lo
    int *hi
    int *page
    u64 *vmask
    long long nodes
    long long budget


cdef int _fixed(Fixed *s, int e, int used) noexcept nogil:
    if e == s.m:
        return FOUND
    cdef int a = s.lo[e]
    cdef int b = s.hi[e]
    cdef int limit = used if used < s.k - 1 else s.k - 1
    cdef int p, f, c, d, r
    cdef bint clash
    cdef u64 bit
    for p in range(limit + 1):
        bit = (<u64>1) << p
        if (s.vmask[a] & bit) or (s.vmask[b] & bit):
            continue
        clash = False
        for f in range(e):
            if s.page[f] == p:
                c = s.lo[f]
                d = s.hi[f]
                if (a < c and c < b) != (a < d and d < b):
                    clash = True
                    break
        if clash:
            continue
        s.nodes += 1
        if s.nodes > s.budget:
            return OUT_OF_BUDGET
        s.vmask[a] |= bit
        s.vmask[b] |= bit
        s.page[e] = p
        r = _fixed(s, e + 1, used if p < used else used + 1)
        if r != EXHAUSTED:
            return r
        s.vmask[a] ^= bit
        s.vmask[b] ^= bit
        s.page[e] = -1
    return EXHAUSTED


def assign_pages(int n, lo, hi, int k, long long budget):
    cdef int m = len(lo)
    cdef Fixed s
    cdef int i, status
    if k > 64:
        raise ValueError("compiled kernel supports at most 64 pages")
    s.m = m
    s.k = k
    s.nodes = 0
    s.budget = budget
    s.lo = <int *> calloc(m + 1, sizeof(int))
    s.hi = <int *> calloc(m + 1, sizeof(int))
    s.page = <int *> calloc(m + 1, sizeof(int))
    s.vmask = <u64 *> calloc(n + 1, sizeof(u64))
    try:
        for i in range(m):
            s.lo[i] = lo[i]
            s.hi[i] = hi[i]
            s.page[i] = -1
        with nogil:
            status = _fixed(&s, 0, 0)
        pages = [s.page[i] for i in range(m)] if status == FOUND else []
        return status, pages, s.nodes
    finally:
        free(s.lo)
        free(s.hi)
        free(s.page)
        free(s.vmask)


# ---------------------------------------------------------------------------
# free spine
# ---------------------------------------------------------------------------

cdef struct Spine:
    int n
    int k
    int branch
    char *adj
    int *pos
    int *order
    int *rem
    u64 *vmask
    int *cover
    int *epage
    long long nodes
    long long budget


cdef bint _lookahead(Spine *s, int d) noexcept nogil:
    cdef int x, u, p, avail, need
    cdef u64 mu
    for x in range(d + 1):
        u = s.order[x]
        need = s.rem[u]
        if need > 0:
            avail = 0
            mu = s.vmask[u]
            for p in range(s.k):
                if not ((mu >> p) & 1) and s.cover[p * s.n + x] == 0:
                    avail += 1
            if avail < need:
                return False
    return True


cdef int _place(Spine *s, int d, int used) noexcept nogil:
    cdef int n = s.n
    cdef int v, w, r
    if d == n:
        return FOUND
    for v in range(1, n):
        if s.pos[v] >= 0:
            continue
        if d == 1 and s.branch >= 0 and v != s.branch:
            continue
        if v == n - 1 and n >= 3 and s.pos[1] < 0:
            continue
        s.nodes += 1
        if s.nodes > s.budget:
            return OUT_OF_BUDGET
        s.pos[v] = d
        s.order[d] = v
        for w in range(n):
            if s.adj[v * n + w]:
                s.rem[w] -= 1
        r = _assign(s, d, v, d - 1, used)
        if r != EXHAUSTED:
            return r
        for w in range(n):
            if s.adj[v * n + w]:
                s.rem[w] += 1
        s.pos[v] = -1
        s.order[d] = -1
    return EXHAUSTED


cdef int _assign(Spine *s, int d, int v, int q, int used) noexcept nogil:
    cdef int n = s.n
    cdef int w, p, x, r, limit
    cdef u64 bit
    cdef int *cp
    while q >= 0 and not s.adj[v * n + s.order[q]]:
        q -= 1
    if q < 0:
        if not _lookahead(s, d):
            return EXHAUSTED
        return _place(s, d + 1, used)
    w = s.order[q]
    limit = used if used < s.k - 1 else s.k - 1
    for p in range(limit + 1):
        bit = (<u64>1) << p
        if (s.vmask[v] & bit) or (s.vmask[w] & bit):
            continue
        cp = s.cover + p * n
        if cp[q] > 0:
            continue
        s.nodes += 1
        if s.nodes > s.budget:
            return OUT_OF_BUDGET
        s.vmask[v] |= bit
        s.vmask[w] |= bit
        s.epage[w * n + v] = p
        for x in range(q + 1, d):
            cp[x] += 1
        r = _assign(s, d, v, q - 1, used if p < used else used + 1)
        if r != EXHAUSTED:
            return r
        for x in range(q + 1, d):
            cp[x] -= 1
        s.vmask[v] ^= bit
        s.vmask[w] ^= bit
        s.epage[w * n + v] = -1
    return EXHAUSTED


def search_spine(int n, adjacency, int k, long long budget, int branch=-1):
    cdef Spine s
    cdef int i, w, status, u, v
    if k > 64:
        raise ValueError("compiled kernel supports at most 64 pages")
    if n == 0:
        return FOUND, [], [], 0
    s.n = n
    s.k = k
    s.branch = branch
    s.nodes = 0
    s.budget = budget
    s.adj = <char *> calloc(n * n, sizeof(char))
    s.pos = <int *> calloc(n, sizeof(int))
    s.order = <int *> calloc(n, sizeof(int))
    s.rem = <int *> calloc(n, sizeof(int))
    s.vmask = <u64 *> calloc(n, sizeof(u64))
    s.cover = <int *> calloc(k * n + 1, sizeof(int))
    s.epage = <int *> calloc(n * n, sizeof(int))
    try:
        for i in range(n):
            s.pos[i] = -1
            s.order[i] = -1
            s.rem[i] = len(adjacency[i])
            for w in adjacency[i]:
                s.adj[i * n + w] = 1
        for i in range(n * n):
            s.epage[i] = -1
        s.pos[0] = 0
        s.order[0] = 0
        for w in adjacency[0]:
            s.rem[w] -= 1
        with nogil:
            status = _place(&s, 1, 0)
        if status != FOUND:
            return status, [], [], s.nodes
        triples = []
        for u in range(n):
            for v in range(n):
                if s.adj[u * n + v] and s.pos[u] < s.pos[v]:
                    triples.append((u, v, s.epage[u * n + v]))
        triples.sort()
        return FOUND, [s.order[i] for i in range(n)], triples, s.nodes
    finally:
        free(s.adj)
        free(s.pos)
        free(s.order)
        free(s.rem)
        free(s.vmask)
        free(s.cover)
        free(s.epage)
