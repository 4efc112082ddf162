# cython: language_level=3
"""Compiled twins of ``_pykernels``; same signatures, same results."""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int popcount "__builtin_popcountll"(u64 x) nogil
    int ctz "__builtin_ctzll"(u64 x) nogil

BACKEND = "cython"


cdef inline u64 full_mask(int n):
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << n) - 1


cdef u64* load_adj(adj, int n) except NULL:
    cdef u64* a = <u64*>malloc((n if n > 0 else 1) * sizeof(u64))
    if a == NULL:
        raise MemoryError()
    for i in range(n):
        a[i] = <u64>adj[i]
    return a


cdef struct MisState:
    u64* adj
    int best
    long long count
    long long cap


cdef void mis_rec(MisState* st, u64 p, u64 r, int k, list found):
    cdef u64 low, nb
    if p == 0:
        if k > st.best:
            st.best = k
            st.count = 1
            del found[:]
            found.append(r)
        elif k == st.best:
            st.count += 1
            if st.count <= st.cap:
                found.append(r)
        return
    if k + popcount(p) < st.best:
        return
    low = p & (~p + 1)
    nb = st.adj[ctz(p)] & p
    mis_rec(st, p & ~(nb | low), r | low, k + 1, found)
    if nb:
        mis_rec(st, p & ~low, r, k, found)


def maximum_independent_sets(adj, cap):
    cdef int n = len(adj)
    cdef MisState st
    found = []
    st.adj = load_adj(adj, n)
    st.best = -1
    st.count = 0
    st.cap = cap
    try:
        mis_rec(&st, full_mask(n), 0, 0, found)
    finally:
        free(st.adj)
    found.sort()
    return st.best, found, st.count > cap


cdef void ind_rec(u64* adj, u64 everyone, bint maximal_only, u64 p, u64 r, u64 nr, list out):
    cdef u64 low, nb
    if p == 0:
        if not maximal_only or (r | nr) == everyone:
            out.append(r)
        return
    low = p & (~p + 1)
    nb = adj[ctz(p)]
    ind_rec(adj, everyone, maximal_only, p & ~(nb | low), r | low, nr | nb, out)
    ind_rec(adj, everyone, maximal_only, p & ~low, r, nr, out)


def independent_sets(adj, maximal_only):
    cdef int n = len(adj)
    cdef u64* a = load_adj(adj, n)
    out = []
    try:
        ind_rec(a, full_mask(n), maximal_only, full_mask(n), 0, 0, out)
    finally:
        free(a)
    out.sort()
    return out


cdef struct CritState:
    u64* adj
    int best


cdef void crit_rec(CritState* st, u64 p, u64 r, u64 nr, int k, list found):
    cdef u64 low, nb
    cdef int d
    if p == 0:
        d = k - popcount(nr)
        if d > st.best:
            st.best = d
            del found[:]
            found.append(r)
        elif d == st.best:
            found.append(r)
        return
    low = p & (~p + 1)
    nb = st.adj[ctz(p)]
    crit_rec(st, p & ~(nb | low), r | low, nr | nb, k + 1, found)
    crit_rec(st, p & ~low, r, nr, k, found)


def critical_independent_sets(adj):
    cdef int n = len(adj)
    cdef CritState st
    found = []
    st.adj = load_adj(adj, n)
    st.best = 0
    try:
        crit_rec(&st, full_mask(n), 0, 0, 0, found)
    finally:
        free(st.adj)
    found.sort()
    return st.best, found


def max_difference_all_subsets(adj):
    cdef int n = len(adj)
    if n > 30:
        raise ValueError("subset scan limited to 30 vertices")
    cdef u64 size = (<u64>1) << n
    cdef u64* a = load_adj(adj, n)
    cdef u64* nbr = <u64*>malloc(size * sizeof(u64))
    cdef u64 mask, low, nb
    cdef int d, best = 0
    cdef u64 witness = 0
    if nbr == NULL:
        free(a)
        raise MemoryError()
    try:
        nbr[0] = 0
        for mask in range(1, size):
            low = mask & (~mask + 1)
            nb = nbr[mask ^ low] | a[ctz(mask)]
            nbr[mask] = nb
            d = popcount(mask) - popcount(nb)
            if d > best:
                best = d
                witness = mask
    finally:
        free(a)
        free(nbr)
    return best, witness
