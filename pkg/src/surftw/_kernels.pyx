# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: subset DP for tree-width and hitting-set search.

Graphs and set systems are uint64 bitmasks, so callers must fall back to the
Python versions above 64 elements.  Results match ``_pykernels`` exactly.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, uint8_t, int64_t

from .errors import TooLargeError

cdef extern from *:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)


cdef inline int q_size(uint64_t* adj, uint64_t inside, int v):
    cdef uint64_t comp = (<uint64_t>1) << v
    cdef uint64_t frontier = comp
    cdef uint64_t reach = 0
    cdef uint64_t nb, f
    while frontier:
        nb = 0
        f = frontier
        while f:
            nb |= adj[__builtin_ctzll(f)]
            f &= f - 1
        reach |= nb
        frontier = nb & inside & ~comp
        comp |= frontier
    return __builtin_popcountll(reach & ~comp & ~inside)


def treewidth_dp(adj_list, int n, int upper):
    if n == 0:
        return -1, []
    if n > 30:
        raise ValueError("subset DP limited to 30 vertices")
    cdef uint64_t size = (<uint64_t>1) << n
    cdef uint64_t* adj = <uint64_t*>malloc(64 * sizeof(uint64_t))
    cdef uint8_t* tw = <uint8_t*>malloc(size * sizeof(uint8_t))
    cdef uint8_t* last = <uint8_t*>malloc(size * sizeof(uint8_t))
    if adj == NULL or tw == NULL or last == NULL:
        free(adj); free(tw); free(last)
        raise MemoryError()
    cdef int i, v, q, w, best, arg, prev, bound = upper + 1
    cdef uint64_t S, rest, low
    cdef int INF = 255
    try:
        for i in range(n):
            adj[i] = adj_list[i]
        # tw[0] stands for -1; every stored width is shifted by one
        tw[0] = 0
        S = 1
        while S < size:
            best = INF
            arg = 0
            rest = S
            while rest:
                low = rest & (~rest + 1)
                rest ^= low
                v = __builtin_ctzll(low)
                prev = tw[S ^ low]
                if prev == INF:
                    continue
                prev -= 1
                if prev >= bound or prev >= best:
                    continue
                q = q_size(adj, S ^ low, v)
                w = prev if prev > q else q
                if w < best:
                    best = w
                    arg = v
            tw[S] = best + 1 if best < bound else INF
            last[S] = arg
            S += 1
        S = size - 1
        if tw[S] == INF:
            return -2, []
        result = tw[S] - 1
        order = []
        while S:
            v = last[S]
            order.append(v)
            S ^= (<uint64_t>1) << v
        order.reverse()
        return result, order
    finally:
        free(adj)
        free(tw)
        free(last)


cdef int packing(uint64_t* unhit, int m, uint64_t allowed, int* scratch):
    # greedy disjoint packing, smallest sets first (insertion sort on counts)
    cdef int i, j, key, count = 0
    cdef uint64_t used = 0, a
    for i in range(m):
        scratch[i] = i
    for i in range(1, m):
        key = scratch[i]
        j = i - 1
        while j >= 0 and __builtin_popcountll(unhit[scratch[j]] & allowed) > \
                __builtin_popcountll(unhit[key] & allowed):
            scratch[j + 1] = scratch[j]
            j -= 1
        scratch[j + 1] = key
    for i in range(m):
        a = unhit[scratch[i]] & allowed
        if not (a & used):
            used |= a
            count += 1
    return count


cdef class _Search:
    cdef int64_t nodes
    cdef int64_t budget
    cdef list chosen
    cdef int* scratch

    def __cinit__(self, int64_t budget, int m):
        self.nodes = 0
        self.budget = budget
        self.chosen = []
        self.scratch = <int*>malloc((m + 1) * sizeof(int))

    def __dealloc__(self):
        free(self.scratch)

    cdef int dfs(self, uint64_t* unhit, int m, uint64_t allowed, int k) except -1:
        cdef int i, c, best_count, nm, r
        cdef uint64_t best = 0, cand, low
        cdef uint64_t* nxt
        self.nodes += 1
        if self.nodes > self.budget:
            raise TooLargeError(message="hitting-set budget exhausted")
        if m == 0:
            return 1
        if k == 0:
            return 0
        best_count = 1 << 30
        for i in range(m):
            c = __builtin_popcountll(unhit[i] & allowed)
            if c < best_count:
                best = unhit[i]
                best_count = c
                if c <= 1:
                    break
        if best_count == 0:
            return 0
        if packing(unhit, m, allowed, self.scratch) > k:
            return 0
        nxt = <uint64_t*>malloc((m + 1) * sizeof(uint64_t))
        if nxt == NULL:
            raise MemoryError()
        try:
            cand = best & allowed
            while cand:
                low = cand & (~cand + 1)
                cand ^= low
                nm = 0
                for i in range(m):
                    if not (unhit[i] & low):
                        nxt[nm] = unhit[i]
                        nm += 1
                self.chosen.append(__builtin_ctzll(low))
                r = self.dfs(nxt, nm, allowed, k - 1)
                if r:
                    return 1
                self.chosen.pop()
                allowed &= ~low
            return 0
        finally:
            free(nxt)


def min_hitting_set(masks, int n, long long budget):
    cdef int m = len(masks), i, k
    if n > 64:
        raise ValueError("compiled hitting set limited to 64 elements")
    for x in masks:
        if x == 0:
            raise ValueError("empty set cannot be hit")
    if m == 0:
        return 0, []
    cdef uint64_t* arr = <uint64_t*>malloc(m * sizeof(uint64_t))
    cdef uint64_t full = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    cdef _Search search = _Search(budget, m)
    try:
        for i in range(m):
            arr[i] = masks[i]
        for k in range(1, n + 1):
            search.chosen = []
            if search.dfs(arr, m, full, k):
                return k, sorted(search.chosen)
        raise ValueError("no hitting set exists")
    finally:
        free(arr)
