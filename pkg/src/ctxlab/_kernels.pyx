# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels (at most 64 vertices, at most 64 colors).

Mirrors ``_pykernels`` exactly: same arguments, same node counting, same
solution order.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)

cdef enum:
    EXHAUSTED = 0
    STOPPED = 1
    BUDGET = 2


cdef class _ColorSearch:
    cdef int nv, k, nctx
    cdef bint symm
    cdef long long max_solutions, node_limit, nodes
    cdef int status
    cdef uint64_t full
    cdef uint64_t *adj
    cdef uint64_t *ctx
    cdef uint64_t *forb
    cdef int *cnt
    cdef int *color
    cdef int *used
    cdef list solutions

    def __cinit__(self, list adj, list ctx_masks, int k, list pre, bint symm,
                  long long max_solutions, long long node_limit):
        cdef int v
        self.nv = len(adj)
        self.k = k
        self.nctx = len(ctx_masks)
        self.symm = symm
        self.max_solutions = max_solutions
        self.node_limit = node_limit
        self.nodes = 0
        self.status = EXHAUSTED
        self.full = (<uint64_t>1 << k) - 1 if k < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
        self.adj = <uint64_t *>calloc(self.nv + 1, sizeof(uint64_t))
        self.ctx = <uint64_t *>calloc(self.nctx + 1, sizeof(uint64_t))
        self.forb = <uint64_t *>calloc(self.nv + 1, sizeof(uint64_t))
        self.cnt = <int *>calloc(self.nv * k + 1, sizeof(int))
        self.color = <int *>calloc(self.nv + 1, sizeof(int))
        self.used = <int *>calloc(k + 1, sizeof(int))
        if (not self.adj or not self.ctx or not self.forb or not self.cnt
                or not self.color or not self.used):
            raise MemoryError()
        for v in range(self.nv):
            self.adj[v] = adj[v]
            self.color[v] = pre[v]
        for v in range(self.nctx):
            self.ctx[v] = ctx_masks[v]
        self.solutions = []

    def __dealloc__(self):
        free(self.adj)
        free(self.ctx)
        free(self.forb)
        free(self.cnt)
        free(self.color)
        free(self.used)

    cdef void _assign(self, int v, int c):
        cdef uint64_t m = self.adj[v]
        cdef int u
        cdef uint64_t bit = <uint64_t>1 << c
        self.color[v] = c
        self.used[c] += 1
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            self.cnt[u * self.k + c] += 1
            self.forb[u] |= bit

    cdef void _unassign(self, int v, int c):
        cdef uint64_t m = self.adj[v]
        cdef int u
        cdef uint64_t bit = <uint64_t>1 << c
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            self.cnt[u * self.k + c] -= 1
            if self.cnt[u * self.k + c] == 0:
                self.forb[u] &= ~bit
        self.used[c] -= 1
        self.color[v] = -1

    cdef bint _demand_ok(self):
        cdef int i, v, r
        cdef uint64_t m, free_
        for i in range(self.nctx):
            m = self.ctx[i]
            free_ = 0
            r = 0
            while m:
                v = __builtin_ctzll(m)
                m &= m - 1
                if self.color[v] < 0:
                    r += 1
                    free_ |= self.full & ~self.forb[v]
            if r and __builtin_popcountll(free_) < r:
                return False
        return True

    cdef int _rec(self, int remaining) except -1:
        cdef int v, c, best, bestf, f, first_unused
        if remaining == 0:
            self.solutions.append(tuple([self.color[v] for v in range(self.nv)]))
            if self.max_solutions and len(self.solutions) >= self.max_solutions:
                self.status = STOPPED
                return 1
            return 0
        best = -1
        bestf = -1
        for v in range(self.nv):
            if self.color[v] < 0:
                f = __builtin_popcountll(self.forb[v])
                if f > bestf:
                    best = v
                    bestf = f
        if bestf >= self.k:
            return 0
        first_unused = self.k
        for c in range(self.k):
            if self.used[c] == 0:
                first_unused = c
                break
        v = best
        for c in range(self.k):
            if (self.forb[v] >> c) & 1:
                continue
            if self.symm and self.used[c] == 0 and c != first_unused:
                continue
            self.nodes += 1
            if self.node_limit and self.nodes > self.node_limit:
                self.status = BUDGET
                return 1
            self._assign(v, c)
            if self._demand_ok():
                if self._rec(remaining - 1):
                    self._unassign(v, c)
                    return 1
            self._unassign(v, c)
        return 0

    def run(self):
        cdef int v, u, c, remaining = 0
        for v in range(self.nv):
            c = self.color[v]
            if c < 0:
                remaining += 1
                continue
            if c >= self.k:
                return self.solutions, self.nodes, EXHAUSTED
            for u in range(self.nv):
                if (self.adj[v] >> u) & 1 and self.color[u] == c:
                    return self.solutions, self.nodes, EXHAUSTED
        for v in range(self.nv):
            if self.color[v] >= 0:
                self._assign(v, self.color[v])
        if self._demand_ok():
            self._rec(remaining)
        return self.solutions, self.nodes, self.status


def color_search(list adj, list ctx_masks, int k, list pre, bint break_symmetry,
                 long long max_solutions, long long node_limit):
    if len(adj) > 64 or k > 64:
        raise ValueError("compiled kernel handles at most 64 vertices and colors")
    return _ColorSearch(adj, ctx_masks, k, pre, break_symmetry,
                        max_solutions, node_limit).run()


cdef class _StateSearch:
    cdef uint64_t *ctx
    cdef uint64_t *adj
    cdef int nctx
    cdef long long nodes, node_limit
    cdef int status
    cdef list solutions

    def __cinit__(self, list ctx_masks, list adj, long long node_limit):
        cdef int i
        self.nctx = len(ctx_masks)
        self.ctx = <uint64_t *>calloc(self.nctx + 1, sizeof(uint64_t))
        self.adj = <uint64_t *>calloc(len(adj) + 1, sizeof(uint64_t))
        if not self.ctx or not self.adj:
            raise MemoryError()
        for i in range(self.nctx):
            self.ctx[i] = ctx_masks[i]
        for i in range(len(adj)):
            self.adj[i] = adj[i]
        self.nodes = 0
        self.node_limit = node_limit
        self.status = EXHAUSTED
        self.solutions = []

    def __dealloc__(self):
        free(self.ctx)
        free(self.adj)

    cdef int _rec(self, uint64_t ones, uint64_t zeros) except -1:
        cdef int i, c, bestcnt = 1 << 30, v
        cdef bint found = False
        cdef uint64_t cand, best = 0, m, low
        for i in range(self.nctx):
            if self.ctx[i] & ones:
                continue
            cand = self.ctx[i] & ~zeros
            c = __builtin_popcountll(cand)
            if c == 0:
                return 0
            if c < bestcnt:
                best = cand
                bestcnt = c
                found = True
        if not found:
            self.solutions.append(ones)
            return 0
        m = best
        while m:
            low = m & (~m + 1)
            m ^= low
            v = __builtin_ctzll(low)
            self.nodes += 1
            if self.node_limit and self.nodes > self.node_limit:
                self.status = BUDGET
                return 1
            if self._rec(ones | low, zeros | self.adj[v]):
                return 1
        return 0

    def run(self):
        self._rec(0, 0)
        return self.solutions, self.nodes, self.status


def state_search(list ctx_masks, list adj, long long node_limit):
    if len(adj) > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    return _StateSearch(ctx_masks, adj, node_limit).run()
