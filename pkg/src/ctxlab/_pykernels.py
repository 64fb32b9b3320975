"""Pure-Python search kernels.

Same signatures and results as the compiled ``_kernels`` extension; used when
the extension is missing, when ``CTXLAB_PURE`` is set, or for logics with
more than 64 vertices.
"""

EXHAUSTED = 0
STOPPED = 1
BUDGET = 2


class _Halt(Exception):
    pass


def color_search(adj, ctx_masks, k, pre, break_symmetry, max_solutions, node_limit):
    """Backtracking search for proper colorings of the co-context graph.

    adj[v] is the neighbour bitmask of v, pre[v] a fixed color or -1.
    Returns (solutions, nodes, status).
    """
    nv = len(adj)
    color = list(pre)
    nbrs = [[u for u in range(nv) if adj[v] >> u & 1] for v in range(nv)]
    cnt = [[0] * k for _ in range(nv)]
    forb = [0] * nv
    used = [0] * k
    full = (1 << k) - 1
    solutions = []
    nodes = 0

    for v in range(nv):
        c = color[v]
        if c < 0:
            continue
        if c >= k or any(color[u] == c for u in nbrs[v]):
            return solutions, nodes, EXHAUSTED
        used[c] += 1
        for u in nbrs[v]:
            cnt[u][c] += 1
            forb[u] |= 1 << c

    def demand_ok():
        for m in ctx_masks:
            free = 0
            r = 0
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                if color[v] < 0:
                    r += 1
                    free |= full & ~forb[v]
            if r and free.bit_count() < r:
                return False
        return True

    def rec(remaining):
        nonlocal nodes
        if remaining == 0:
            solutions.append(tuple(color))
            if max_solutions and len(solutions) >= max_solutions:
                raise _Halt(STOPPED)
            return
        best = -1
        bestf = -1
        for v in range(nv):
            if color[v] < 0:
                f = forb[v].bit_count()
                if f > bestf:
                    best, bestf = v, f
        if bestf >= k:
            return
        first_unused = next((c for c in range(k) if used[c] == 0), k)
        v = best
        for c in range(k):
            if forb[v] >> c & 1:
                continue
            if break_symmetry and used[c] == 0 and c != first_unused:
                continue
            nodes += 1
            if node_limit and nodes > node_limit:
                raise _Halt(BUDGET)
            color[v] = c
            used[c] += 1
            bit = 1 << c
            for u in nbrs[v]:
                cnt[u][c] += 1
                forb[u] |= bit
            if demand_ok():
                rec(remaining - 1)
            for u in nbrs[v]:
                cnt[u][c] -= 1
                if cnt[u][c] == 0:
                    forb[u] &= ~bit
            used[c] -= 1
            color[v] = -1

    status = EXHAUSTED
    try:
        if demand_ok():
            rec(sum(1 for c in color if c < 0))
    except _Halt as h:
        status = h.args[0]
    return solutions, nodes, status


def state_search(ctx_masks, adj, node_limit):
    """All 0/1 assignments with exactly one 1 per context, as bitmasks of 1s."""
    solutions = []
    nodes = 0

    def rec(ones, zeros):
        nonlocal nodes
        best = -1
        bestcnt = 1 << 30
        for m in ctx_masks:
            if m & ones:
                continue
            cand = m & ~zeros
            c = cand.bit_count()
            if c == 0:
                return
            if c < bestcnt:
                best, bestcnt = cand, c
        if best < 0:
            solutions.append(ones)
            return
        m = best
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            nodes += 1
            if node_limit and nodes > node_limit:
                raise _Halt(BUDGET)
            rec(ones | low, zeros | adj[v])

    status = EXHAUSTED
    try:
        rec(0, 0)
    except _Halt as h:
        status = h.args[0]
    return solutions, nodes, status
