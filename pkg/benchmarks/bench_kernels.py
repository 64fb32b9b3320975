"""Time the compiled search kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each case runs on both backends; results are checked for equality before
timings are reported.
"""

import argparse
import random
import time

from ctxlab import kernels
from ctxlab.catalog import catalog, cyclic_logic
from ctxlab.hypergraph import build_hypergraph


def random_uniform(n_vertices, n_contexts, size=3, seed=0):
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n_vertices)]
    seen = set()
    contexts = []
    while len(contexts) < n_contexts:
        ctx = tuple(sorted(rng.sample(range(n_vertices), size)))
        if ctx not in seen:
            seen.add(ctx)
            contexts.append([names[i] for i in ctx])
    return build_hypergraph(contexts)


def color_case(H, k, symmetric=True, cap=0):
    pre = [-1] * H.n_vertices
    if symmetric:
        for c, v in enumerate(H.contexts[0]):
            pre[v] = c
    args = (H.neighbor_masks(), H.context_masks(), k, pre, symmetric, cap, 0)
    return lambda backend: kernels.color_search(*args, backend=backend)


def state_case(H):
    args = (H.context_masks(), H.neighbor_masks(), 0)
    return lambda backend: kernels.state_search(*args, backend=backend)


CASES = [
    ("yu-oh: certify no 3-coloring", color_case(catalog("yu-oh").hypergraph, 3)),
    ("yu-oh: first 100k 4-colorings", color_case(catalog("yu-oh").hypergraph, 4, cap=100_000)),
    ("g32: all 4-colorings mod relabeling", color_case(catalog("g32").hypergraph, 4)),
    ("cycle-15: all 3-colorings", color_case(cyclic_logic(15).hypergraph, 3, False)),
    ("random 60v/30c: 3-colorings", color_case(random_uniform(60, 30, seed=3), 3)),
    ("yu-oh: two-valued states", state_case(catalog("yu-oh").hypergraph)),
    ("cycle-25: two-valued states", state_case(cyclic_logic(25).hypergraph)),
]


def best_of(fn, backend, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return
    print(f"{'case':42} {'solutions':>9} {'nodes':>9} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for label, fn in CASES:
        tp, rp = best_of(fn, "python", args.repeat)
        tc, rc = best_of(fn, "compiled", args.repeat)
        assert rp == rc, f"backends disagree on {label}"
        sols, nodes, _ = rc
        print(f"{label:42} {len(sols):>9} {nodes:>9} {tp:>10.4f} {tc:>11.5f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
