"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends run the same seeded instances; results must agree.
"""

import argparse
import random
import time

from surftw import _pykernels, kernels


def random_graph(rng, n, q):
    adj = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < q:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return adj


def workloads(seed=1):
    rng = random.Random(seed)
    tw = [(random_graph(rng, n, 0.3), n) for n in (12, 14, 16, 18) for _ in range(3)]
    grid = []
    for side in (3, 4):
        n = side * side
        adj = [0] * n
        for r in range(side):
            for c in range(side):
                v = r * side + c
                for w in ((r + 1) * side + c if r + 1 < side else None,
                          v + 1 if c + 1 < side else None):
                    if w is not None:
                        adj[v] |= 1 << w
                        adj[w] |= 1 << v
        grid.append((adj, n))
    hs = []
    for n, k in ((24, 40), (32, 60), (40, 80)):
        hs.append(([sum(1 << rng.randrange(n) for _ in range(4)) for _ in range(k)], n))
    return tw + grid, hs


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled extension not built; only the fallback is available")
        return
    compiled = kernels._compiled
    tw_cases, hs_cases = workloads()
    rows = []
    for name, cases, call in (
            ("treewidth_dp", tw_cases, lambda mod, c: mod.treewidth_dp(c[0], c[1], c[1])[0]),
            ("min_hitting_set", hs_cases, lambda mod, c: mod.min_hitting_set(c[0], c[1], 10**8)[0])):
        t_c, r_c = timed(lambda: [call(compiled, c) for c in cases], args.repeat)
        t_p, r_p = timed(lambda: [call(_pykernels, c) for c in cases], args.repeat)
        assert r_c == r_p, f"{name}: backends disagree"
        rows.append((name, len(cases), t_c, t_p))
    print(f"{'kernel':<16} {'cases':>5} {'cython s':>10} {'python s':>10} {'speed-up':>9}")
    for name, n, t_c, t_p in rows:
        print(f"{name:<16} {n:>5} {t_c:>10.4f} {t_p:>10.4f} {t_p / t_c:>8.1f}x")


if __name__ == "__main__":
    main()
