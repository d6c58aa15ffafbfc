"""Pure-Python versions of the compiled kernels.

Both kernels take graphs and set systems as integer bitmasks.  They must
return exactly what ``_kernels.pyx`` returns, including tie-breaking.
"""

from __future__ import annotations

from .errors import TooLargeError


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _q_size(adj: list[int], inside: int, v: int) -> int:
    """Number of vertices outside ``inside | v`` reachable from ``v`` through ``inside``."""
    comp = 1 << v
    frontier = comp
    reach = 0
    while frontier:
        nb = 0
        f = frontier
        while f:
            low = f & -f
            nb |= adj[low.bit_length() - 1]
            f ^= low
        reach |= nb
        frontier = nb & inside & ~comp
        comp |= frontier
    return _popcount(reach & ~comp & ~inside)


def treewidth_dp(adj: list[int], n: int, upper: int) -> tuple[int, list[int]]:
    """Exact tree-width by dynamic programming over vertex subsets.

    ``upper`` is a known achievable width; states at or above it are pruned.
    Returns the width and an elimination order attaining it.
    """
    if n == 0:
        return -1, []
    size = 1 << n
    INF = 255
    tw = [INF] * size
    last = [0] * size
    tw[0] = -1
    bound = upper + 1
    for S in range(1, size):
        best = INF
        arg = 0
        rest = S
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            prev = tw[S ^ low]
            if prev >= bound or prev >= best:
                continue
            q = _q_size(adj, S ^ low, v)
            w = prev if prev > q else q
            if w < best:
                best = w
                arg = v
        tw[S] = best if best < bound else INF
        last[S] = arg
    full = size - 1
    if tw[full] >= bound:
        return -2, []
    order = []
    S = full
    while S:
        v = last[S]
        order.append(v)
        S ^= 1 << v
    order.reverse()
    return tw[full], order


def min_hitting_set(masks: list[int], n: int, budget: int) -> tuple[int, list[int]]:
    """Smallest set of indices meeting every mask, by iterative deepening.

    Raises ``TooLargeError`` once more than ``budget`` search nodes are used.
    """
    masks = list(masks)
    if any(m == 0 for m in masks):
        raise ValueError("empty set cannot be hit")
    if not masks:
        return 0, []
    nodes = [0]

    def packing(unhit: list[int], allowed: int) -> int:
        used = 0
        count = 0
        for m in sorted(unhit, key=lambda x: _popcount(x & allowed)):
            a = m & allowed
            if not a & used:
                used |= a
                count += 1
        return count

    def dfs(unhit: list[int], allowed: int, k: int, chosen: list[int]) -> bool:
        nodes[0] += 1
        if nodes[0] > budget:
            raise TooLargeError(message="hitting-set budget exhausted")
        if not unhit:
            return True
        if k == 0:
            return False
        best = None
        best_count = 1 << 30
        for m in unhit:
            c = _popcount(m & allowed)
            if c < best_count:
                best, best_count = m, c
                if c <= 1:
                    break
        if best_count == 0:
            return False
        if packing(unhit, allowed) > k:
            return False
        cand = best & allowed
        while cand:
            low = cand & -cand
            cand ^= low
            chosen.append(low.bit_length() - 1)
            if dfs([m for m in unhit if not m & low], allowed, k - 1, chosen):
                return True
            chosen.pop()
            allowed &= ~low
        return False

    full = (1 << n) - 1
    for k in range(1, n + 1):
        chosen: list[int] = []
        if dfs(masks, full, k, chosen):
            return k, sorted(chosen)
    raise ValueError("no hitting set exists")
