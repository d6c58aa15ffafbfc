"""Exact tree-width of small hypergraphs.

Hyperedges are turned into cliques; a tree-decomposition of that primal
graph contains every hyperedge in some bag, so the widths coincide.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .errors import TooLargeError
from .hypergraph import Hypergraph, TreeDecomposition, label_key, sort_labels
from .kernels import treewidth_dp

DEFAULT_LIMIT = 18


def oracle_limit() -> int:
    raw = os.environ.get("SURFTW_ORACLE_LIMIT")
    return int(raw) if raw else DEFAULT_LIMIT


def _min_degree_order(adj: list[int], n: int) -> list[int]:
    """Greedy min-fill-in elimination, used only for an upper bound."""
    adj = list(adj)
    alive = (1 << n) - 1
    order = []
    for _ in range(n):
        best, best_key = -1, None
        a = alive
        while a:
            low = a & -a
            a ^= low
            v = low.bit_length() - 1
            nb = adj[v] & alive
            key = bin(nb).count("1")
            if best_key is None or key < best_key:
                best, best_key = v, key
        v = best
        nb = adj[v] & alive
        x = nb
        while x:
            low = x & -x
            x ^= low
            u = low.bit_length() - 1
            adj[u] |= nb & ~low
        alive &= ~(1 << v)
        order.append(v)
    return order


def decomposition_from_order(adj: list[int], n: int, order: list[int]
                             ) -> tuple[int, dict[int, int], list[tuple[int, int]]]:
    """Bags and tree edges of the elimination decomposition for ``order``.

    Node ``v`` gets bag ``{v}`` plus its later neighbours in the fill graph;
    its parent is the earliest eliminated of those neighbours.
    """
    adj = list(adj)
    pos = {v: i for i, v in enumerate(order)}
    bags = {}
    parent = {}
    for v in order:
        later = 0
        x = adj[v]
        while x:
            low = x & -x
            x ^= low
            u = low.bit_length() - 1
            if pos[u] > pos[v]:
                later |= low
        bags[v] = later | (1 << v)
        y = later
        while y:
            low = y & -y
            y ^= low
            u = low.bit_length() - 1
            adj[u] |= later & ~low
        if later:
            parent[v] = min((u for u in range(n) if later >> u & 1), key=pos.__getitem__)
    width = max(bin(b).count("1") for b in bags.values()) - 1
    roots = [v for v in order if v not in parent]
    edges = [(v, p) for v, p in parent.items()]
    edges += [(roots[i], roots[i + 1]) for i in range(len(roots) - 1)]
    return width, bags, edges


def _primal(H: Hypergraph) -> tuple[list, list[int]]:
    verts = sort_labels(H.vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for ends in H.edges.values():
        mask = 0
        for v in ends:
            mask |= 1 << index[v]
        for v in ends:
            adj[index[v]] |= mask & ~(1 << index[v])
    return verts, adj


def _canonical_key(H: Hypergraph) -> tuple:
    return (tuple(sort_labels(H.vertices)),
            tuple(sorted((tuple(sort_labels(e)) for e in H.edges.values()),
                         key=label_key)))


@lru_cache(maxsize=4096)
def _solve(key: tuple) -> tuple[int, tuple]:
    verts, edges = key
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = [0] * n
    for ends in edges:
        mask = 0
        for v in ends:
            mask |= 1 << index[v]
        for v in ends:
            adj[index[v]] |= mask & ~(1 << index[v])
    heuristic = _min_degree_order(adj, n)
    ub, _, _ = decomposition_from_order(adj, n, heuristic)
    tw, order = treewidth_dp(adj, n, ub)
    if tw == -2:
        tw, order = ub, heuristic
    return tw, tuple(order)


def exact_treewidth(H: Hypergraph, limit: int | None = None) -> tuple[int, TreeDecomposition]:
    """Tree-width of ``H`` with an optimal decomposition.

    Raises ``TooLargeError`` above ``limit`` vertices (default from
    ``SURFTW_ORACLE_LIMIT`` or 18).
    """
    limit = oracle_limit() if limit is None else limit
    n = len(H.vertices)
    if n > limit:
        raise TooLargeError(message=f"{n} vertices exceed the oracle limit {limit}")
    if n == 0:
        return -1, TreeDecomposition({0: ()}, [])
    verts, adj = _primal(H)
    key = _canonical_key(H)
    tw, order = _solve(key)
    width, bags, edges = decomposition_from_order(adj, n, list(order))
    assert width == tw, (width, tw)
    td = TreeDecomposition({v: {verts[i] for i in range(n) if b >> i & 1}
                            for v, b in bags.items()}, edges)
    return tw, td


def treewidth(H: Hypergraph, limit: int | None = None) -> int:
    return exact_treewidth(H, limit)[0]
