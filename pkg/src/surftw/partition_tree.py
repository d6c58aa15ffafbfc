"""Trees whose leaves are the hyperedges.

Removing an internal node splits the leaves into a node partition; removing
a tree edge splits them in two.  Giving each internal node the border of
its node partition, and each leaf the ends of its edge, yields a
tree-decomposition.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

from .errors import SurftwError
from .hypergraph import (Hypergraph, TreeDecomposition, border, label_key, merged_label,
                         sort_labels, validate_td)


class PartitioningTree:
    """Nodes are ``0..n-1``; ``leaf_label`` maps each leaf to its edge."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], leaf_label: Mapping[int, Hashable]):
        self.n = n
        self.edges = [tuple(sorted(e)) for e in edges]
        self.leaf_label = dict(leaf_label)
        self.adj = {v: [] for v in range(n)}
        for u, v in self.edges:
            self.adj[u].append(v)
            self.adj[v].append(u)
        problems = self.problems()
        if problems:
            raise SurftwError("BAD_TREE", "; ".join(problems))

    def problems(self) -> list[str]:
        out = []
        if self.n < 1:
            return ["empty tree"]
        if len(self.edges) != self.n - 1:
            out.append("edge count is not nodes-1")
        seen = {0}
        todo = [0]
        while todo:
            x = todo.pop()
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        if len(seen) != self.n:
            out.append("tree is not connected")
        if set(self.leaf_label) != set(self.leaves):
            out.append("labelled nodes are not exactly the leaves")
        labels = list(self.leaf_label.values())
        if len(set(labels)) != len(labels):
            out.append("two leaves share a label")
        return out

    def __repr__(self):
        return f"PartitioningTree(nodes={self.n}, leaves={len(self.leaf_label)})"

    @property
    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) <= 1]

    @property
    def internal(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) > 1]

    @property
    def labels(self) -> frozenset:
        return frozenset(self.leaf_label.values())

    def leaf_of(self, label) -> int:
        for v, lab in self.leaf_label.items():
            if lab == label:
                return v
        raise SurftwError("BAD_INPUT", f"no leaf labelled {label!r}")

    def _side(self, start: int, blocked: int) -> frozenset:
        seen = {start, blocked}
        todo = [start]
        out = set()
        while todo:
            x = todo.pop()
            if x in self.leaf_label:
                out.add(self.leaf_label[x])
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return frozenset(out)

    def node_partition(self, v: int) -> list[frozenset]:
        if len(self.adj[v]) <= 1:
            raise SurftwError("NOT_INTERNAL", f"node {v} is a leaf")
        return [self._side(u, v) for u in self.adj[v]]

    def edge_partition(self, u: int, v: int) -> tuple[frozenset, frozenset]:
        if v not in self.adj[u]:
            raise SurftwError("BAD_INPUT", f"{u}-{v} is not a tree edge")
        return self._side(u, v), self._side(v, u)

    def relabel(self, mapping: Mapping) -> "PartitioningTree":
        return PartitioningTree(self.n, self.edges,
                                {v: mapping.get(lab, lab) for v, lab in self.leaf_label.items()})

    def to_json(self) -> dict:
        from .io import encode_label
        return {"nodes": list(range(self.n)), "edges": [list(e) for e in self.edges],
                "leaf_label": [[v, encode_label(self.leaf_label[v])]
                               for v in sorted(self.leaf_label)]}

    @classmethod
    def from_json(cls, data: dict) -> "PartitioningTree":
        from .io import decode_label
        return cls(len(data["nodes"]), [tuple(e) for e in data["edges"]],
                   {int(v): decode_label(lab) for v, lab in data["leaf_label"]})


def single_leaf(label) -> PartitioningTree:
    return PartitioningTree(1, [], {0: label})


def star(labels: Iterable[Hashable]) -> PartitioningTree:
    """One internal node joined to a leaf per label (two labels: a single edge)."""
    labels = sort_labels(labels)
    if len(labels) == 1:
        return single_leaf(labels[0])
    if len(labels) == 2:
        return PartitioningTree(2, [(0, 1)], {0: labels[0], 1: labels[1]})
    return PartitioningTree(len(labels) + 1, [(0, i + 1) for i in range(len(labels))],
                            {i + 1: lab for i, lab in enumerate(labels)})


def node_partition(T: PartitioningTree, v: int) -> list[frozenset]:
    return T.node_partition(v)


def edge_partition(T: PartitioningTree, u: int, v: int) -> tuple[frozenset, frozenset]:
    return T.edge_partition(u, v)


def as_tree_decomposition(H: Hypergraph, T: PartitioningTree) -> TreeDecomposition:
    if T.labels != frozenset(H.edges):
        raise SurftwError("BAD_TREE", "leaf labels differ from the edge set")
    bags = {}
    for v in range(T.n):
        if v in T.leaf_label:
            bags[v] = H.edges[T.leaf_label[v]]
        else:
            bags[v] = border(H, T.node_partition(v))
    td = TreeDecomposition(bags, T.edges)
    problems = validate_td(H, td)
    if problems:
        raise SurftwError("BAD_TREE", "; ".join(problems))
    return td


def ptree_width(H: Hypergraph, T: PartitioningTree) -> int:
    return as_tree_decomposition(H, T).width


def merge_ptrees(H: Hypergraph, A, B, T_a: PartitioningTree, T_b: PartitioningTree
                 ) -> PartitioningTree:
    """Glue trees of the two contractions along their contracted leaves.

    ``T_a`` has a leaf for the edge replacing ``A`` and ``T_b`` one for the
    edge replacing ``B``; both leaves go and their neighbours are joined.
    """
    A, B = frozenset(A), frozenset(B)
    e_a, e_b = merged_label(A), merged_label(B)
    if e_a not in T_a.labels or e_b not in T_b.labels:
        raise SurftwError("BAD_INPUT", "contracted leaf missing")
    if T_a.labels - {e_a} != B or T_b.labels - {e_b} != A:
        raise SurftwError("BAD_INPUT", "trees do not match the bipartition")
    la, lb = T_a.leaf_of(e_a), T_b.leaf_of(e_b)
    ua, ub = T_a.adj[la][0], T_b.adj[lb][0]
    ids: dict = {}
    for v in range(T_a.n):
        if v != la:
            ids[("a", v)] = len(ids)
    for v in range(T_b.n):
        if v != lb:
            ids[("b", v)] = len(ids)
    edges = [(ids[("a", u)], ids[("a", v)]) for u, v in T_a.edges if la not in (u, v)]
    edges += [(ids[("b", u)], ids[("b", v)]) for u, v in T_b.edges if lb not in (u, v)]
    edges.append((ids[("a", ua)], ids[("b", ub)]))
    labels = {ids[("a", v)]: lab for v, lab in T_a.leaf_label.items() if v != la}
    labels.update({ids[("b", v)]: lab for v, lab in T_b.leaf_label.items() if v != lb})
    T = PartitioningTree(len(ids), edges, labels)
    if T.labels != frozenset(H.edges):
        raise SurftwError("BAD_INPUT", "merged leaves differ from the edge set")
    return T


def dual_ptree(T: PartitioningTree, lam) -> tuple[PartitioningTree, Hypergraph]:
    """The same tree read over the dual embedding.

    Dual edges keep the labels of their primal edges, so only the target
    hypergraph changes; it is returned alongside.
    """
    from .embedded import hyper_dual
    dual = hyper_dual(lam)
    return PartitioningTree(T.n, T.edges, T.leaf_label), dual.hypergraph


def is_ptree(T: PartitioningTree, pi) -> tuple[bool, list[str]]:
    """Check both p-tree conditions; the list names every violation."""
    from .pi_structure import as_structure
    R = as_structure(pi)
    if T.labels != R.faces:
        return False, ["leaf labels differ from the edges of the radial structure"]
    trouble = R.troublesome_edges()
    bad = []
    for u, v in T.edges:
        parts = T.edge_partition(u, v)
        if all(R.is_connected(p) for p in parts):
            continue
        ends = [x for x in (u, v) if x in T.leaf_label and T.leaf_label[x] in trouble]
        if not ends:
            bad.append(f"edge {u}-{v}: partition not connected and no troublesome leaf")
    for v in T.internal:
        if len(T.adj[v]) == 3:
            continue
        parts = sorted(T.node_partition(v), key=lambda p: min(label_key(x) for x in p))
        ok = False
        for w in T.adj[v]:
            lab = T.leaf_label.get(w)
            if lab in trouble:
                want = sorted(R.e_partition(lab), key=lambda p: min(label_key(x) for x in p))
                if want == parts:
                    ok = True
                    break
        if not ok:
            bad.append(f"node {v}: degree {len(T.adj[v])} without matching troublesome leaf")
    return not bad, bad
