"""Abstract hypergraphs, borders, contraction and tree-decompositions."""

from __future__ import annotations

from collections import defaultdict
from typing import Hashable, Iterable, Mapping

from .errors import InternalError, SurftwError


class Merged:
    """Label of the edge created by contracting a set of edges.

    Labels compose by union of the original labels, so nested contractions
    never produce fresh names that could collide.
    """

    __slots__ = ("members",)

    def __init__(self, members: Iterable[Hashable]):
        self.members = frozenset(members)

    def __eq__(self, other):
        return isinstance(other, Merged) and self.members == other.members

    def __hash__(self):
        return hash(("Merged", self.members))

    def __repr__(self):
        inner = ",".join(repr(x) for x in sorted(self.members, key=label_key))
        return f"e[{inner}]"


def originals(label: Hashable) -> frozenset:
    return label.members if isinstance(label, Merged) else frozenset([label])


def merged_label(labels: Iterable[Hashable]) -> Merged:
    out: set = set()
    for lab in labels:
        out |= originals(lab)
    return Merged(out)


def label_key(x):
    """Total order over the mixed label types used in this package."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(label_key(y) for y in x))
    if isinstance(x, Merged):
        return (3, tuple(sorted(label_key(y) for y in x.members)))
    return (4, repr(x))


def sort_labels(xs: Iterable[Hashable]) -> list:
    return sorted(xs, key=label_key)


class Hypergraph:
    """Vertex set plus labelled non-empty hyperedges."""

    def __init__(self, edges: Mapping[Hashable, Iterable[Hashable]],
                 vertices: Iterable[Hashable] | None = None):
        self.edges = {lab: frozenset(ends) for lab, ends in edges.items()}
        for lab, ends in self.edges.items():
            if not ends:
                raise SurftwError("BAD_INPUT", f"edge {lab!r} has no ends")
        covered = frozenset().union(*self.edges.values()) if self.edges else frozenset()
        self.vertices = frozenset(vertices) if vertices is not None else covered
        if not covered <= self.vertices:
            raise SurftwError("BAD_INPUT", "edge ends outside the vertex set")

    @classmethod
    def from_graph(cls, pairs: Iterable[tuple], vertices=None) -> "Hypergraph":
        return cls({i: e for i, e in enumerate(pairs)}, vertices)

    def __repr__(self):
        return f"Hypergraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def __eq__(self, other):
        return isinstance(other, Hypergraph) and self.edges == other.edges \
            and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.vertices, frozenset(self.edges.items())))

    @property
    def edge_labels(self) -> list:
        return sort_labels(self.edges)

    def size(self) -> int:
        """|V| + |E|, the induction measure used by p-tree synthesis."""
        return len(self.vertices) + len(self.edges)

    def isolated_vertices(self) -> frozenset:
        covered = frozenset().union(*self.edges.values()) if self.edges else frozenset()
        return self.vertices - covered

    def incidence(self) -> dict:
        inc = defaultdict(set)
        for lab, ends in self.edges.items():
            for v in ends:
                inc[v].add(lab)
        return inc

    def primal_adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for ends in self.edges.values():
            for v in ends:
                adj[v] |= ends
        for v in adj:
            adj[v].discard(v)
        return adj

    def components(self, removed: Iterable[Hashable] = ()) -> list[frozenset]:
        """Vertex components of the hypergraph after deleting ``removed``."""
        gone = set(removed)
        adj = self.primal_adjacency()
        seen = set()
        comps = []
        for v in sort_labels(self.vertices - gone):
            if v in seen:
                continue
            comp = {v}
            todo = [v]
            while todo:
                x = todo.pop()
                for y in adj[x]:
                    if y not in gone and y not in comp:
                        comp.add(y)
                        todo.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def to_json(self) -> dict:
        from .io import encode_label
        return {"vertices": [encode_label(v) for v in sort_labels(self.vertices)],
                "edges": [{"label": encode_label(lab),
                           "ends": [encode_label(v) for v in sort_labels(self.edges[lab])]}
                          for lab in self.edge_labels]}

    @classmethod
    def from_json(cls, data: dict) -> "Hypergraph":
        from .io import decode_label
        edges = {}
        for item in data["edges"]:
            lab = decode_label(item["label"])
            if lab in edges:
                raise SurftwError("BAD_INPUT", f"duplicate edge label {lab!r}")
            edges[lab] = [decode_label(v) for v in item["ends"]]
        verts = [decode_label(v) for v in data["vertices"]] if "vertices" in data else None
        return cls(edges, verts)


def _check_partition(H: Hypergraph, parts) -> list[frozenset]:
    parts = [frozenset(p) for p in parts]
    seen: set = set()
    for p in parts:
        if not p or p & seen:
            raise SurftwError("BAD_PARTITION", "parts must be non-empty and disjoint")
        seen |= p
    if seen != set(H.edges):
        raise SurftwError("BAD_PARTITION", "parts do not cover the edge set")
    return parts


def border(H: Hypergraph, parts) -> frozenset:
    """Vertices lying in edges of at least two parts of the partition."""
    parts = _check_partition(H, parts)
    which = {}
    for i, p in enumerate(parts):
        for lab in p:
            which[lab] = i
    seen_in: dict = {}
    out = set()
    for lab, ends in H.edges.items():
        i = which[lab]
        for v in ends:
            j = seen_in.setdefault(v, i)
            if j != i:
                out.add(v)
    return frozenset(out)


def border_of(H: Hypergraph, A: Iterable[Hashable]) -> frozenset:
    A = frozenset(A)
    rest = frozenset(H.edges) - A
    if not A or not rest:
        return frozenset()
    return border(H, [A, rest])


def contract(H: Hypergraph, A: Iterable[Hashable]) -> Hypergraph:
    """Replace the edges of ``A`` by one edge on their border."""
    A = frozenset(A)
    if not A or not A <= set(H.edges) or A == set(H.edges):
        raise SurftwError("BAD_SUBSET", "A must be a non-empty proper edge subset")
    ends = border_of(H, A)
    if not ends:
        raise SurftwError("BAD_SUBSET", "contracted edge would have no ends")
    edges = {lab: e for lab, e in H.edges.items() if lab not in A}
    edges[merged_label(A)] = ends
    return Hypergraph(edges)


class TreeDecomposition:
    """Bags on the nodes of a tree."""

    def __init__(self, bags: Mapping[Hashable, Iterable[Hashable]],
                 tree_edges: Iterable[tuple[Hashable, Hashable]] = ()):
        self.bags = {n: frozenset(b) for n, b in bags.items()}
        self.tree_edges = [tuple(e) for e in tree_edges]

    def __repr__(self):
        return f"TreeDecomposition(nodes={len(self.bags)}, width={self.width})"

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    def neighbours(self) -> dict:
        nb = {n: [] for n in self.bags}
        for u, v in self.tree_edges:
            nb[u].append(v)
            nb[v].append(u)
        return nb

    def relabel(self, prefix) -> "TreeDecomposition":
        return TreeDecomposition({(prefix, n): b for n, b in self.bags.items()},
                                 [((prefix, u), (prefix, v)) for u, v in self.tree_edges])


def width(td: TreeDecomposition) -> int:
    return td.width


def _tree_problems(nodes, tree_edges) -> list[str]:
    nodes = list(nodes)
    if not nodes:
        return ["tree has no nodes"]
    node_set = set(nodes)
    out = []
    for u, v in tree_edges:
        if u not in node_set or v not in node_set:
            out.append("tree edge uses an unknown node")
            return out
    if len(tree_edges) != len(nodes) - 1:
        out.append("tree edge count is not nodes-1")
    parent = {n: n for n in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in tree_edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            out.append("tree contains a cycle")
            break
        parent[ru] = rv
    if len({find(n) for n in nodes}) != 1:
        out.append("tree is not connected")
    return out


def validate_td(H: Hypergraph, td: TreeDecomposition) -> list[str]:
    """All violations of the decomposition axioms for ``H``."""
    report = _tree_problems(td.bags, td.tree_edges)
    if report:
        return report
    all_bags = list(td.bags.values())
    for lab in H.edge_labels:
        ends = H.edges[lab]
        if not any(ends <= b for b in all_bags):
            report.append(f"edge {lab!r} not contained in any bag")
    extra = frozenset().union(*all_bags) - H.vertices
    if extra:
        report.append(f"bags mention unknown vertices {sort_labels(extra)!r}")
    nb = td.neighbours()
    for v in sort_labels(H.vertices):
        holding = {n for n, b in td.bags.items() if v in b}
        if not holding:
            report.append(f"vertex {v!r} in no bag")
            continue
        start = next(iter(holding))
        seen = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for y in nb[x]:
                if y in holding and y not in seen:
                    seen.add(y)
                    todo.append(y)
        if seen != holding:
            report.append(f"bags containing {v!r} are not connected")
    return report


def normalize_td(td: TreeDecomposition) -> TreeDecomposition:
    """Contract tree edges whose one bag contains the other."""
    bags = dict(td.bags)
    edges = [tuple(e) for e in td.tree_edges]
    changed = True
    while changed:
        changed = False
        for i, (u, v) in enumerate(edges):
            if bags[u] <= bags[v] or bags[v] <= bags[u]:
                keep, drop = (v, u) if bags[u] <= bags[v] else (u, v)
                del edges[i]
                edges = [tuple(keep if x == drop else x for x in e) for e in edges]
                del bags[drop]
                changed = True
                break
    return TreeDecomposition(bags, edges)


def _node_holding(td: TreeDecomposition, ends: frozenset):
    for n in sorted(td.bags, key=label_key):
        if ends <= td.bags[n]:
            return n
    return None


def merge_td(H: Hypergraph, A, B, td_a: TreeDecomposition,
             td_b: TreeDecomposition) -> TreeDecomposition:
    """Join decompositions of ``H/A`` and ``H/B`` into one of ``H``.

    ``td_a`` decomposes the contraction of ``A`` and ``td_b`` that of ``B``;
    the two trees are linked between bags holding the contracted edges.
    """
    A, B = frozenset(A), frozenset(B)
    _check_partition(H, [A, B])
    e_a = border_of(H, A)
    u = _node_holding(td_a, e_a)
    v = _node_holding(td_b, border_of(H, B))
    if u is None or v is None:
        raise InternalError(message="no bag contains the contracted edge")
    left, right = td_a.relabel("A"), td_b.relabel("B")
    bags = {**left.bags, **right.bags}
    edges = left.tree_edges + right.tree_edges + [(("A", u), ("B", v))]
    return TreeDecomposition(bags, edges)


def restrict_td(H: Hypergraph, td: TreeDecomposition, B) -> TreeDecomposition:
    """Decomposition of ``H`` with ``E - B`` contracted, by deleting vertices."""
    B = frozenset(B)
    rest = frozenset(H.edges) - B
    if not rest:
        return td
    if not any(border_of(H, rest) <= b for b in td.bags.values()):
        raise SurftwError("BORDER_NOT_COVERED", "border of E-B is in no bag")
    keep = frozenset().union(*(H.edges[lab] for lab in B))
    return TreeDecomposition({n: b & keep for n, b in td.bags.items()}, td.tree_edges)


def is_bramble(G: Hypergraph, elements) -> bool:
    """Every element is connected and every pair touches."""
    elements = [frozenset(x) for x in elements]
    adj = G.primal_adjacency()

    def connected(X):
        if not X or not X <= G.vertices:
            return False
        start = next(iter(X))
        seen = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y in X and y not in seen:
                    seen.add(y)
                    todo.append(y)
        return seen == X

    if not all(connected(X) for X in elements):
        return False
    for i, X in enumerate(elements):
        reach = X | frozenset().union(*(adj[x] for x in X))
        for Y in elements[i + 1:]:
            if not (reach & Y):
                return False
    return True


def bramble_order(G: Hypergraph, elements, budget: int = 50_000_000) -> int:
    """Size of a smallest vertex set meeting every element."""
    from .kernels import min_hitting_set
    verts = sort_labels(frozenset().union(*map(frozenset, elements)))
    index = {v: i for i, v in enumerate(verts)}
    masks = [sum(1 << index[v] for v in X) for X in elements]
    size, _ = min_hitting_set(masks, len(verts), budget)
    return size


def min_hitting_set_labels(elements, budget: int = 50_000_000) -> list:
    """A smallest hitting set, as vertex labels."""
    from .kernels import min_hitting_set
    verts = sort_labels(frozenset().union(*map(frozenset, elements)))
    index = {v: i for i, v in enumerate(verts)}
    masks = [sum(1 << index[v] for v in X) for X in elements]
    _, chosen = min_hitting_set(masks, len(verts), budget)
    return [verts[i] for i in chosen]
