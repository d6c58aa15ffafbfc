"""Build a p-tree whose width equals the tree-width.

The recursion splits the edge set into a connected bipartition whose
border fits in a bag of an optimal decomposition, contracts each side,
solves both smaller instances and glues the two trees back together.
Every promise the construction relies on is checked at run time; a broken
promise raises :class:`InternalError` with a replayable dump.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InternalError
from .hypergraph import (Hypergraph, TreeDecomposition, border, border_of, contract,
                         label_key, normalize_td, sort_labels)
from .partition_tree import PartitioningTree, is_ptree, merge_ptrees, ptree_width, star
from .pi_structure import RadialStructure, as_structure
from .treewidth import exact_treewidth

TERMINAL = "terminal"


@dataclass
class GoodPartition:
    parts: tuple[frozenset, frozenset]
    witness: frozenset
    case: str


@dataclass
class Terminal:
    tree: PartitioningTree
    case: str


@dataclass
class SynthesisResult:
    tree: PartitioningTree
    width: int
    transcript: list = field(default_factory=list)


def _dump(H: Hypergraph, R: RadialStructure, note: str) -> dict:
    from .io import encode_label
    return {"note": note, "hypergraph": H.to_json(),
            "radial": [[encode_label(k), [encode_label(f) for f in sort_labels(fs)]]
                       for k, fs in sorted(R.elements.items(), key=lambda kv: label_key(kv[0]))]}


def _fail(H, R, note):
    raise InternalError(message=note, dump=_dump(H, R, note))


def _smaller(H: Hypergraph, part) -> bool:
    return contract(H, part).size() < H.size()


def _group_key(g):
    return min(label_key(x) for x in g)


def _base_tree(H: Hypergraph) -> PartitioningTree:
    return star(H.edges)


def _case_troublesome(H, R, e, td) -> GoodPartition | Terminal:
    parts = R.e_partition(e)
    rest = parts[1:]
    if all(len(p) == 1 for p in rest):
        return Terminal(star(H.edges), "troublesome-star")
    for A in rest:
        B = frozenset(H.edges) - A
        if _smaller(H, A) and _smaller(H, B):
            bag = _bag_containing(td, border_of(H, A))
            if bag is None:
                _fail(H, R, "border of an e-partition part is in no bag")
            return GoodPartition((A, B), bag, "troublesome")
    _fail(H, R, "no e-partition part gives smaller contractions")


def _bag_containing(td: TreeDecomposition, S: frozenset):
    for n in sorted(td.bags, key=label_key):
        if S <= td.bags[n]:
            return td.bags[n]
    return None


def _case_separator(H, R, td) -> GoodPartition:
    pairs = sorted(((u, v) for u, v in td.tree_edges), key=lambda p: (label_key(p[0]), label_key(p[1])))
    u, v = pairs[0]
    S = td.bags[u] & td.bags[v]
    comps = H.components(S)
    if len(comps) < 2:
        _fail(H, R, "intersection of neighbouring bags does not separate")
    C = min(comps, key=lambda c: (len(c), _group_key(c)))
    E_C = frozenset(lab for lab, ends in H.edges.items() if ends & C)
    if not R.is_connected(E_C):
        _fail(H, R, "edges meeting a separator component are not connected")
    rest = frozenset(H.edges) - E_C
    pieces = R.components(rest)
    S2 = border_of(H, E_C)
    others = [D for D in H.components(S2) if not D & C]
    if not others:
        _fail(H, R, "border of the component edges does not separate")
    D = min(others, key=lambda c: (len(c), _group_key(c)))
    E_D = frozenset(lab for lab, ends in H.edges.items() if ends & D)
    holders = [p for p in pieces if E_D <= p]
    if len(holders) != 1:
        _fail(H, R, "edges of the far component are split")
    E_1 = holders[0]
    E_2 = frozenset(H.edges) - E_1
    if not (R.is_connected(E_1) and R.is_connected(E_2)):
        _fail(H, R, "separator bipartition is not connected")
    if not border(H, [E_1, E_2]) <= S:
        _fail(H, R, "separator bipartition border escapes the bag")
    if not (_smaller(H, E_1) and _smaller(H, E_2)):
        _fail(H, R, "separator bipartition does not shrink both sides")
    return GoodPartition((E_1, E_2), td.bags[u], "separator")


def _connected_in(adj, X) -> bool:
    X = set(X)
    if not X:
        return False
    start = min(X, key=label_key)
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in adj[x]:
            if y in X and y not in seen:
                seen.add(y)
                todo.append(y)
    return seen == X


def connected_bipartition(adj: dict) -> tuple[frozenset, frozenset] | None:
    """Split a connected graph into two connected sides of size >= 2.

    Spanning trees rooted at each vertex are cut at every tree edge first;
    exhaustive search over subsets is the fallback.
    """
    verts = sort_labels(adj)
    every = frozenset(verts)
    for root in verts:
        parent = {root: None}
        order = [root]
        for x in order:
            for y in sort_labels(adj[x]):
                if y not in parent:
                    parent[y] = x
                    order.append(y)
        if len(order) != len(verts):
            return None
        below = {x: {x} for x in order}
        for x in reversed(order[1:]):
            below[parent[x]] |= below[x]
        for x in order[1:]:
            side = frozenset(below[x])
            other = every - side
            if len(side) >= 2 and len(other) >= 2 and _connected_in(adj, other):
                return side, other
    first = verts[0]
    for r in range(1, len(verts) - 2):
        for combo in combinations(verts[1:], r):
            side = frozenset((first,) + combo)
            other = every - side
            if len(other) >= 2 and _connected_in(adj, side) and _connected_in(adj, other):
                return side, other
    return None


def _case_trivial(H, R, td) -> GoodPartition:
    split = connected_bipartition(R.adjacency())
    if split is None:
        _fail(H, R, "no connected bipartition with two edges per side")
    A, B = split
    if not (R.is_connected(A) and R.is_connected(B)):
        _fail(H, R, "bipartition of the adjacency graph is not connected in the region sense")
    return GoodPartition((A, B), next(iter(td.bags.values())), "trivial")


def find_good_partition(H: Hypergraph, pi, td: TreeDecomposition) -> GoodPartition | Terminal:
    """One step of the case analysis; ``td`` must be optimal."""
    R = as_structure(pi)
    if len(H.edges) <= 3:
        return Terminal(_base_tree(H), "small")
    td = normalize_td(td)
    trouble = sort_labels(R.troublesome_edges())
    if trouble:
        return _case_troublesome(H, R, trouble[0], td)
    if len(td.bags) >= 2:
        return _case_separator(H, R, td)
    return _case_trivial(H, R, td)


def _solve(H: Hypergraph, R: RadialStructure, transcript: list, depth: int) -> PartitioningTree:
    tw, td = exact_treewidth(H)
    step = find_good_partition(H, R, td)
    if isinstance(step, Terminal):
        transcript.append({"depth": depth, "edges": len(H.edges), "vertices": len(H.vertices),
                           "case": step.case, "tw": tw})
        return step.tree
    A, B = step.parts
    transcript.append({"depth": depth, "edges": len(H.edges), "vertices": len(H.vertices),
                       "case": step.case, "tw": tw, "split": [len(A), len(B)]})
    if not border(H, [A, B]) <= step.witness:
        _fail(H, R, "good partition border not inside its witness bag")
    H_a, H_b = contract(H, A), contract(H, B)
    if not (H_a.size() < H.size() and H_b.size() < H.size()):
        _fail(H, R, "recursion does not shrink")
    T_a = _solve(H_a, R.contract(A), transcript, depth + 1)
    T_b = _solve(H_b, R.contract(B), transcript, depth + 1)
    T = merge_ptrees(H, A, B, T_a, T_b)
    width = ptree_width(H, T)
    if width != tw:
        _fail(H, R, f"merged width {width} differs from tree-width {tw}")
    return T


def optimal_ptree(lam, pi=None, check: bool = True) -> SynthesisResult:
    """A p-tree of ``(lam, pi)`` of width equal to the tree-width.

    ``lam`` is an embedding (its radial map is used when ``pi`` is omitted)
    or an abstract hypergraph paired with a radial structure.
    """
    if pi is None:
        from .embedded import radial
        pi = radial(lam)
    H = lam if isinstance(lam, Hypergraph) else lam.hypergraph
    R = as_structure(pi)
    transcript: list = []
    T = _solve(H, R, transcript, 0)
    width = ptree_width(H, T)
    if check:
        ok, bad = is_ptree(T, R)
        if not ok:
            _fail(H, R, "synthesised tree is not a p-tree: " + "; ".join(bad))
    return SynthesisResult(T, width, transcript)
