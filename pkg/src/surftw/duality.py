"""Check the dual tree-width bound on concrete embeddings.

For an embedding ``lam`` of Euler genus ``k`` the dual satisfies
``tw(dual) <= max(tw(lam) + 1 + k, alpha(dual) - 1)``.  The check builds an
optimal p-tree, reads it over the dual, and verifies the bound node by node.
"""

from __future__ import annotations

import itertools
import json
import random
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .embedded import (CENTRE, ELEMENT, EmbeddedHypergraph, alpha_max, embedding_to_json,
                       face_border, hyper_dual, radial)
from .errors import SurftwError, TooLargeError
from .hypergraph import border, label_key
from .partition_tree import PartitioningTree, is_ptree, ptree_width
from .pi_structure import as_structure
from .surface_map import SurfaceMap, canonical_code
from .synthesis import optimal_ptree
from .treewidth import exact_treewidth, oracle_limit


@dataclass
class NodeCheck:
    node: int
    kind: str
    size: int
    dual_size: int
    ok: bool


@dataclass
class BoundReport:
    tw: int
    tw_dual: int | None
    tw_tree: int
    tw_tree_dual: int
    genus: int
    alpha_dual: int
    nodes: list = field(default_factory=list)
    verdict: str = "PASS"
    simultaneously_optimal: bool | None = None
    bound_only: bool = False

    @property
    def bound(self) -> int:
        return max(self.tw + 1 + self.genus, self.alpha_dual - 1)

    def to_json(self) -> dict:
        return {"tw": self.tw, "tw_dual": self.tw_dual, "tw_tree": self.tw_tree,
                "tw_tree_dual": self.tw_tree_dual, "genus": self.genus,
                "alpha_dual": self.alpha_dual, "bound": self.bound, "verdict": self.verdict,
                "simultaneously_optimal": self.simultaneously_optimal,
                "bound_only": self.bound_only,
                "nodes": [[n.node, n.kind, n.size, n.dual_size, n.ok] for n in self.nodes]}


def _part_key(p):
    return min(label_key(x) for x in p)


def node_inequality(lam: EmbeddedHypergraph, pi, T: PartitioningTree, v: int,
                    check_tree: bool = True) -> NodeCheck:
    """Compare the primal and dual bag sizes at node ``v``.

    Leaves must fit in their dual edge; a node next to a troublesome leaf
    whose partition is that edge's partition must have its dual bag inside
    the dual edge; any other node splits the edges in three connected parts
    and must satisfy ``|dual bag| <= |bag| + 1 + genus``.
    """
    R = as_structure(pi)
    if check_tree:
        ok, bad = is_ptree(T, R)
        if not ok:
            raise SurftwError("NOT_PTREE", "; ".join(bad))
    H = lam.hypergraph
    if v in T.leaf_label:
        e = T.leaf_label[v]
        dual_edge = lam.edge_faces[e]
        return NodeCheck(v, "leaf", len(H.edges[e]), len(dual_edge), True)
    parts = T.node_partition(v)
    X = border(H, parts)
    Xd = face_border(lam, parts)
    trouble = R.troublesome_edges()
    ordered = sorted(parts, key=_part_key)
    for w in T.adj[v]:
        e = T.leaf_label.get(w)
        if e in trouble and sorted(R.e_partition(e), key=_part_key) == ordered:
            return NodeCheck(v, "troublesome", len(X), len(Xd), Xd <= lam.edge_faces[e])
    if len(parts) != 3 or not all(R.is_connected(p) for p in parts):
        raise SurftwError("NOT_PTREE", f"node {v} is neither a connected split nor troublesome")
    return NodeCheck(v, "split", len(X), len(Xd), len(Xd) <= len(X) + 1 + lam.genus)


def check_duality_bound(lam: EmbeddedHypergraph, limit: int | None = None) -> BoundReport:
    limit = oracle_limit() if limit is None else limit
    pi = radial(lam)
    synth = optimal_ptree(lam, pi)
    T = synth.tree
    dual = hyper_dual(lam)
    k = lam.genus
    alpha = alpha_max(dual)
    tw = synth.width
    tw_tree_dual = ptree_width(dual.hypergraph, T)
    R = as_structure(pi)
    checks = [node_inequality(lam, R, T, v, check_tree=False) for v in range(T.n)]
    try:
        tw_dual = exact_treewidth(dual.hypergraph, limit)[0]
    except TooLargeError:
        tw_dual = None
    report = BoundReport(tw, tw_dual, synth.width, tw_tree_dual, k, alpha, checks,
                         bound_only=tw_dual is None)
    ok = all(c.ok for c in checks) and tw_tree_dual <= report.bound
    if tw_dual is not None:
        ok = ok and tw_dual <= report.bound and tw_dual <= tw_tree_dual
        report.simultaneously_optimal = tw_dual == tw_tree_dual
    report.verdict = "PASS" if ok else "FAIL"
    return report


# ---------------------------------------------------------------------------
# instance generation

def incidence_map(element_perm, centre_perm, signs) -> EmbeddedHypergraph | None:
    """Incidence ``i`` is an edge with dart ``2i`` at an element and ``2i+1``
    at a centre; the permutations give the cyclic orders."""
    n = len(element_perm)
    inv = [d ^ 1 for d in range(2 * n)]
    rot = [0] * (2 * n)
    for i in range(n):
        rot[2 * i] = 2 * element_perm[i]
        rot[2 * i + 1] = 2 * centre_perm[i] + 1
    m = SurfaceMap(inv, rot, signs)
    if not m.is_connected():
        return None
    vclass = [ELEMENT if cyc[0] % 2 == 0 else CENTRE for cyc in m.vertices]
    return EmbeddedHypergraph(m, vclass)


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield [first] + rest


def _canonical_perm(parts):
    perm = []
    start = 0
    for d in parts:
        perm += [start + (j + 1) % d for j in range(d)]
        start += d
    return perm


def _tree_incidences(element_perm, centre_perm) -> list[int]:
    """Incidences of a spanning tree of the element-centre graph."""
    n = len(element_perm)

    def orbit_ids(perm):
        ids = [-1] * n
        c = 0
        for i in range(n):
            if ids[i] < 0:
                j = i
                while ids[j] < 0:
                    ids[j] = c
                    j = perm[j]
                c += 1
        return ids

    ev, cv = orbit_ids(element_perm), orbit_ids(centre_perm)
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    tree = []
    for i in range(n):
        a, b = find(("e", ev[i])), find(("c", cv[i]))
        if a != b:
            parent[a] = b
            tree.append(i)
    return tree


def enumerate_embeddings(max_darts: int):
    """All connected incidence maps with at most ``max_darts`` darts, one per
    isomorphism class (reflections and sign switchings identified)."""
    seen = set()
    for n in range(1, max_darts // 2 + 1):
        for parts in _partitions(n):
            ep = _canonical_perm(parts)
            for cp in itertools.permutations(range(n)):
                tree = _tree_incidences(ep, cp)
                free = [i for i in range(n) if i not in tree]
                for bits in itertools.product((1, -1), repeat=len(free)):
                    signs = [1] * n
                    for i, s in zip(free, bits):
                        signs[i] = s
                    lam = incidence_map(ep, list(cp), signs)
                    if lam is None:
                        continue
                    code = canonical_code(lam.map, lam.vclass)
                    if code in seen:
                        continue
                    seen.add(code)
                    yield lam


def random_embedding(rng: random.Random, max_darts: int) -> EmbeddedHypergraph:
    while True:
        n = rng.randint(1, max_darts // 2)
        ep = list(range(n))
        cp = list(range(n))
        rng.shuffle(ep)
        rng.shuffle(cp)
        signs = [rng.choice((1, -1)) for _ in range(n)]
        lam = incidence_map(ep, cp, signs)
        if lam is not None:
            return lam


@dataclass
class FuzzSummary:
    checked: int = 0
    failures: list = field(default_factory=list)
    genus: Counter = field(default_factory=Counter)
    tight: int = 0
    simultaneous: int = 0
    bound_only: int = 0

    def to_json(self) -> dict:
        return {"checked": self.checked, "violations": len(self.failures),
                "genus": dict(sorted(self.genus.items())), "tight": self.tight,
                "simultaneously_optimal": self.simultaneous, "bound_only": self.bound_only}


def fuzz_small_embeddings(max_darts: int = 12, count: int = 1000, seed: int = 7,
                          exhaustive: bool = True, random_darts: int = 16,
                          fail_dump: str | Path | None = None) -> FuzzSummary:
    """Run the bound check on every small map and on seeded random ones."""
    summary = FuzzSummary()
    rng = random.Random(seed)
    instances = itertools.chain(
        enumerate_embeddings(max_darts) if exhaustive else (),
        (random_embedding(rng, random_darts) for _ in range(count)))
    for lam in instances:
        summary.checked += 1
        summary.genus[lam.genus] += 1
        try:
            rep = check_duality_bound(lam)
            failed = rep.verdict != "PASS"
        except SurftwError as exc:
            rep, failed = None, True
            note = str(exc)
        if rep is not None:
            summary.bound_only += rep.bound_only
            if rep.tw_dual is not None and rep.tw_dual == rep.bound:
                summary.tight += 1
            if rep.simultaneously_optimal:
                summary.simultaneous += 1
            note = json.dumps(rep.to_json())
        if failed:
            summary.failures.append(note)
            if fail_dump is not None:
                out = Path(fail_dump)
                out.mkdir(parents=True, exist_ok=True)
                path = out / f"fail_{len(summary.failures):04d}.json"
                path.write_text(json.dumps(embedding_to_json(lam), sort_keys=True) + "\n")
    return summary
