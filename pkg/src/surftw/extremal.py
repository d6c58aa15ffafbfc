"""Grids, Todinca graphs, their gadgets and the embedded families built from them.

A Todinca graph of order ``p`` has three ``2p x 2p`` grids ``A``, ``B``,
``C`` with vertices ``(X, r, c)``; row 0 is the top row.  The top row of
``A`` reads ``a_1 .. a_p, a'_p .. a'_1``, so ``a_i = (A, 0, i-1)`` and
``a'_i = (A, 0, 2p-i)``; likewise for ``B`` and ``C``.  Rungs join
``a_i`` to some ``b'_j``, ``b_i`` to some ``c'_j`` and ``c_i`` to some
``a'_j``, bijectively.

Embeddings use one rotation per grid vertex in the counter-clockwise slot
order right, up, left, down, with the rung of a top-row vertex in the up
slot.  Faces then come out of the rotation system alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .embedded import EmbeddedHypergraph, incidence_from_graph
from .errors import SurftwError
from .hypergraph import Hypergraph, TreeDecomposition, label_key
from .surface_map import MapBuilder, SurfaceMap, euler_genus, is_orientable

GRIDS = ("A", "B", "C")


# ---------------------------------------------------------------------------
# grids

def grid(n: int, m: int) -> Hypergraph:
    """The ``n x m`` grid on vertices ``(r, c)``."""
    if n < 1 or m < 1:
        raise SurftwError("BAD_INPUT", "grid sides must be positive")
    edges = [((r, c), (r, c + 1)) for r in range(n) for c in range(m - 1)]
    edges += [((r, c), (r + 1, c)) for r in range(n - 1) for c in range(m)]
    verts = [(r, c) for r in range(n) for c in range(m)]
    return Hypergraph({e: e for e in edges}, verts)


def _column_sweep(n: int, m: int) -> list[frozenset]:
    """Bags sweeping column 0 to column ``m-1`` one vertex at a time."""
    if m == 1:
        return [frozenset((r, 0) for r in range(n))]
    bags = [frozenset((r, 0) for r in range(n))]
    for j in range(m - 1):
        for i in range(n):
            bags.append(frozenset([(r, j + 1) for r in range(i + 1)]
                                  + [(r, j) for r in range(i, n)]))
    return bags


def grid_sweep(n: int, m: int, start: str = "short") -> list[frozenset]:
    """Path bags of the ``n x m`` grid.

    ``start`` picks the first bag: ``"short"`` a shortest side, ``"row"``
    the top row, ``"col"`` the left column.
    """
    by_rows = start == "row" or (start == "short" and n > m)
    if by_rows:
        return [frozenset((r, c) for c, r in b) for b in _column_sweep(m, n)]
    return _column_sweep(n, m)


def path_decomposition(bags: Sequence[frozenset]) -> TreeDecomposition:
    return TreeDecomposition(dict(enumerate(bags)), [(i, i + 1) for i in range(len(bags) - 1)])


def grid_path_decomposition(n: int, m: int) -> TreeDecomposition:
    """Width ``min(n, m)`` (width 0 for the single vertex), first bag a shortest side."""
    if n == 1 and m == 1:
        return path_decomposition([frozenset([(0, 0)])])
    return path_decomposition(grid_sweep(n, m))


# ---------------------------------------------------------------------------
# Todinca graphs

@dataclass(frozen=True)
class TodincaSpec:
    """Order ``p`` and the three rung bijections, as 1-based index lists.

    ``ab[i-1] = j`` links ``a_i`` to ``b'_j``; ``bc`` and ``ca`` likewise.
    ``twisted`` lists ``("bc", i)`` rungs carrying a sign change.
    """

    p: int
    ab: tuple
    bc: tuple
    ca: tuple
    twisted: frozenset = field(default_factory=frozenset)

    @classmethod
    def identity(cls, p: int, reversed_bc: bool = False) -> "TodincaSpec":
        ident = tuple(range(1, p + 1))
        bc = tuple(range(p, 0, -1)) if reversed_bc else ident
        return cls(p, ident, bc, ident)

    def __post_init__(self):
        if self.p < 1:
            raise SurftwError("BAD_INPUT", "order must be at least 1")
        for perm in (self.ab, self.bc, self.ca):
            if sorted(perm) != list(range(1, self.p + 1)):
                raise SurftwError("BAD_INPUT", "rungs must form a bijection")


def _side(X: str, p: int, i: int, primed: bool):
    return (X, 0, 2 * p - i) if primed else (X, 0, i - 1)


def rungs(spec: TodincaSpec) -> list[tuple[tuple, tuple, int]]:
    """``(u, v, sign)`` for every rung."""
    p = spec.p
    out = []
    for X, Y, perm, tag in (("A", "B", spec.ab, "ab"), ("B", "C", spec.bc, "bc"),
                            ("C", "A", spec.ca, "ca")):
        for i, j in enumerate(perm, start=1):
            sign = -1 if (tag, i) in spec.twisted else 1
            out.append((_side(X, p, i, False), _side(Y, p, j, True), sign))
    return out


def _grid_edges(p: int) -> list[tuple]:
    n = 2 * p
    out = []
    for X in GRIDS:
        for r in range(n):
            for c in range(n):
                if c + 1 < n:
                    out.append(((X, r, c), (X, r, c + 1)))
                if r + 1 < n:
                    out.append(((X, r, c), (X, r + 1, c)))
    return out


def todinca(spec: TodincaSpec) -> Hypergraph:
    n = 2 * spec.p
    verts = [(X, r, c) for X in GRIDS for r in range(n) for c in range(n)]
    edges = _grid_edges(spec.p) + [(u, v) for u, v, _ in rungs(spec)]
    return Hypergraph({e: e for e in edges}, verts)


def todinca_decomposition(spec: TodincaSpec) -> TreeDecomposition:
    """Width ``3p - 1``: a hub bag of the unprimed top halves, one bag per
    grid holding its top row and the unprimed vertices its rungs reach,
    and a row sweep of each grid hanging below."""
    p = spec.p
    hub = frozenset(_side(X, p, i, False) for X in GRIDS for i in range(1, p + 1))
    # the rungs into the primed half of X come from the grid before X
    feeder = {"A": "C", "B": "A", "C": "B"}
    bags = {"hub": hub}
    edges = []
    for X in GRIDS:
        top = frozenset((X, 0, c) for c in range(2 * p))
        bags[("top", X)] = top | frozenset(_side(feeder[X], p, i, False)
                                           for i in range(1, p + 1))
        edges.append(("hub", ("top", X)))
        sweep = grid_sweep(2 * p, 2 * p, start="row")
        prev = ("top", X)
        for t, b in enumerate(sweep):
            node = ("grid", X, t)
            bags[node] = frozenset((X, r, c) for r, c in b)
            edges.append((prev, node))
            prev = node
    return TreeDecomposition(bags, edges)


def crosses_bramble(spec: TodincaSpec) -> list[frozenset]:
    """Every union of a row of one grid with a column through its rungs."""
    p = spec.p
    n = 2 * p

    def column(X, c):
        return frozenset((X, r, c) for r in range(n))

    out = []
    for X, Y, perm in (("A", "B", spec.ab), ("B", "C", spec.bc), ("C", "A", spec.ca)):
        cols = [column(X, i - 1) | column(Y, 2 * p - j) for i, j in enumerate(perm, start=1)]
        for r in range(n):
            row = frozenset((X, r, c) for c in range(n))
            for col in cols:
                out.append(row | col)
    return out


# ---------------------------------------------------------------------------
# gadgets and the embedded families

def ladder(k: int) -> list[tuple[int, int]]:
    return [(i, i) for i in range(1, k + 1)]


def handle(l: int) -> list[tuple[int, int]]:
    out = [(i, i) for i in range(1, l + 1)] + [(i, i) for i in range(4 * l + 1, 5 * l + 1)]
    out += [(l + i, 2 * l + i) for i in range(1, 2 * l + 1)]
    out += [(3 * l + i, l + i) for i in range(1, l + 1)]
    return sorted(out)


def crosscap(l: int) -> list[tuple[int, int]]:
    out = [(i, i) for i in range(1, l + 1)] + [(i, i) for i in range(2 * l + 1, 3 * l + 1)]
    out += [(l + i, 2 * l + 1 - i) for i in range(1, l + 1)]
    return sorted(out)


@dataclass
class EmbeddedFamily:
    k: int
    p: int
    l: int
    crosscap: bool
    graph: Hypergraph
    embedding: EmbeddedHypergraph
    map: SurfaceMap
    names: list
    spec: TodincaSpec
    notes: list = field(default_factory=list)

    def counts(self) -> dict:
        return {"vertices": self.map.num_vertices, "edges": self.map.num_edges,
                "faces": len(self.map.faces), "genus": euler_genus(self.map),
                "orientable": is_orientable(self.map)}


def gkp_spec(k: int, p: int, use_crosscap: bool = False) -> TodincaSpec:
    """Rungs of the family member: identity ladders from ``A`` and gadget
    blocks between ``B`` and ``C``."""
    if k < 1 or p < 1:
        raise SurftwError("BAD_INPUT", "k and p must be positive")
    block = 3 * p if use_crosscap else 5 * p
    pattern = crosscap(p) if use_crosscap else handle(p)
    l = k * block
    bc = [0] * l
    twisted = set()
    for g in range(k):
        off = g * block
        for i, j in pattern:
            bc[off + i - 1] = off + j
            if use_crosscap and p < i <= 2 * p:
                twisted.add(("bc", off + i))
    ident = tuple(range(1, l + 1))
    return TodincaSpec(l, ident, tuple(bc), ident, frozenset(twisted))


def embed_todinca(spec: TodincaSpec) -> tuple[SurfaceMap, list]:
    """Rotation system with every rung in the up slot of its ends."""
    n = 2 * spec.p
    b = MapBuilder()
    slots: dict = {}

    def attach(u, v, su, sv, sign=1):
        du, dv = b.add_edge(sign)
        slots.setdefault(u, {})[su] = du
        slots.setdefault(v, {})[sv] = dv

    for X in GRIDS:
        for r in range(n):
            for c in range(n):
                if c + 1 < n:
                    attach((X, r, c), (X, r, c + 1), "right", "left")
                if r + 1 < n:
                    attach((X, r, c), (X, r + 1, c), "down", "up")
    for u, v, sign in rungs(spec):
        attach(u, v, "up", "up", sign)
    for v, s in slots.items():
        b.set_rotation(v, [s[x] for x in ("right", "up", "left", "down") if x in s])
    return b.build()


def build_gkp(k: int, p: int, use_crosscap: bool = False) -> EmbeddedFamily:
    spec = gkp_spec(k, p, use_crosscap)
    m, names = embed_todinca(spec)
    edge_names = []
    for a, b2 in m.edges:
        u, v = names[m.vertex_of[a]], names[m.vertex_of[b2]]
        edge_names.append(tuple(sorted((u, v), key=label_key)))
    lam = incidence_from_graph(m, names, edge_names)
    fam = EmbeddedFamily(k, p, spec.p, use_crosscap, todinca(spec), lam, m, names, spec)
    if p == 1:
        fam.notes.append("p = 1 lies below the range p > 1 used for the minimum-genus argument")
    return fam


# ---------------------------------------------------------------------------
# the dual of the handle family

@dataclass
class DualDecomposition:
    td: TreeDecomposition
    td_full: TreeDecomposition
    dual: Hypergraph
    dual_minus_out: Hypergraph
    width: int
    width_full: int
    target: int
    inventory: dict
    primal_width: int
    dual_lower_bound: int
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"width": self.width, "width_with_outer": self.width_full,
                "target": self.target, "inventory": self.inventory,
                "primal_width": self.primal_width, "dual_lower_bound": self.dual_lower_bound,
                "notes": self.notes}


def classify_dual_faces(fam: EmbeddedFamily) -> tuple[dict, dict]:
    """Name every face: grid cells, the outer and inner faces, the two
    ladder paths and the remaining gadget faces."""
    m, names = fam.map, fam.names
    l = fam.l
    n = 2 * l
    faces = m.faces.walks
    verts_of = [frozenset(names[m.vertex_of[d]] for d, _ in w) for w in faces]
    edge_faces: dict = {}
    for fi, w in enumerate(faces):
        for d, _ in w:
            e = m.edge_of[d]
            a, b = m.edges[e]
            key = frozenset((names[m.vertex_of[a]], names[m.vertex_of[b]]))
            edge_faces.setdefault(key, []).append(fi)
    label: dict = {}
    for fi, vs in enumerate(verts_of):
        if len(faces[fi]) == 4 and len({v[0] for v in vs}) == 1 and len(vs) == 4:
            X = next(iter(vs))[0]
            r = min(v[1] for v in vs)
            c = min(v[2] for v in vs)
            if vs == {(X, r, c), (X, r + 1, c), (X, r, c + 1), (X, r + 1, c + 1)}:
                label[fi] = ("cell", X, r, c)

    def other_side(u, v):
        found = [f for f in edge_faces[frozenset((u, v))] if f not in label]
        if len(found) != 1:
            raise SurftwError("STRUCTURE_MISMATCH", f"edge {u}-{v} has no unique outside face")
        return found[0]

    outs = {other_side((X, n - 1, 0), (X, n - 1, 1)) for X in GRIDS}
    ins = {other_side((X, 0, l - 1), (X, 0, l)) for X in GRIDS}
    if len(outs) != 1 or len(ins) != 1 or outs == ins:
        raise SurftwError("STRUCTURE_MISMATCH", "outer or inner face is not shared")
    label[outs.pop()] = "out"
    label[ins.pop()] = "in"
    for tag, cols in (("pab", range(0, l - 1)), ("pac", range(l, 2 * l - 1))):
        for i, c in enumerate(cols):
            fi = other_side(("A", 0, c), ("A", 0, c + 1))
            if fi in label:
                raise SurftwError("STRUCTURE_MISMATCH", "ladder faces are not distinct")
            label[fi] = (tag, i if tag == "pab" else l - 2 - i)
    g = 0
    for fi in range(len(faces)):
        if fi not in label:
            label[fi] = ("gadget", g)
            g += 1
    genus = euler_genus(m)
    inventory = {"faces": len(faces), "cells": sum(1 for x in label.values() if x[0] == "cell"),
                 "ladder_faces": 2 * (l - 1), "gadget": g, "expected_gadget": l - 1 - genus}
    if inventory["cells"] != 3 * (n - 1) ** 2 or g != l - 1 - genus:
        raise SurftwError("STRUCTURE_MISMATCH", f"face inventory {inventory}")
    return label, inventory


def _dual_graph(fam: EmbeddedFamily, label: dict) -> Hypergraph:
    m = fam.map
    ends: dict = {}
    for fi, w in enumerate(m.faces.walks):
        for d, _ in w:
            ends.setdefault(m.edge_of[d], []).append(label[fi])
    return Hypergraph({e: set(fs) for e, fs in ends.items()})


def _top_sweep(X: str, l: int, nbrs: dict) -> list[frozenset]:
    """Bags absorbing the neighbours of the top cells of one dual grid.

    ``nbrs[c]`` are the outside neighbours of top cell ``c``.  A neighbour
    stays until its last adjacent column has entered, so the bags grow
    from the full neighbourhood to the full top row.
    """
    n = 2 * l - 1
    best = None
    for flip in (False, True):
        cols = list(range(n))[::-1] if flip else list(range(n))
        last = {}
        for pos, c in enumerate(cols):
            for x in nbrs.get(c, ()):
                last[x] = pos
        everyone = frozenset(last)
        bags = [everyone]
        for pos in range(n):
            kept = frozenset(x for x in everyone if last[x] >= pos)
            bags.append(kept | frozenset(("cell", X, 0, cols[q]) for q in range(pos + 1)))
        w = max(len(b) for b in bags)
        if best is None or w < best[0]:
            best = (w, bags)
    return best[1]


def dual_decomposition_gkp(k: int, p: int, use_crosscap: bool = False) -> DualDecomposition:
    """Decomposition of the dual minus its outer face vertex.

    A hub bag holds both ladder paths, the inner face and every gadget
    face; each dual grid is swept from its top row down and hangs off the
    hub through a bag holding its outside neighbours.
    """
    fam = build_gkp(k, p, use_crosscap)
    label, inventory = classify_dual_faces(fam)
    dual = _dual_graph(fam, label)
    l = fam.l
    n = 2 * l - 1
    keep = {lab: ends for lab, ends in dual.edges.items() if "out" not in ends}
    minus = Hypergraph(keep, dual.vertices - {"out"})
    hub = frozenset(x for x in label.values() if x == "in" or x[0] in ("pab", "pac", "gadget"))
    bags = {"hub": hub}
    edges = []
    for X in GRIDS:
        nbrs: dict = {}
        for ends in keep.values():
            cells = [x for x in ends if x != "in" and x[0] == "cell" and x[1] == X and x[2] == 0]
            others = [x for x in ends if x not in cells]
            if cells and others:
                for c in cells:
                    for o in others:
                        if o[0] != "cell":
                            nbrs.setdefault(c[3], set()).add(o)
        chain = _top_sweep(X, l, nbrs)
        rows = [frozenset(("cell", X, r, c) for r, c in b) for b in grid_sweep(n, n, start="row")]
        chain += rows
        prev = "hub"
        for t, b in enumerate(chain):
            node = (X, t)
            bags[node] = b
            edges.append((prev, node))
            prev = node
    td = TreeDecomposition(bags, edges)
    td_full = TreeDecomposition({v: b | {"out"} for v, b in bags.items()}, edges)
    genus = euler_genus(fam.map)
    notes = list(fam.notes)
    notes.append(f"measured width {td.width} on the dual without its outer face vertex")
    # the primal tree-width is 3l-1 (decomposition above, crosses bramble below) and
    # every edge has two ends, so the dual bound applied backwards gives a floor
    primal = todinca_decomposition(fam.spec).width
    return DualDecomposition(td, td_full, dual, minus, td.width, td_full.width,
                             3 * l - 2 - genus, inventory, primal, primal - 1 - genus, notes)
