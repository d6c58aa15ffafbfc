"""Edge sets seen through a radial map.

Only incidences matter here: every vertex and edge of the radial map is an
*element* that touches some faces, and faces stand for hyperedges.  A set
``A`` of hyperedges owns its faces plus every element touching no other
face; ``A`` is connected in this sense when that region is connected.

Contraction deletes the owned elements and renames the faces of ``A`` to a
single merged label, so the structure can be carried through a recursion
without rebuilding any surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from .errors import SurftwError
from .hypergraph import (Hypergraph, contract as contract_hypergraph, label_key,
                         merged_label, sort_labels)


@dataclass(frozen=True)
class PiRegion:
    faces: frozenset
    private_vertices: frozenset
    private_edges: frozenset


class RadialStructure:
    """Faces (hyperedge labels) and the face sets of radial elements.

    Element ids are ``("v", label)`` for hypergraph vertices, ``("f", i)``
    for face vertices and ``("r", j)`` for radial edges.
    """

    def __init__(self, faces: Iterable[Hashable], elements: Mapping[tuple, frozenset]):
        self.faces = frozenset(faces)
        self.elements = {k: frozenset(v) for k, v in elements.items()}

    def __repr__(self):
        return f"RadialStructure(faces={len(self.faces)}, elements={len(self.elements)})"

    def _check(self, A) -> frozenset:
        A = frozenset(A)
        unknown = A - self.faces
        if unknown:
            raise SurftwError("BAD_EDGE", f"unknown edges {sort_labels(unknown)!r}")
        return A

    def region(self, A) -> PiRegion:
        A = self._check(A)
        own = [k for k, fs in self.elements.items() if fs <= A]
        verts = frozenset(k for k in own if k[0] != "r")
        edges = frozenset(k for k in own if k[0] == "r")
        return PiRegion(A, verts, edges)

    def components(self, A) -> list[frozenset]:
        """Edge sets of the connected pieces of the region of ``A``."""
        A = self._check(A)
        parent = {f: f for f in A}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for fs in self.elements.values():
            if fs and fs <= A:
                it = iter(fs)
                root = find(next(it))
                for f in it:
                    r = find(f)
                    if r != root:
                        parent[r] = root
        groups: dict = {}
        for f in A:
            groups.setdefault(find(f), set()).add(f)
        return sorted((frozenset(g) for g in groups.values()), key=_group_key)

    def is_connected(self, A) -> bool:
        A = frozenset(A)
        return bool(A) and len(self.components(A)) == 1

    def is_partition_connected(self, parts) -> bool:
        return all(self.is_connected(p) for p in parts)

    def adjacency(self) -> dict:
        """The graph on hyperedges: ``e ~ f`` when ``{e, f}`` is connected."""
        adj = {f: set() for f in self.faces}
        for fs in self.elements.values():
            if len(fs) == 2:
                e, f = fs
                adj[e].add(f)
                adj[f].add(e)
        return {f: frozenset(n) for f, n in adj.items()}

    def troublesome_edges(self) -> frozenset:
        if len(self.faces) < 2:
            return frozenset()
        return frozenset(e for e in self.faces if not self.is_connected(self.faces - {e}))

    def e_partition(self, e) -> list[frozenset]:
        if e not in self.faces:
            raise SurftwError("BAD_EDGE", f"unknown edge {e!r}")
        rest = self.faces - {e}
        comps = self.components(rest)
        if len(comps) < 2:
            raise SurftwError("NOT_TROUBLESOME", f"edge {e!r} is not troublesome")
        return [frozenset([e])] + comps

    def contract(self, A) -> "RadialStructure":
        A = self._check(A)
        if not A or A == self.faces:
            raise SurftwError("BAD_SUBSET", "A must be a non-empty proper subset")
        if not self.is_connected(A):
            raise SurftwError("NOT_PI_CONNECTED", "contracted set is not connected")
        new = merged_label(A)
        elements = {}
        for k, fs in self.elements.items():
            if fs <= A:
                continue
            elements[k] = frozenset(new if f in A else f for f in fs)
        return RadialStructure((self.faces - A) | {new}, elements)


def _group_key(g: frozenset):
    return min(label_key(x) for x in g)


def as_structure(pi) -> RadialStructure:
    return pi if isinstance(pi, RadialStructure) else pi.structure


def region(pi, A) -> PiRegion:
    return as_structure(pi).region(A)


def is_pi_connected(pi, A) -> bool:
    return as_structure(pi).is_connected(A)


def adjacency(pi) -> dict:
    return as_structure(pi).adjacency()


def troublesome_edges(pi) -> frozenset:
    return as_structure(pi).troublesome_edges()


def e_partition(pi, e) -> list[frozenset]:
    return as_structure(pi).e_partition(e)


def contract(lam, pi, A) -> tuple[Hypergraph, RadialStructure]:
    """Contract ``A`` in the hypergraph and in the carried radial structure.

    ``lam`` may be an embedding or an abstract hypergraph; the result is
    abstract because the contracted surface is never rebuilt.
    """
    H = lam if isinstance(lam, Hypergraph) else lam.hypergraph
    R = as_structure(pi)
    A = frozenset(A)
    if not R.is_connected(A):
        raise SurftwError("NOT_PI_CONNECTED", "contracted set is not connected")
    return contract_hypergraph(H, A), R.contract(A)
