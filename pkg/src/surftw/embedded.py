"""Hypergraphs embedded as bipartite incidence maps.

An :class:`EmbeddedHypergraph` is a :class:`SurfaceMap` whose vertices are
coloured ``"element"`` (vertices of the hypergraph) or ``"centre"`` (one per
hyperedge).  Every map edge is an incidence between an element and a centre.

Duals and radial maps are built from corners.  A face walk passes the
corner between darts ``x`` and ``rotation[x]`` of some vertex; we name that
corner by ``x``.  Arriving on dart ``a`` with orientation ``o`` and leaving
on ``d``, the corner key is ``a`` when ``o == 1`` and ``d`` otherwise.
Each corner is visited exactly once by the walks kept in a FaceSet.
"""

from __future__ import annotations

from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .errors import SurftwError
from .hypergraph import Hypergraph, label_key, sort_labels
from .surface_map import (FaceSet, MapBuilder, SurfaceMap, euler_genus,
                          is_orientable, map_isomorphic, validate_map)

ELEMENT = "element"
CENTRE = "centre"


def corner_visits(m: SurfaceMap, faces: FaceSet | None = None):
    """Yield ``(face, position, vertex, corner_key, orientation)`` per corner."""
    faces = faces if faces is not None else m.faces
    for fi, walk in enumerate(faces.walks):
        k = len(walk)
        for i in range(k):
            prev_d, _ = walk[i - 1]
            d, o = walk[i]
            a = m.edge_inv[prev_d]
            key = a if o == 1 else d
            yield fi, i, m.vertex_of[d], key, o


class EmbeddedHypergraph:
    """Incidence embedding of a hypergraph.

    ``labels[i]`` names vertex orbit ``i`` of the map; element labels are the
    hypergraph's vertices and centre labels its edge labels.  ``non_disc``
    marks embeddings known to have a face that is not an open disc.
    """

    def __init__(self, m: SurfaceMap, vclass: Sequence[str],
                 labels: Sequence[Hashable] | None = None, non_disc: bool = False):
        self.map = m
        self.vclass = tuple(vclass)
        self.labels = tuple(labels) if labels is not None else tuple(range(m.num_vertices))
        self.non_disc = non_disc
        problems = self.problems()
        if problems:
            raise SurftwError("INVALID_EMBEDDING", "; ".join(problems))

    def problems(self) -> list[str]:
        m = self.map
        out = validate_map(m)
        if out:
            return out
        if len(self.vclass) != m.num_vertices or len(self.labels) != m.num_vertices:
            return ["vclass/labels length differs from vertex count"]
        if any(c not in (ELEMENT, CENTRE) for c in self.vclass):
            out.append("unknown vertex class")
        for a, b in m.edges:
            if self.vclass[m.vertex_of[a]] == self.vclass[m.vertex_of[b]]:
                out.append("map edge does not join an element to a centre")
                break
        for cls in (ELEMENT, CENTRE):
            labs = [lab for lab, c in zip(self.labels, self.vclass) if c == cls]
            if len(set(labs)) != len(labs):
                out.append(f"duplicate {cls} label")
        if CENTRE not in self.vclass:
            out.append("no hyperedges")
        if not m.is_connected():
            out.append("incidence map is disconnected")
        return out

    def __repr__(self):
        return (f"EmbeddedHypergraph(|V|={len(self.element_orbits)}, "
                f"|E|={len(self.centre_orbits)}, k={self.genus})")

    @cached_property
    def element_orbits(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.vclass) if c == ELEMENT)

    @cached_property
    def centre_orbits(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.vclass) if c == CENTRE)

    @cached_property
    def orbit_of_edge(self) -> dict:
        return {self.labels[i]: i for i in self.centre_orbits}

    @cached_property
    def hypergraph(self) -> Hypergraph:
        return underlying_hypergraph(self)

    @property
    def faces(self) -> FaceSet:
        return self.map.faces

    @property
    def genus(self) -> int:
        return euler_genus(self.map)

    @property
    def orientable(self) -> bool:
        return is_orientable(self.map)

    @cached_property
    def edge_faces(self) -> dict:
        """Edge label -> set of face indices whose walk visits its centre."""
        out = {self.labels[c]: set() for c in self.centre_orbits}
        for fi, _, v, _, _ in corner_visits(self.map):
            if self.vclass[v] == CENTRE:
                out[self.labels[v]].add(fi)
        return {lab: frozenset(fs) for lab, fs in out.items()}

    def colors(self) -> tuple[str, ...]:
        return self.vclass


def underlying_hypergraph(lam: EmbeddedHypergraph) -> Hypergraph:
    m = lam.map
    edges = {}
    for c in lam.centre_orbits:
        edges[lam.labels[c]] = {lam.labels[m.vertex_of[m.edge_inv[d]]]
                                for d in m.vertices[c]}
    return Hypergraph(edges, [lam.labels[v] for v in lam.element_orbits])


def is_two_cell(lam: EmbeddedHypergraph) -> bool:
    """Rotation systems describe cellular embeddings, so only marks matter."""
    return not lam.non_disc and lam.map.is_connected()


def alpha_max(lam: EmbeddedHypergraph) -> int:
    return max(len(e) for e in lam.hypergraph.edges.values())


def _require_two_cell(lam: EmbeddedHypergraph) -> None:
    if not is_two_cell(lam):
        raise SurftwError("NOT_TWO_CELL", "embedding has a non-disc face")


def _corner_incidence(lam: EmbeddedHypergraph, hub_class: str):
    """Incidence map joining each ``hub_class`` corner to its face.

    Returns the map together with the vertex-orbit names of the hubs and
    face vertices: ``("hub", orbit)`` or ``("face", index)``.
    """
    m = lam.map
    visits = [v for v in corner_visits(m) if lam.vclass[v[2]] == hub_class]
    index = {key: j for j, (_, _, _, key, _) in enumerate(visits)}
    b = MapBuilder()
    darts = []
    # face vertices list their darts in walk order, which mirrors the
    # frame the walk carries, hence the sign flip
    for _, _, _, _, o in visits:
        darts.append(b.add_edge(-o))
    for v in range(m.num_vertices):
        if lam.vclass[v] != hub_class:
            continue
        order = [darts[index[x]][0] for x in m.vertices[v]]
        b.set_rotation(("hub", v), order)
    by_face: dict[int, list[int]] = {}
    for j, (fi, _, _, _, _) in enumerate(visits):
        by_face.setdefault(fi, []).append(darts[j][1])
    for fi, order in by_face.items():
        b.set_rotation(("face", fi), order)
    new_map, names = b.build()
    return new_map, names, visits


def hyper_dual(lam: EmbeddedHypergraph) -> EmbeddedHypergraph:
    """Dual embedding: faces become elements, centres are shared.

    Around each centre the dual darts sit in the corners between primal
    darts, so the two rotations alternate.  Face vertices are labelled by
    their face index in ``lam.faces``.
    """
    _require_two_cell(lam)
    new_map, names, _ = _corner_incidence(lam, CENTRE)
    vclass = [CENTRE if kind == "hub" else ELEMENT for kind, _ in names]
    labels = [lam.labels[x] if kind == "hub" else x for kind, x in names]
    return EmbeddedHypergraph(new_map, vclass, labels)


def face_border(lam: EmbeddedHypergraph, parts: Iterable[Iterable[Hashable]]) -> frozenset:
    """Faces incident with edges of at least two parts."""
    parts = [frozenset(p) for p in parts]
    seen: set = set()
    for p in parts:
        if not p or p & seen:
            raise SurftwError("BAD_PARTITION", "parts must be non-empty and disjoint")
        seen |= p
    if seen != set(lam.edge_faces):
        raise SurftwError("BAD_PARTITION", "parts do not cover the edges")
    owner: dict = {}
    out = set()
    for i, p in enumerate(parts):
        for lab in p:
            for f in lam.edge_faces[lab]:
                if owner.setdefault(f, i) != i:
                    out.add(f)
    return frozenset(out)


class RadialEmbedding:
    """Radial map of an embedded hypergraph.

    ``map`` joins every element vertex to the face vertices around it, one
    edge per corner.  ``vkind[i]`` is ``"lambda_vertex"`` or ``"face_vertex"``;
    ``labels[i]`` is the element label or the face index.  ``face_of[j]``
    is the hyperedge label enclosed by face ``j`` of ``map``.
    """

    def __init__(self, m: SurfaceMap, vkind: Sequence[str], labels: Sequence[Hashable],
                 face_of: Sequence[Hashable]):
        self.map = m
        self.vkind = tuple(vkind)
        self.labels = tuple(labels)
        self.face_of = tuple(face_of)
        if len(set(self.face_of)) != len(self.face_of) or len(self.face_of) != len(m.faces):
            raise SurftwError("INVALID_RADIAL", "faces do not biject with hyperedges")

    def __repr__(self):
        return f"RadialEmbedding(V={self.map.num_vertices}, faces={len(self.face_of)})"

    @cached_property
    def structure(self):
        """The abstract incidence data used by Pi-level operations."""
        from .pi_structure import RadialStructure
        m = self.map
        faces_at = {}
        for fi, walk in enumerate(m.faces.walks):
            lab = self.face_of[fi]
            for d, _ in walk:
                for x in (d, m.edge_inv[d]):
                    faces_at.setdefault(("r", m.edge_of[x]), set()).add(lab)
                    v = m.vertex_of[x]
                    key = ("v" if self.vkind[v] == "lambda_vertex" else "f", self.labels[v])
                    faces_at.setdefault(key, set()).add(lab)
        return RadialStructure(self.face_of, {k: frozenset(s) for k, s in faces_at.items()})


def radial(lam: EmbeddedHypergraph) -> RadialEmbedding:
    """The radial map of a cellular embedding."""
    if not lam.centre_orbits:
        raise SurftwError("NO_EDGES", "embedding has no hyperedges")
    _require_two_cell(lam)
    m = lam.map
    pi_map, names, visits = _corner_incidence(lam, ELEMENT)
    vkind = ["lambda_vertex" if kind == "hub" else "face_vertex" for kind, _ in names]
    labels = [lam.labels[x] if kind == "hub" else x for kind, x in names]
    # Pi-dart j sits at an element vertex when even; its corner key is visits[j//2].
    key_of = {}
    for j, visit in enumerate(visits):
        key_of[2 * j] = visit[3]
    face_of = []
    for walk in pi_map.faces.walks:
        found = set()
        for i, (d, o) in enumerate(walk):
            if d % 2:
                continue
            # the primal dart lying between the two radial darts of this corner
            if o == 1:
                lam_dart = key_of[d]
            else:
                lam_dart = key_of[pi_map.edge_inv[walk[i - 1][0]]]
            found.add(lam.labels[m.vertex_of[m.edge_inv[lam_dart]]])
        if len(found) != 1:
            raise SurftwError("INTERNAL", "radial face meets several hyperedges")
        face_of.append(found.pop())
    return RadialEmbedding(pi_map, vkind, labels, face_of)


def incidence_from_graph(m: SurfaceMap, vertex_names: Sequence[Hashable] | None = None,
                         edge_names: Sequence[Hashable] | None = None) -> EmbeddedHypergraph:
    """Subdivide every edge of a graph map by a centre.

    Dart ``d`` becomes dart ``2d`` at the same vertex, and ``2d+1`` at the
    centre of its edge.  The edge sign moves onto the half at its smaller
    dart.
    """
    n = m.darts
    inv = [0] * (2 * n)
    rot = [0] * (2 * n)
    for d in range(n):
        inv[2 * d], inv[2 * d + 1] = 2 * d + 1, 2 * d
        rot[2 * d] = 2 * m.rotation[d]
        rot[2 * d + 1] = 2 * m.edge_inv[d] + 1
    sig = [m.dart_sign[d] if d < m.edge_inv[d] else 1 for d in range(n)]
    new = SurfaceMap(inv, rot, sig)
    vnames = list(vertex_names) if vertex_names is not None else list(range(m.num_vertices))
    enames = list(edge_names) if edge_names is not None else list(range(m.num_edges))
    vclass, labels = [], []
    for cyc in new.vertices:
        d = cyc[0]
        if d % 2 == 0:
            vclass.append(ELEMENT)
            labels.append(vnames[m.vertex_of[d // 2]])
        else:
            vclass.append(CENTRE)
            labels.append(enames[m.edge_of[d // 2]])
    return EmbeddedHypergraph(new, vclass, labels)


def embed_from_rotations(element_rot: dict, centre_rot: dict, signs: dict | None = None
                         ) -> EmbeddedHypergraph:
    """Build an embedding from named incidences.

    ``element_rot[v]`` and ``centre_rot[e]`` list incidence ids in cyclic
    order; every id must occur once around an element and once around a
    centre.  ``signs`` maps an incidence id to -1 for twisted incidences.
    """
    signs = signs or {}
    b = MapBuilder()
    ids = sort_labels({i for seq in element_rot.values() for i in seq})
    darts = {i: b.add_edge(signs.get(i, 1)) for i in ids}
    for v, seq in element_rot.items():
        b.set_rotation((ELEMENT, v), [darts[i][0] for i in seq])
    for e, seq in centre_rot.items():
        b.set_rotation((CENTRE, e), [darts[i][1] for i in seq])
    m, names = b.build()
    return EmbeddedHypergraph(m, [cls for cls, _ in names], [lab for _, lab in names])


def embeddings_isomorphic(a: EmbeddedHypergraph, b: EmbeddedHypergraph) -> bool:
    return map_isomorphic(a.map, b.map, a.vclass, b.vclass)


def radial_isomorphic(a: RadialEmbedding, b: RadialEmbedding) -> bool:
    """Isomorphism of radial maps ignoring which side is which."""
    return map_isomorphic(a.map, b.map)


def embedding_to_json(lam: EmbeddedHypergraph) -> dict:
    from .io import encode_label
    from .surface_map import map_to_json
    out = map_to_json(lam.map)
    out["vclass"] = list(lam.vclass)
    out["labels"] = [encode_label(x) for x in lam.labels]
    if lam.non_disc:
        out["non_disc"] = True
    return out


def embedding_from_json(data: dict) -> EmbeddedHypergraph:
    from .io import decode_label
    from .surface_map import map_from_json
    m = map_from_json(data)
    labels = [decode_label(x) for x in data["labels"]] if "labels" in data else None
    return EmbeddedHypergraph(m, data["vclass"], labels, bool(data.get("non_disc", False)))


def radial_to_json(pi: RadialEmbedding) -> dict:
    from .io import encode_label
    from .surface_map import map_to_json
    out = map_to_json(pi.map)
    out["vkind"] = list(pi.vkind)
    out["labels"] = [encode_label(x) for x in pi.labels]
    out["face_of"] = [encode_label(x) for x in pi.face_of]
    return out


def radial_from_json(data: dict) -> RadialEmbedding:
    from .io import decode_label
    from .surface_map import map_from_json
    return RadialEmbedding(map_from_json(data), data["vkind"],
                           [decode_label(x) for x in data["labels"]],
                           [decode_label(x) for x in data["face_of"]])


__all__ = [
    "EmbeddedHypergraph", "RadialEmbedding", "underlying_hypergraph", "is_two_cell",
    "hyper_dual", "alpha_max", "face_border", "radial", "incidence_from_graph",
    "embed_from_rotations", "embeddings_isomorphic", "radial_isomorphic", "corner_visits",
    "embedding_to_json", "embedding_from_json", "radial_to_json", "radial_from_json",
]
