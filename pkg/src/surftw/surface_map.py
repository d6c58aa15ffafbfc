"""Signed rotation systems.

A :class:`SurfaceMap` encodes a cellular embedding of a connected graph in a
closed surface, orientable or not.  Darts are the integers ``0..N-1``;
``edge_inv`` pairs the two darts of an edge, ``rotation`` sends a dart to
the next dart around its vertex, and ``signature`` gives each edge a sign.
An edge of sign ``-1`` reverses the local orientation when crossed.

Vertices, edges and faces are derived orbits and are never stored.  Vertex
``i`` is the ``i``-th rotation orbit ordered by smallest dart; edge ``i`` is
the ``i``-th pair ordered the same way, and ``signature[i]`` is its sign.

Faces are traced on states ``(dart, o)`` where ``o`` is the current local
orientation.  From state ``(d, o)`` the walk leaves along the edge of ``d``,
arrives at ``edge_inv[d]`` with orientation ``o * sign``, and turns to the
next dart in that orientation.  The state space splits into mirror pairs of
orbits; each pair is one face and :func:`trace_faces` keeps one orbit of
each pair.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .errors import SurftwError, TooLargeError

ISO_DART_LIMIT = 64

State = tuple[int, int]


class SurfaceMap:
    """An immutable signed rotation system."""

    def __init__(self, edge_inv: Sequence[int], rotation: Sequence[int],
                 signature: Sequence[int] | None = None):
        self.edge_inv = tuple(int(d) for d in edge_inv)
        self.rotation = tuple(int(d) for d in rotation)
        if signature is None:
            signature = [1] * (len(self.edge_inv) // 2)
        self.signature = tuple(int(s) for s in signature)

    @property
    def darts(self) -> int:
        return len(self.edge_inv)

    def __eq__(self, other):
        if not isinstance(other, SurfaceMap):
            return NotImplemented
        return (self.edge_inv, self.rotation, self.signature) == \
            (other.edge_inv, other.rotation, other.signature)

    def __hash__(self):
        return hash((self.edge_inv, self.rotation, self.signature))

    def __repr__(self):
        return (f"SurfaceMap(V={self.num_vertices}, E={self.num_edges}, "
                f"darts={self.darts})")

    @cached_property
    def rotation_inv(self) -> tuple[int, ...]:
        inv = [0] * self.darts
        for d, r in enumerate(self.rotation):
            inv[r] = d
        return tuple(inv)

    @cached_property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        """Rotation orbits, each listed from its smallest dart."""
        seen = [False] * self.darts
        orbits = []
        for d in range(self.darts):
            if seen[d]:
                continue
            cyc = []
            x = d
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.rotation[x]
            orbits.append(tuple(cyc))
        return tuple(orbits)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        out = [0] * self.darts
        for i, cyc in enumerate(self.vertices):
            for d in cyc:
                out[d] = i
        return tuple(out)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((d, self.edge_inv[d]) for d in range(self.darts)
                     if d < self.edge_inv[d])

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        out = [0] * self.darts
        for i, (a, b) in enumerate(self.edges):
            out[a] = out[b] = i
        return tuple(out)

    @cached_property
    def dart_sign(self) -> tuple[int, ...]:
        return tuple(self.signature[e] for e in self.edge_of)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return self.darts // 2

    def degree(self, v: int) -> int:
        return len(self.vertices[v])

    def successor(self, state: State) -> State:
        d, o = state
        y = self.edge_inv[d]
        o2 = o * self.dart_sign[d]
        return (self.rotation[y] if o2 == 1 else self.rotation_inv[y]), o2

    def mirror(self, state: State) -> State:
        d, o = state
        return self.edge_inv[d], -o * self.dart_sign[d]

    def is_connected(self) -> bool:
        if self.darts == 0:
            return False
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for d in self.vertices[v]:
                w = self.vertex_of[self.edge_inv[d]]
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.num_vertices

    @cached_property
    def faces(self) -> "FaceSet":
        return _trace(self)


class FaceSet:
    """Face boundary walks of a map, one orbit per mirror pair."""

    def __init__(self, walks: Sequence[tuple[State, ...]]):
        self.walks = tuple(tuple(w) for w in walks)
        self.face_of_state = {s: i for i, w in enumerate(self.walks) for s in w}

    def __len__(self):
        return len(self.walks)

    def __iter__(self):
        return iter(self.walks)

    def __getitem__(self, i):
        return self.walks[i]


def _trace(m: SurfaceMap) -> FaceSet:
    seen: set[State] = set()
    walks = []
    for o in (1, -1):
        for d in range(m.darts):
            start = (d, o)
            if start in seen:
                continue
            walk = []
            s = start
            while s not in seen:
                seen.add(s)
                walk.append(s)
                s = m.successor(s)
            for s in walk:
                seen.add(m.mirror(s))
            walks.append(tuple(walk))
    return FaceSet(walks)


def validate_map(m: SurfaceMap, require_connected: bool = False) -> list[str]:
    """Return every invariant violation of ``m``; an empty list means valid."""
    report = []
    n = len(m.edge_inv)
    if n == 0:
        return ["map has no darts"]
    if len(m.rotation) != n:
        report.append("rotation length differs from dart count")
    inv_ok = True
    for d, e in enumerate(m.edge_inv):
        if not 0 <= e < n:
            report.append(f"edge_inv[{d}] out of range")
            inv_ok = False
        elif e == d:
            report.append("edge_inv not fixed-point-free")
            inv_ok = False
        elif m.edge_inv[e] != d:
            report.append("edge_inv not an involution")
            inv_ok = False
    if sorted(m.rotation) != list(range(n)):
        report.append("rotation not a permutation")
    if inv_ok:
        if len(m.signature) != n // 2:
            report.append("signature length differs from edge count")
        elif any(s not in (1, -1) for s in m.signature):
            report.append("signature entries must be +1 or -1")
    report = list(dict.fromkeys(report))
    if not report and require_connected and not m.is_connected():
        report.append("map not connected")
    return report


def _require(m: SurfaceMap) -> None:
    problems = validate_map(m)
    if problems:
        raise SurftwError("INVALID_MAP", "; ".join(problems))
    if not m.is_connected():
        raise SurftwError("DISCONNECTED", "map is not connected")


def trace_faces(m: SurfaceMap) -> FaceSet:
    _require(m)
    return m.faces


def euler_genus(m: SurfaceMap) -> int:
    _require(m)
    return 2 - m.num_vertices + m.num_edges - len(m.faces)


def vertex_switching(m: SurfaceMap) -> list[int] | None:
    """Vertex signs making every edge positive, or None if none exist."""
    sign = [0] * m.num_vertices
    for root in range(m.num_vertices):
        if sign[root]:
            continue
        sign[root] = 1
        todo = deque([root])
        while todo:
            v = todo.popleft()
            for d in m.vertices[v]:
                w = m.vertex_of[m.edge_inv[d]]
                want = sign[v] * m.dart_sign[d]
                if sign[w] == 0:
                    sign[w] = want
                    todo.append(w)
                elif sign[w] != want:
                    return None
    return sign


def is_orientable(m: SurfaceMap) -> bool:
    _require(m)
    return vertex_switching(m) is not None


def switch(m: SurfaceMap, vertices: Iterable[int]) -> SurfaceMap:
    """Reverse the rotation at each given vertex and flip its edge signs."""
    flip = set(vertices)
    rot = list(m.rotation)
    for v in flip:
        for d in m.vertices[v]:
            rot[d] = m.rotation_inv[d]
    sig = []
    for a, b in m.edges:
        s = m.dart_sign[a]
        if (m.vertex_of[a] in flip) != (m.vertex_of[b] in flip):
            s = -s
        sig.append(s)
    return SurfaceMap(m.edge_inv, rot, sig)


def graph_dual(m: SurfaceMap) -> SurfaceMap:
    """Dual map: one vertex per face, rotation in boundary-walk order.

    Dual dart ``j`` is the ``j``-th traversal state listed face by face.  A
    dual edge is positive exactly when the two faces cross the primal edge
    in opposite directions.
    """
    _require(m)
    walks = m.faces.walks
    position = {}
    rot = []
    for walk in walks:
        base = len(rot)
        k = len(walk)
        for i, s in enumerate(walk):
            position[s] = base + i
            rot.append(base + (i + 1) % k)
    n = len(rot)
    inv = [-1] * n
    by_edge: dict[int, list[State]] = {}
    for walk in walks:
        for s in walk:
            by_edge.setdefault(m.edge_of[s[0]], []).append(s)
    sign_of = {}
    for e, pair in by_edge.items():
        (s1, s2) = pair
        j1, j2 = position[s1], position[s2]
        inv[j1], inv[j2] = j2, j1
        sign_of[min(j1, j2)] = 1 if s1[0] != s2[0] else -1
    sig = [sign_of[a] for a in range(n) if a < inv[a]]
    return SurfaceMap(inv, rot, sig)


def canonical_code(m: SurfaceMap, colors: Sequence[Hashable] | None = None,
                   limit: int | None = ISO_DART_LIMIT) -> tuple:
    """A relabelling-invariant code: equal codes iff isomorphic maps.

    Isomorphism allows any dart relabelling, global reflection and vertex
    switching.  ``colors`` (one entry per vertex) must be preserved too.
    """
    if limit is not None and m.darts > limit:
        raise TooLargeError(message=f"{m.darts} darts exceed limit {limit}")
    _require(m)
    if colors is None:
        colors = [0] * m.num_vertices
    colors = list(colors)
    keys = [(repr(colors[v]), len(m.vertices[v])) for v in range(m.num_vertices)]
    best_key = min(keys)
    roots = [d for d in range(m.darts) if keys[m.vertex_of[d]] == best_key]
    best = None
    for root in roots:
        for o in (1, -1):
            code = _code_from(m, root, o, colors)
            if best is None or code < best:
                best = code
    return (m.darts, repr(best_key)) + best


def _code_from(m: SurfaceMap, root: int, o: int, colors) -> tuple:
    rot, rinv, inv = m.rotation, m.rotation_inv, m.edge_inv
    vof, sgn = m.vertex_of, m.dart_sign
    label = {}
    order = []
    vo = {}

    def visit(d, orient):
        vo[vof[d]] = orient
        x = d
        while True:
            label[x] = len(order)
            order.append(x)
            x = rot[x] if orient == 1 else rinv[x]
            if x == d:
                break

    visit(root, o)
    i = 0
    while i < len(order):
        x = order[i]
        y = inv[x]
        if vof[y] not in vo:
            visit(y, vo[vof[x]] * sgn[x])
        i += 1
    code = []
    for x in order:
        v = vof[x]
        y = inv[x]
        nxt = rot[x] if vo[v] == 1 else rinv[x]
        code.append((label[y], label[nxt], vo[v] * vo[vof[y]] * sgn[x],
                     repr(colors[v])))
    return tuple(code)


def map_isomorphic(a: SurfaceMap, b: SurfaceMap, colors_a=None, colors_b=None) -> bool:
    for m in (a, b):
        if m.darts > ISO_DART_LIMIT:
            raise TooLargeError(message=f"{m.darts} darts exceed {ISO_DART_LIMIT}")
    if (a.darts, a.num_vertices) != (b.darts, b.num_vertices):
        return False
    return canonical_code(a, colors_a) == canonical_code(b, colors_b)


class MapBuilder:
    """Assemble a map from edges and per-vertex cyclic dart orders.

    >>> b = MapBuilder()
    >>> x, y = b.add_edge()
    >>> b.set_rotation("v", [x, y])
    >>> m, names = b.build()
    >>> euler_genus(m), names
    (0, ['v'])
    """

    def __init__(self):
        self._inv: list[int] = []
        self._sign: list[int] = []
        self._rot: dict[Hashable, list[int]] = {}

    def add_edge(self, sign: int = 1) -> tuple[int, int]:
        a = len(self._inv)
        self._inv += [a + 1, a]
        self._sign.append(sign)
        return a, a + 1

    def set_rotation(self, vertex: Hashable, darts: Sequence[int]) -> None:
        self._rot[vertex] = list(darts)

    def build(self) -> tuple[SurfaceMap, list[Hashable]]:
        n = len(self._inv)
        rot = [-1] * n
        owner: dict[int, Hashable] = {}
        for v, ds in self._rot.items():
            for i, d in enumerate(ds):
                if d in owner:
                    raise SurftwError("BAD_INPUT", f"dart {d} placed twice")
                owner[d] = v
                rot[d] = ds[(i + 1) % len(ds)]
        if len(owner) != n:
            raise SurftwError("BAD_INPUT", "some darts have no vertex")
        m = SurfaceMap(self._inv, rot, self._sign)
        problems = validate_map(m)
        if problems:
            raise SurftwError("INVALID_MAP", "; ".join(problems))
        return m, [owner[cyc[0]] for cyc in m.vertices]


def map_to_json(m: SurfaceMap) -> dict:
    return {"darts": m.darts, "edge_inv": list(m.edge_inv),
            "rotation": list(m.rotation), "signature": list(m.signature)}


def map_from_json(data: dict) -> SurfaceMap:
    m = SurfaceMap(data["edge_inv"], data["rotation"], data.get("signature"))
    if data.get("darts", m.darts) != m.darts:
        raise SurftwError("BAD_INPUT", "dart count mismatch")
    problems = validate_map(m)
    if problems:
        raise SurftwError("INVALID_MAP", "; ".join(problems))
    return m


def to_dot(m: SurfaceMap, names: Sequence[Hashable] | None = None) -> str:
    """DOT text for the underlying graph; negative edges are dashed."""
    if names is None:
        names = list(range(m.num_vertices))
    lines = ["graph map {"]
    for v in range(m.num_vertices):
        lines.append(f'  v{v} [label="{names[v]}"];')
    for i, (a, b) in enumerate(m.edges):
        style = ' [style=dashed]' if m.signature[i] < 0 else ''
        lines.append(f"  v{m.vertex_of[a]} -- v{m.vertex_of[b]}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
