"""Face-width through short cycles of the radial graph.

A noose meeting the embedded graph in ``t`` vertices is a radial cycle of
length ``2t``.  A cycle is contractible when cutting the surface along it
leaves a side that is a disc.
"""

from __future__ import annotations

from collections import deque

from .embedded import EmbeddedHypergraph, incidence_from_graph, radial
from .errors import TooLargeError
from .surface_map import SurfaceMap, euler_genus

DEFAULT_BUDGET = 2_000_000


def _radial_map(g) -> SurfaceMap:
    lam = g if isinstance(g, EmbeddedHypergraph) else incidence_from_graph(g)
    return radial(lam).map


def is_contractible(m: SurfaceMap, cycle_edges) -> bool:
    """Cut along a simple cycle given by its edge indices."""
    cut = set(cycle_edges)
    walks = m.faces.walks
    faces_of_edge: dict = {}
    for fi, w in enumerate(walks):
        for d, _ in w:
            faces_of_edge.setdefault(m.edge_of[d], set()).add(fi)
    parent = list(range(len(walks)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, fs in faces_of_edge.items():
        if e in cut:
            continue
        it = iter(fs)
        r = find(next(it))
        for f in it:
            parent[find(f)] = r
    sides: dict = {}
    for fi in range(len(walks)):
        sides.setdefault(find(fi), []).append(fi)
    if len(sides) < 2:
        return False
    for faces in sides.values():
        verts, edges = set(), set()
        for fi in faces:
            for d, _ in walks[fi]:
                verts.add(m.vertex_of[d])
                edges.add(m.edge_of[d])
        if len(verts) - len(edges) + len(faces) == 1:
            return True
    return False


def shortest_noncontractible_cycle(m: SurfaceMap, max_len: int,
                                   budget: int = DEFAULT_BUDGET) -> list[int] | None:
    """Edge indices of a shortest non-contractible cycle of length at most
    ``max_len``, or ``None``.

    Every cycle closing a breadth-first tree at some root is tested; a
    shortest non-contractible cycle is always among them.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(m.num_vertices)]
    for e, (a, b) in enumerate(m.edges):
        u, v = m.vertex_of[a], m.vertex_of[b]
        adj[u].append((v, e))
        adj[v].append((u, e))
    best = None
    work = 0
    radius = max_len // 2
    for root in range(m.num_vertices):
        dist = {root: 0}
        via = {root: None}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if dist[x] >= radius:
                continue
            for y, e in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    via[y] = (x, e)
                    queue.append(y)
        limit = max_len if best is None else len(best) - 1
        for e, (a, b) in enumerate(m.edges):
            u, v = m.vertex_of[a], m.vertex_of[b]
            if u not in dist or v not in dist:
                continue
            if via[u] is not None and via[u][1] == e or via[v] is not None and via[v][1] == e:
                continue
            if dist[u] + dist[v] + 1 > limit:
                continue
            work += m.num_edges
            if work > budget:
                raise TooLargeError(message="face-width search exceeded its budget", budget=budget)
            pu, pv = _path(via, u), _path(via, v)
            while pu and pv and pu[-1] == pv[-1]:
                pu.pop()
                pv.pop()
            cycle = pu + [e] + pv
            if len(cycle) <= limit and not is_contractible(m, cycle):
                best = cycle
                limit = len(best) - 1
    return best


def _path(via, x) -> list[int]:
    out = []
    while via[x] is not None:
        x, e = via[x]
        out.append(e)
    return out


def face_width_at_least(g, theta: int, budget: int = DEFAULT_BUDGET) -> bool:
    """No non-contractible noose meets fewer than ``theta`` vertices."""
    m = _radial_map(g)
    if euler_genus(m) == 0 or theta <= 1:
        return True
    return shortest_noncontractible_cycle(m, 2 * theta - 1, budget) is None


def face_width(g, max_theta: int | None = None, budget: int = DEFAULT_BUDGET) -> int | None:
    """Fewest vertices on a non-contractible noose (``None`` on the sphere
    or when none exists up to ``max_theta``)."""
    m = _radial_map(g)
    if euler_genus(m) == 0:
        return None
    cap = m.num_edges if max_theta is None else 2 * max_theta
    cycle = shortest_noncontractible_cycle(m, cap, budget)
    return None if cycle is None else len(cycle) // 2
