"""Small embeddings shared by the test modules."""

import random

from hypothesis import strategies as st

from surftw.duality import incidence_map
from surftw.errors import SurftwError
from surftw.embedded import embed_from_rotations, incidence_from_graph
from surftw.surface_map import MapBuilder


def theta_map():
    """Two vertices joined by three edges, on the sphere."""
    b = MapBuilder()
    a, bb, c = b.add_edge(), b.add_edge(), b.add_edge()
    b.set_rotation("u", [a[0], bb[0], c[0]])
    b.set_rotation("v", [a[1], c[1], bb[1]])
    return b.build()


def theta():
    m, names = theta_map()
    return incidence_from_graph(m, names, ["a", "b", "c"])


def single_edge():
    return embed_from_rotations({"a": [0], "b": [1], "c": [2]}, {"e": [0, 1, 2]})


def bouquet_map(twisted=False):
    """One vertex with two loops interleaved: a torus, or with a twist on
    one loop a non-orientable surface."""
    b = MapBuilder()
    x = b.add_edge(-1 if twisted else 1)
    y = b.add_edge()
    b.set_rotation("v", [x[0], y[0], x[1], y[1]])
    return b.build()


def bouquet():
    m, names = bouquet_map()
    return incidence_from_graph(m, names, ["x", "y"])


def projective_loop():
    b = MapBuilder()
    x = b.add_edge(-1)
    b.set_rotation("v", [x[0], x[1]])
    m, names = b.build()
    return incidence_from_graph(m, names, ["x"])


def plane_grid_map(n, m):
    b = MapBuilder()
    slots = {}
    for r in range(n):
        for c in range(m):
            if c + 1 < m:
                d = b.add_edge()
                slots.setdefault((r, c), {})["R"] = d[0]
                slots.setdefault((r, c + 1), {})["L"] = d[1]
            if r + 1 < n:
                d = b.add_edge()
                slots.setdefault((r, c), {})["D"] = d[0]
                slots.setdefault((r + 1, c), {})["U"] = d[1]
    for v, s in slots.items():
        b.set_rotation(v, [s[k] for k in "RULD" if k in s])
    return b.build()


def torus_grid_map(n):
    b = MapBuilder()
    slots = {}
    for r in range(n):
        for c in range(n):
            d = b.add_edge()
            slots.setdefault((r, c), {})["R"] = d[0]
            slots.setdefault((r, (c + 1) % n), {})["L"] = d[1]
            d = b.add_edge()
            slots.setdefault((r, c), {})["D"] = d[0]
            slots.setdefault(((r + 1) % n, c), {})["U"] = d[1]
    for v, s in slots.items():
        b.set_rotation(v, [s[k] for k in "RULD"])
    return b.build()


def random_incidence_embedding(rng, max_vertices=5, max_edges=5, max_incidences=8):
    """Random hypergraph embedding with named vertices and edges."""
    while True:
        nv = rng.randint(1, max_vertices)
        ne = rng.randint(1, max_edges)
        k = rng.randint(max(nv, ne), max(max_incidences, nv, ne))
        inc = [(rng.randrange(nv), rng.randrange(ne)) for _ in range(k)]
        if {a for a, _ in inc} != set(range(nv)) or {b for _, b in inc} != set(range(ne)):
            continue
        er = {f"v{v}": [i for i, (a, _) in enumerate(inc) if a == v] for v in range(nv)}
        cr = {f"e{e}": [i for i, (_, b) in enumerate(inc) if b == e] for e in range(ne)}
        for seq in list(er.values()) + list(cr.values()):
            rng.shuffle(seq)
        signs = {i: rng.choice([1, -1]) for i in range(k)}
        try:
            return embed_from_rotations(er, cr, signs)
        except SurftwError:
            continue


@st.composite
def embeddings(draw, max_incidences=6):
    """Connected incidence maps from two permutations and signs."""
    n = draw(st.integers(1, max_incidences))
    ep = draw(st.permutations(range(n)))
    cp = draw(st.permutations(range(n)))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    lam = incidence_map(list(ep), list(cp), signs)
    if lam is None:
        # join everything into one element to force connectivity
        lam = incidence_map([(i + 1) % n for i in range(n)], list(cp), signs)
    return lam


@st.composite
def named_embeddings(draw, max_incidences=8):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_incidence_embedding(random.Random(seed), max_incidences=max_incidences)
