import pytest
from hypothesis import given, settings

from builders import bouquet_map, embeddings, plane_grid_map, theta_map, torus_grid_map
from surftw.errors import SurftwError
from surftw.surface_map import (MapBuilder, SurfaceMap, canonical_code, euler_genus,
                                graph_dual, is_orientable, map_from_json, map_isomorphic,
                                map_to_json, switch, to_dot, trace_faces, validate_map)


def test_theta_is_planar():
    m, names = theta_map()
    assert sorted(names) == ["u", "v"]
    assert (m.num_vertices, m.num_edges, len(m.faces)) == (2, 3, 3)
    assert euler_genus(m) == 0
    assert is_orientable(m)


def test_bouquet_on_torus():
    m, _ = bouquet_map()
    assert len(trace_faces(m)) == 1
    assert euler_genus(m) == 2
    assert is_orientable(m)


def test_twisted_bouquet_non_orientable():
    m, _ = bouquet_map(twisted=True)
    assert not is_orientable(m)
    assert euler_genus(m) in (1, 2)


def test_projective_loop():
    b = MapBuilder()
    x = b.add_edge(-1)
    b.set_rotation(0, [x[0], x[1]])
    m, _ = b.build()
    assert euler_genus(m) == 1
    assert not is_orientable(m)


def test_every_edge_traversed_twice():
    m, _ = torus_grid_map(3)
    seen = [s for walk in m.faces for s in walk]
    assert len(set(seen)) == len(seen) == m.darts
    per_edge = {}
    for d, _ in seen:
        per_edge[m.edge_of[d]] = per_edge.get(m.edge_of[d], 0) + 1
    assert set(per_edge.values()) == {2}
    assert euler_genus(m) == 2


@pytest.mark.parametrize("n,m", [(1, 2), (2, 2), (3, 4)])
def test_plane_grid_faces(n, m):
    g, _ = plane_grid_map(n, m)
    assert len(g.faces) == (n - 1) * (m - 1) + 1
    assert euler_genus(g) == 0


def test_validate_reports_problems():
    assert validate_map(SurfaceMap([0], [0], [])) != []
    assert "rotation not a permutation" in validate_map(SurfaceMap([1, 0], [0, 0], [1]))


def test_disconnected_rejected():
    m = SurfaceMap([1, 0, 3, 2], [1, 0, 3, 2], [1, 1])
    with pytest.raises(SurftwError) as err:
        euler_genus(m)
    assert err.value.code == "DISCONNECTED"


def test_json_roundtrip():
    m, _ = torus_grid_map(3)
    assert map_from_json(map_to_json(m)) == m


def test_dot_mentions_every_edge():
    m, names = theta_map()
    assert to_dot(m, names).count("--") == 3


def test_graph_dual_of_theta_is_triangle():
    m, _ = theta_map()
    d = graph_dual(m)
    assert (d.num_vertices, d.num_edges, len(d.faces)) == (3, 3, 2)
    assert map_isomorphic(graph_dual(d), m)


@given(embeddings())
@settings(max_examples=150, deadline=None)
def test_switching_preserves_the_surface(lam):
    m = lam.map
    flipped = switch(m, [0])
    assert euler_genus(flipped) == euler_genus(m)
    assert is_orientable(flipped) == is_orientable(m)
    assert canonical_code(flipped) == canonical_code(m)


@given(embeddings())
@settings(max_examples=150, deadline=None)
def test_graph_dual_involution(lam):
    m = lam.map
    d = graph_dual(m)
    assert euler_genus(d) == euler_genus(m)
    assert is_orientable(d) == is_orientable(m)
    assert map_isomorphic(graph_dual(d), m)
