import pytest

from builders import bouquet, bouquet_map, plane_grid_map, projective_loop, theta, torus_grid_map
from surftw.errors import TooLargeError
from surftw.extremal import build_gkp
from surftw.facewidth import face_width, face_width_at_least, is_contractible
from surftw.embedded import incidence_from_graph, radial


def test_sphere_is_vacuous():
    m, _ = plane_grid_map(3, 3)
    assert face_width(m) is None
    assert all(face_width_at_least(m, t) for t in (1, 2, 5))
    assert face_width_at_least(theta(), 3)


def test_bouquet_meets_one_vertex():
    assert face_width(bouquet()) == 1
    assert face_width_at_least(bouquet(), 1)
    assert not face_width_at_least(bouquet(), 2)


def test_twisted_bouquet_and_projective_loop():
    m, _ = bouquet_map(twisted=True)
    assert face_width(m) == 1
    assert face_width(projective_loop()) == 1


@pytest.mark.parametrize("n", [3, 4, 5])
def test_torus_grid(n):
    m, _ = torus_grid_map(n)
    assert face_width(m) == n
    assert face_width_at_least(m, n)
    assert not face_width_at_least(m, n + 1)


def test_face_boundary_is_contractible():
    m, _ = torus_grid_map(3)
    pi = radial(incidence_from_graph(m)).map
    walk = pi.faces.walks[0]
    assert is_contractible(pi, [pi.edge_of[d] for d, _ in walk])


def test_family_representativity():
    assert face_width_at_least(build_gkp(1, 1).embedding, 1)
    assert not face_width_at_least(build_gkp(1, 1).embedding, 2)
    assert face_width_at_least(build_gkp(1, 2, use_crosscap=True).embedding, 2)


def test_budget():
    m, _ = torus_grid_map(5)
    with pytest.raises(TooLargeError):
        face_width(m, budget=10)
