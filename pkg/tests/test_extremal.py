import pytest

from surftw.errors import SurftwError
from surftw.extremal import (TodincaSpec, build_gkp, crosscap, crosses_bramble,
                             dual_decomposition_gkp, embed_todinca, grid,
                             grid_path_decomposition, handle, todinca, todinca_decomposition)
from surftw.hypergraph import bramble_order, is_bramble, validate_td
from surftw.surface_map import euler_genus


@pytest.mark.parametrize("n", range(1, 11))
def test_grid_sweep_widths(n):
    for m in range(1, 11):
        td = grid_path_decomposition(n, m)
        assert validate_td(grid(n, m), td) == []
        assert td.width == (0 if n == m == 1 else min(n, m))


def test_grid_first_bag_is_short_side():
    td = grid_path_decomposition(3, 5)
    assert td.bags[0] == {(r, 0) for r in range(3)}


@pytest.mark.parametrize("p", range(1, 11))
def test_todinca_counts_and_decomposition(p):
    spec = TodincaSpec.identity(p)
    G = todinca(spec)
    assert len(G.vertices) == 12 * p * p
    assert len(G.edges) == 24 * p * p - 9 * p
    td = todinca_decomposition(spec)
    assert validate_td(G, td) == []
    assert td.width == 3 * p - 1


@pytest.mark.parametrize("p", range(1, 5))
def test_crosses_form_a_bramble(p):
    for rev in (False, True):
        spec = TodincaSpec.identity(p, reversed_bc=rev)
        elements = crosses_bramble(spec)
        assert len(elements) == 6 * p * p
        assert is_bramble(todinca(spec), elements)


def test_bramble_order_small():
    spec = TodincaSpec.identity(1)
    assert bramble_order(todinca(spec), crosses_bramble(spec)) == 3


def test_identity_todinca_is_planar():
    m, _ = embed_todinca(TodincaSpec.identity(3))
    assert euler_genus(m) == 0


def test_gadget_patterns_are_bijections():
    for p in (1, 2, 3):
        for pattern, size in ((handle(p), 5 * p), (crosscap(p), 3 * p)):
            assert sorted(i for i, _ in pattern) == list(range(1, size + 1))
            assert sorted(j for _, j in pattern) == list(range(1, size + 1))


def test_spec_rejects_non_bijection():
    with pytest.raises(SurftwError):
        TodincaSpec(2, (1, 1), (1, 2), (1, 2))


@pytest.mark.parametrize("k,p", [(1, 1), (1, 2), (2, 1)])
def test_handle_family(k, p):
    fam = build_gkp(k, p)
    l = 5 * k * p
    c = fam.counts()
    assert (c["vertices"], c["edges"]) == (12 * l * l, 24 * l * l - 9 * l)
    assert c["faces"] == 12 * l * l - 9 * l + 2 - 2 * k
    assert c["genus"] == 2 * k and c["orientable"]
    assert fam.embedding.genus == 2 * k


@pytest.mark.parametrize("k,p", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_crosscap_family(k, p):
    fam = build_gkp(k, p, use_crosscap=True)
    l = 3 * k * p
    c = fam.counts()
    assert (c["vertices"], c["edges"]) == (12 * l * l, 24 * l * l - 9 * l)
    assert c["genus"] == k and not c["orientable"]


def test_p_one_is_flagged():
    assert build_gkp(1, 1).notes
    assert not build_gkp(1, 2).notes


@pytest.mark.parametrize("k,p", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_dual_decomposition(k, p):
    res = dual_decomposition_gkp(k, p)
    l = 5 * k * p
    assert len(res.dual.vertices) == 12 * l * l - 9 * l + 2 - 2 * k
    assert res.inventory["gadget"] == l - 2 * k - 1
    assert validate_td(res.dual_minus_out, res.td) == []
    assert validate_td(res.dual, res.td_full) == []
    assert res.width <= 3 * l - 2 - 2 * k
    assert res.width_full <= 3 * l - 1 - 2 * k
    # the floor from the primal side meets the decomposition
    assert res.primal_width == 3 * l - 1
    assert res.dual_lower_bound == res.width_full


def test_dual_decomposition_crosscap_variant():
    res = dual_decomposition_gkp(1, 2, use_crosscap=True)
    assert validate_td(res.dual_minus_out, res.td) == []
    assert res.inventory["gadget"] == 3 * 2 - 1 - 1
