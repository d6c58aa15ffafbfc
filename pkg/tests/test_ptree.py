import random

import pytest
from hypothesis import given, settings

from builders import (bouquet, embeddings, named_embeddings, random_incidence_embedding,
                      single_edge, theta)
from surftw.embedded import embed_from_rotations, hyper_dual, radial
from surftw.errors import SurftwError
from surftw.hypergraph import Hypergraph, border, validate_td
from surftw.partition_tree import (PartitioningTree, as_tree_decomposition, dual_ptree,
                                   is_ptree, merge_ptrees, ptree_width, star)
from surftw.pi_structure import adjacency, as_structure, e_partition, troublesome_edges
from surftw.synthesis import connected_bipartition, optimal_ptree
from surftw.treewidth import exact_treewidth


def pendant_loop():
    """A vertex carrying a loop-like edge e between two pendant edges a and f."""
    return embed_from_rotations(
        {"v": [0, 2, 1, 3], "x": [4], "y": [5]},
        {"e": [0, 1], "a": [2, 4], "f": [3, 5]})


def test_theta_adjacency_is_triangle():
    pi = radial(theta())
    adj = adjacency(pi)
    assert all(len(n) == 2 for n in adj.values())
    assert troublesome_edges(pi) == frozenset()


def test_troublesome_edge_and_partition():
    pi = radial(pendant_loop())
    assert troublesome_edges(pi) == {"e"}
    parts = e_partition(pi, "e")
    assert sorted(sorted(p) for p in parts) == [["a"], ["e"], ["f"]]
    with pytest.raises(SurftwError) as err:
        e_partition(pi, "a")
    assert err.value.code == "NOT_TROUBLESOME"


def test_contract_requires_connected_set():
    R = as_structure(radial(pendant_loop()))
    with pytest.raises(SurftwError) as err:
        R.contract({"a", "f"})
    assert err.value.code == "NOT_PI_CONNECTED"
    C = R.contract({"a", "e"})
    assert len(C.faces) == 2


def test_star_shapes():
    assert star(["a"]).n == 1
    assert star(["a", "b"]).n == 2
    T = star("abcd")
    assert T.n == 5 and len(T.internal) == 1


def test_tree_rejects_bad_labels():
    with pytest.raises(SurftwError) as err:
        PartitioningTree(3, [(0, 1), (1, 2)], {0: "a"})
    assert err.value.code == "BAD_TREE"


def test_node_partition_of_star():
    T = star("abc")
    assert sorted(sorted(p) for p in T.node_partition(0)) == [["a"], ["b"], ["c"]]
    with pytest.raises(SurftwError):
        T.node_partition(1)


def test_single_edge_tree():
    lam = single_edge()
    res = optimal_ptree(lam)
    assert res.tree.n == 1
    assert res.width == 2


def test_merge_of_path_contractions():
    H = Hypergraph.from_graph([(0, 1), (1, 2), (2, 3), (3, 4)])
    A, B = frozenset({0, 1}), frozenset({2, 3})
    from surftw.hypergraph import contract, merged_label
    T_a = star([2, 3, merged_label(A)])
    T_b = star([0, 1, merged_label(B)])
    T = merge_ptrees(H, A, B, T_a, T_b)
    assert T.labels == frozenset(H.edges)
    assert validate_td(H, as_tree_decomposition(H, T)) == []
    assert ptree_width(H, T) == 1
    with pytest.raises(SurftwError):
        merge_ptrees(H, A, B, T_b, T_a)


def test_connected_bipartition_of_cycle():
    adj = {i: {(i - 1) % 6, (i + 1) % 6} for i in range(6)}
    A, B = connected_bipartition(adj)
    assert len(A) >= 2 and len(B) >= 2 and A | B == set(range(6))


def test_theta_and_bouquet_trees():
    for lam in (theta(), bouquet(), pendant_loop()):
        res = optimal_ptree(lam)
        assert res.width == exact_treewidth(lam.hypergraph)[0]
        assert is_ptree(res.tree, radial(lam))[0]


def test_dual_reading_shares_leaves():
    lam = theta()
    T = optimal_ptree(lam).tree
    T_d, H_d = dual_ptree(T, lam)
    assert T_d.labels == frozenset(H_d.edges)
    assert ptree_width(H_d, T_d) == 2


def test_node_partitions_become_bags():
    lam = random_incidence_embedding(random.Random(5), max_incidences=9)
    T = optimal_ptree(lam).tree
    td = as_tree_decomposition(lam.hypergraph, T)
    for v in T.internal:
        assert td.bags[v] == border(lam.hypergraph, T.node_partition(v))


@given(named_embeddings(max_incidences=9))
@settings(max_examples=150, deadline=None)
def test_synthesis_is_optimal(lam):
    res = optimal_ptree(lam)
    assert res.width == exact_treewidth(lam.hypergraph)[0]
    ok, bad = is_ptree(res.tree, radial(lam))
    assert ok, bad


@given(embeddings(max_incidences=7))
@settings(max_examples=150, deadline=None)
def test_synthesis_on_permutation_maps(lam):
    res = optimal_ptree(lam)
    assert res.width == exact_treewidth(lam.hypergraph)[0]


@given(named_embeddings())
@settings(max_examples=100, deadline=None)
def test_dual_of_dual_tree_width(lam):
    assert exact_treewidth(hyper_dual(hyper_dual(lam)).hypergraph)[0] == \
        exact_treewidth(lam.hypergraph)[0]
