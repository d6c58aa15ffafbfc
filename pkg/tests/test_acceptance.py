"""The eleven acceptance criteria, one test each.

Each test records a single PASS/FAIL line that is repeated in the pytest
terminal summary.
"""

import itertools
import random

import pytest

from builders import bouquet, single_edge, theta
from surftw.duality import check_duality_bound, enumerate_embeddings, node_inequality, random_embedding
from surftw.embedded import alpha_max, embeddings_isomorphic, hyper_dual, radial
from surftw.extremal import (TodincaSpec, build_gkp, crosses_bramble, dual_decomposition_gkp,
                             grid, grid_path_decomposition, todinca, todinca_decomposition)
from surftw.facewidth import face_width, face_width_at_least
from surftw.hypergraph import Hypergraph, bramble_order, is_bramble, validate_td
from surftw.partition_tree import is_ptree, ptree_width
from surftw.synthesis import optimal_ptree
from surftw.treewidth import exact_treewidth

MAX_DARTS = 12
RANDOM_COUNT = 1000
RANDOM_DARTS = 16
SEED = 7


@pytest.fixture(scope="module")
def small_maps():
    return list(enumerate_embeddings(MAX_DARTS))


@pytest.fixture(scope="module")
def corpus(small_maps):
    rng = random.Random(SEED)
    return small_maps + [random_embedding(rng, RANDOM_DARTS) for _ in range(RANDOM_COUNT)]


def test_criterion_01_duality_involution(criterion, small_maps):
    with criterion(1, "dual of dual and genus on all maps up to 12 darts", 60) as c:
        bad = [lam for lam in small_maps
               if not embeddings_isomorphic(hyper_dual(hyper_dual(lam)), lam)
               or hyper_dual(lam).genus != lam.genus]
        c.note(f"{len(small_maps)} maps, {len(bad)} failures")
        assert len(small_maps) == 3200
        assert not bad


def test_criterion_02_bound_fuzz(criterion, corpus):
    with criterion(2, "dual tree-width bound on enumeration plus random maps", 600) as c:
        reports = [check_duality_bound(lam) for lam in corpus]
        failed = [r for r in reports if r.verdict != "PASS"]
        inexact = [r for r in reports if r.tw_dual is None]
        tight = sum(r.tw_dual == r.bound for r in reports)
        c.note(f"{len(reports)} instances, {len(failed)} violations, {tight} tight")
        assert not failed and not inexact


def test_criterion_03_ptree_synthesis(criterion, corpus):
    with criterion(3, "optimal p-trees and node inequalities", 900) as c:
        problems = 0
        nodes = 0
        for lam in corpus:
            pi = radial(lam)
            res = optimal_ptree(lam, pi)
            ok, _ = is_ptree(res.tree, pi)
            tw = exact_treewidth(lam.hypergraph)[0]
            checks = [node_inequality(lam, pi, res.tree, v, check_tree=False)
                      for v in range(res.tree.n)]
            nodes += len(checks)
            if not ok or ptree_width(lam.hypergraph, res.tree) != tw or not all(x.ok for x in checks):
                problems += 1
        c.note(f"{len(corpus)} instances, {nodes} nodes, {problems} failures")
        assert problems == 0


def test_criterion_04_theta_tight(criterion):
    with criterion(4, "theta graph meets the bound with equality", 30) as c:
        rep = check_duality_bound(theta())
        c.note(f"tw={rep.tw} dual={rep.tw_dual} genus={rep.genus}")
        assert (rep.tw, rep.tw_dual, rep.genus) == (1, 2, 0)
        assert rep.tw_dual == rep.tw + 1 == rep.bound


def test_criterion_05_alpha_term(criterion):
    with criterion(5, "single hyperedge exercises the alpha term", 30) as c:
        lam = single_edge()
        dual = hyper_dual(lam)
        tw = exact_treewidth(lam.hypergraph)[0]
        tw_dual = exact_treewidth(dual.hypergraph)[0]
        back = check_duality_bound(dual)
        c.note(f"tw={tw} dual={tw_dual} alpha={alpha_max(lam)} reverse bound={back.bound}")
        assert tw_dual == 0
        assert tw == 2 == alpha_max(lam) - 1 == back.bound


def test_criterion_06_todinca(criterion):
    with criterion(6, "Todinca graphs: counts, decomposition, bramble order", 300) as c:
        for p in (1, 2):
            spec = TodincaSpec.identity(p)
            G = todinca(spec)
            td = todinca_decomposition(spec)
            elements = crosses_bramble(spec)
            order = bramble_order(G, elements)
            c.note(f"p={p}: width {td.width}, order {order}")
            assert (len(G.vertices), len(G.edges)) == (12 * p * p, 24 * p * p - 9 * p)
            assert validate_td(G, td) == [] and td.width == 3 * p - 1
            assert is_bramble(G, elements) and order == 3 * p
        assert exact_treewidth(todinca(TodincaSpec.identity(1)))[0] == 2


def test_criterion_07_grids(criterion):
    with criterion(7, "grid path decompositions and oracle agreement", 60) as c:
        for n, m in itertools.product(range(1, 11), repeat=2):
            td = grid_path_decomposition(n, m)
            assert validate_td(grid(n, m), td) == []
            # a lone vertex cannot fill a bag of two
            assert td.width == (0 if n == m == 1 else min(n, m))
        for n, m in itertools.product(range(1, 5), repeat=2):
            assert exact_treewidth(grid(n, m))[0] == grid_path_decomposition(n, m).width
        c.note("100 grids; 1x1 has width 0")


def test_criterion_08_family(criterion):
    with criterion(8, "embedded family counts, genus, orientability", 120) as c:
        for k, p in ((1, 1), (1, 2), (2, 1)):
            l = 5 * k * p
            h = build_gkp(k, p).counts()
            assert (h["vertices"], h["edges"], h["faces"]) == \
                (12 * l * l, 24 * l * l - 9 * l, 12 * l * l - 9 * l + 2 - 2 * k)
            assert h["genus"] == 2 * k and h["orientable"]
            l = 3 * k * p
            x = build_gkp(k, p, use_crosscap=True).counts()
            assert (x["vertices"], x["edges"]) == (12 * l * l, 24 * l * l - 9 * l)
            assert x["genus"] == k and not x["orientable"]
        c.note("handle and crosscap variants for (1,1) (1,2) (2,1)")


def test_criterion_09_dual_decomposition(criterion):
    with criterion(9, "dual decomposition of the handle family", 300) as c:
        for k, p in ((1, 1), (1, 2)):
            l = 5 * k * p
            res = dual_decomposition_gkp(k, p)
            c.note(f"(k,p)=({k},{p}): width {res.width} on dual minus outer face, "
                   f"target {3 * l - 2 - 2 * k}")
            assert validate_td(res.dual_minus_out, res.td) == []
            assert res.width <= 3 * l - 2 - 2 * k


def test_criterion_10_face_width(criterion):
    with criterion(10, "face-width queries", 120) as c:
        family = face_width_at_least(build_gkp(1, 1).embedding, 1)
        bouquet_ok = face_width_at_least(bouquet(), 1)
        c.note(f"family at least 1: {family}; torus bouquet at least 1: {bouquet_ok} "
               f"(face-width {face_width(bouquet())})")
        assert family
        assert not bouquet_ok, ("expected the torus bouquet to fail theta = 1, "
                                "but every cellular map has face-width at least 1")


def _connected_sets(adj, n):
    out = []
    for mask in range(1, 1 << n):
        verts = [v for v in range(n) if mask >> v & 1]
        seen = {verts[0]}
        todo = [verts[0]]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if mask >> y & 1 and y not in seen:
                    seen.add(y)
                    todo.append(y)
        if len(seen) == len(verts):
            out.append(frozenset(verts))
    return out


def _touch(adj, X, Y):
    return bool(X & Y) or any(adj[x] & Y for x in X)


def test_criterion_11_bramble_lower_bounds(criterion):
    with criterion(11, "brute-force bramble lower bounds on random graphs", 300) as c:
        rng = random.Random(SEED)
        tight = 0
        for _ in range(50):
            n = rng.randint(2, 10)
            q = rng.uniform(0.2, 0.7)
            edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < q]
            G = Hypergraph.from_graph(edges, range(n))
            tw = exact_treewidth(G)[0]
            adj = {v: set() for v in range(n)}
            for a, b in edges:
                adj[a].add(b)
                adj[b].add(a)
            sets = _connected_sets(adj, n)
            families = [[X for X in sets if 2 * len(X) > n]]
            for _ in range(4):
                order = sorted(sets, key=lambda X: (len(X), rng.random()))
                fam = []
                for X in order:
                    if all(_touch(adj, X, Y) for Y in fam):
                        fam.append(X)
                families.append(fam)
            best = 0
            for fam in families:
                if not fam:
                    continue
                assert is_bramble(G, fam)
                best = max(best, bramble_order(G, fam))
            assert best - 1 <= tw
            tight += best - 1 == tw
        c.note(f"50 graphs, lower bound attained on {tight}")
