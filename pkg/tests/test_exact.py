import itertools
import random

import pytest

from ryserlab import exact as ex
from ryserlab.core import (ColoredMultigraph, alpha, closure, complete_graph,
                           monochromatic_complete, verify)
from ryserlab.duality import ColoredHypergraph


def k4_affine():
    return ColoredMultigraph.from_edges(
        4, 3, [(0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2), (0, 3, 3), (1, 2, 3)])


def rainbow_triangle():
    return ColoredMultigraph.from_edges(3, 3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])


def test_tc_examples():
    assert ex.tc_exact(monochromatic_complete(6))[0] == 1
    assert ex.tc_exact(k4_affine())[0] == 2
    assert ex.tc_exact(rainbow_triangle())[0] == 2


def test_tc_certificates_verify():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randint(1, 9)
        g = complete_graph(n, lambda u, v: rng.randint(1, 3), 3)
        size, cert = ex.tc_exact(g)
        assert verify(g, cert).ok and len(cert.pieces) == size


def test_tc_singletons_cover_under_color_restriction():
    # singleton components keep every color restriction feasible; vertex 0 is
    # covered by its own color-2 singleton
    gg = ColoredMultigraph.from_edges(3, 2, [(0, 1, 1), (1, 2, 2)])
    size, cert = ex.tc_exact(gg, allowed_colors={2})
    assert size == 2 and verify(gg, cert).ok


def test_infeasible_is_explicit():
    # a sparse hypergraph whose colored components cannot reach every c-set
    h = ColoredHypergraph(5, 3, 1, None, [(1, (0, 1, 2))])
    with pytest.raises(ex.Infeasible) as info:
        ex.tc_cl_exact(h, 1, 1)
    assert info.value.witness_vertex is not None


def test_tc_with_diameter():
    # 7-cycle in its own color: whole component has diameter 3, so a diam-2
    # cover needs more pieces
    c7 = ColoredMultigraph.from_edges(7, 1, [(i, (i + 1) % 7, 1) for i in range(7)])
    full, _ = ex.tc_exact(c7)
    assert full == 1
    size, cert = ex.tc_exact(c7, max_diam=2)
    assert size > 1 and verify(c7, cert).ok


def test_trivial_bound_and_tp_relation():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(2, 7)
        r = rng.randint(2, 3)
        g = complete_graph(n, lambda u, v: rng.randint(1, r), r)
        a, _ = alpha(g)
        tc, _ = ex.tc_exact(g)
        tp, cert = ex.tp_exact(g)
        assert tc <= r * a
        assert tp >= tc
        assert verify(g, cert).ok


def test_tp_examples():
    # any 2-colored complete graph has a monochromatic spanning subgraph
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(2, 10)
        g = complete_graph(n, lambda u, v: rng.randint(1, 2), 2)
        assert ex.tp_exact(g)[0] == 1
    assert ex.tp_exact(k4_affine())[0] == 2


def test_tp2_leq_alpha_exhaustive_n5():
    pairs = list(itertools.combinations(range(5), 2))
    for colv in itertools.product((1, 2), repeat=len(pairs)):
        g = ColoredMultigraph.from_edges(
            5, 2, [(u, v, c) for (u, v), c in zip(pairs, colv)])
        tp, _ = ex.tp_exact(g)
        assert tp <= alpha(g)[0]


def test_tau_nu_examples():
    fano_lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6),
                  (2, 3, 6), (2, 4, 5)]
    fano = ColoredHypergraph(7, 3, 0, None, [(None, l) for l in fano_lines])
    tau, cover, nu, matching = ex.tau_nu(fano)
    assert (nu, tau) == (1, 3)
    assert all(any(v in fano_lines[i] for v in cover)
               for i in range(len(fano_lines)))
    m3 = ColoredHypergraph(6, 2, 0, None,
                           [(None, (0, 1)), (None, (2, 3)), (None, (4, 5))])
    tau, _, nu, _ = ex.tau_nu(m3)
    assert tau == nu == 3


def test_tau_nu_ryser_r3():
    # exhaustive-ish family: 3-partite hypergraphs on parts of size 2
    rng = random.Random(3)
    universe = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    for _ in range(200):
        k = rng.randint(1, 6)
        edges = rng.sample(universe, k)
        h = ColoredHypergraph(6, 3, 0, [(0, 1), (2, 3), (4, 5)],
                              [(None, e) for e in edges])
        tau, _, nu, _ = ex.tau_nu(h)
        assert nu <= tau <= 2 * nu


def test_mc_examples():
    assert ex.mc_graph(monochromatic_complete(7)) == (7, 1, tuple(range(7)))
    assert ex.mc_graph(k4_affine())[0] == 2


def test_hunt_small():
    assert ex.hunt(4, 2, "alpha") is None
    got = ex.hunt(4, 3, 1)
    assert got is not None
    cg, t, stats = got
    assert t == 2
    assert ex.hunt(4, 3, "2alpha") is None


def test_hunt_filters_prune():
    # the affine K4 coloring satisfies the necessary properties at bound 1
    # (two components per class >= bound+1, all colors at every vertex), so it
    # is still found, but the filters cut the exact solves from 15 to 1
    got = ex.hunt(4, 3, 1, use_appendix_filters=True)
    assert got is not None and got[1] == 2
    stats = got[2]
    assert stats["filtered"] > 0 and stats["solved"] < stats["canonical"]


def test_budget_is_explicit():
    # three monochromatic islands force the deep partition search, which must
    # give up loudly under a one-node budget
    g = ColoredMultigraph.from_edges(
        6, 3, [(0, 1, 1), (2, 3, 2), (4, 5, 3)])
    with pytest.raises(ex.Inconclusive):
        ex.tp_exact(g, budget=ex.SolveBudget(max_nodes=1))
    size, _ = ex.tp_exact(g)
    assert size == 3
