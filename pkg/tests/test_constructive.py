import itertools
import random

import pytest

from ryserlab import constructive as cv
from ryserlab import exact as ex
from ryserlab.core import (ColoredMultigraph, GraphError, alpha, closure,
                           complete_graph, monochromatic_complete, verify)
from ryserlab.signatures import signature_of


def rand_complete(n, r, rng):
    return complete_graph(n, lambda u, v: rng.randint(1, r), r)


def rand_bip(nx, ny, r, rng):
    edges = [(x, y, rng.randint(1, r))
             for x in range(nx) for y in range(nx, nx + ny)]
    g = ColoredMultigraph.from_edges(nx + ny, r, edges)
    return g, list(range(nx)), list(range(nx, nx + ny))


# ---------------------------------------------------------------- complete


def test_cover_complete2():
    rng = random.Random(0)
    for _ in range(100):
        g = rand_complete(rng.randint(1, 20), 2, rng)
        cert = cv.cover_complete(g, 2)
        assert len(cert.pieces) <= 1 and verify(g, cert).ok
        assert cert.declared_max_diam == 4


def test_cover_complete3_examples():
    mono = monochromatic_complete(5, r=3)
    cert = cv.cover_complete(mono, 3)
    assert len(cert.pieces) == 1

    def seven_cycles(u, v):
        d = (v - u) % 7
        return min(d, 7 - d)

    g7 = complete_graph(7, seven_cycles, 3)
    cert = cv.cover_complete(g7, 3)
    assert len(cert.pieces) <= 2 and verify(g7, cert).ok
    # each color class is a 7-cycle: no 2-cover with diameter <= 2 exists
    size2, _ = ex.tc_exact(g7, max_diam=2)
    assert size2 > 2


def test_cover_complete3_exhaustive_k4():
    pairs = list(itertools.combinations(range(4), 2))
    for colv in itertools.product((1, 2, 3), repeat=6):
        g = ColoredMultigraph.from_edges(
            4, 3, [(u, v, c) for (u, v), c in zip(pairs, colv)])
        cert = cv.cover_complete(g, 3)
        assert len(cert.pieces) <= 2


def test_cover_complete4_exhaustive_k4():
    pairs = list(itertools.combinations(range(4), 2))
    for colv in itertools.product((1, 2, 3, 4), repeat=6):
        g = ColoredMultigraph.from_edges(
            4, 4, [(u, v, c) for (u, v), c in zip(pairs, colv)])
        cert = cv.cover_complete(g, 4)
        assert len(cert.pieces) <= 3


def test_cover_complete_needs_complete():
    g = ColoredMultigraph.from_edges(3, 2, [(0, 1, 1)])
    with pytest.raises(GraphError):
        cv.cover_complete(g, 2)


def test_cover_bound_vs_exact():
    rng = random.Random(1)
    for _ in range(30):
        n = rng.randint(2, 8)
        g = rand_complete(n, 3, rng)
        cert = cv.cover_complete(g, 3)
        tc, _ = ex.tc_exact(g)
        assert tc <= len(cert.pieces) <= 2


# ---------------------------------------------------------------- bipartite


def test_classify_bipartite2_structures():
    # engineered P2
    edges = []
    for x in (0, 1, 2):
        for y in (3, 4, 5, 6):
            c = 1 if ((x <= 1) == (y <= 4)) else 2
            edges.append((x, y, c))
    g = ColoredMultigraph.from_edges(7, 2, edges)
    cls, cert = cv.classify_bipartite2(g, [0, 1, 2], [3, 4, 5, 6])
    assert cls.tag == "P2" and len(cert.pieces) <= 2

    # engineered P1: x0 all color 1, x1 all color 2
    edges = [(0, y, 1) for y in (3, 4, 5)] + [(1, y, 2) for y in (3, 4, 5)]
    edges += [(2, 3, 1), (2, 4, 2), (2, 5, 1)]
    g = ColoredMultigraph.from_edges(6, 2, edges)
    cls, cert = cv.classify_bipartite2(g, [0, 1, 2], [3, 4, 5])
    assert cls.tag == "P1" and cls.data[0] == "Y"


def test_classify_bipartite2_p7_example():
    # red path P_7 against its blue bipartite complement: both colors end up
    # with diameter exactly 3, the classification lands in P3
    red = {(0, 4), (4, 1), (1, 5), (5, 2), (2, 6), (6, 3)}
    edges = [(x, y, 1 if (x, y) in red else 2)
             for x in range(4) for y in range(4, 7)]
    g = ColoredMultigraph.from_edges(7, 2, edges)
    cls, cert = cv.classify_bipartite2(g, list(range(4)), [4, 5, 6])
    assert cls.tag == "P3"
    assert len(cert.pieces) <= 2 and verify(g, cert).ok


def test_classify_bipartite2_random_and_exhaustive():
    rng = random.Random(2)
    for _ in range(200):
        g, X, Y = rand_bip(rng.randint(1, 10), rng.randint(1, 10), 2, rng)
        cls, cert = cv.classify_bipartite2(g, X, Y)
        assert len(cert.pieces) <= 2 and verify(g, cert).ok
    for nx, ny in ((2, 2), (2, 3)):
        for colv in itertools.product((1, 2), repeat=nx * ny):
            edges = []
            i = 0
            for x in range(nx):
                for y in range(nx, nx + ny):
                    edges.append((x, y, colv[i]))
                    i += 1
            g = ColoredMultigraph.from_edges(nx + ny, 2, edges)
            cv.classify_bipartite2(g, list(range(nx)), list(range(nx, nx + ny)))


def test_classification_precedence():
    # a coloring satisfying P1 must return P1 even if a color is connected
    edges = [(0, y, 1) for y in (2, 3)] + [(1, y, 2) for y in (2, 3)]
    g = ColoredMultigraph.from_edges(4, 2, edges)
    cls, _ = cv.classify_bipartite2(g, [0, 1], [2, 3])
    assert cls.tag == "P1"


def test_cover_bipartite3_random():
    rng = random.Random(3)
    for _ in range(150):
        g, X, Y = rand_bip(rng.randint(1, 10), rng.randint(1, 10), 3, rng)
        cert = cv.cover_bipartite3(g, X, Y)
        assert len(cert.pieces) <= 4 and verify(g, cert).ok


def test_cover_bipartite3_monochrome_and_layered():
    g, X, Y = rand_bip(4, 4, 1, random.Random(4))
    g = ColoredMultigraph(g.n, 3, dict(g._edges))
    cert = cv.cover_bipartite3(g, X, Y)
    assert len(cert.pieces) == 1
    # layered: a color-3 path component of diameter >= 6 spanning Y
    X, Y = list(range(8)), list(range(8, 16))
    edges = []
    for i in range(8):
        edges.append((X[i], Y[i], 3))
        if i + 1 < 8:
            edges.append((X[i + 1], Y[i], 3))
    have = {(min(u, v), max(u, v)) for (u, v, c) in edges}
    rng = random.Random(5)
    for x in X:
        for y in Y:
            if (min(x, y), max(x, y)) not in have:
                edges.append((x, y, rng.randint(1, 2)))
    g = ColoredMultigraph.from_edges(16, 3, edges)
    cert = cv.cover_bipartite3(g, X, Y)
    assert len(cert.pieces) <= 4 and verify(g, cert).ok


# ---------------------------------------------------------------- alpha = 2


def rand_alpha2(n, rng):
    side = [rng.randint(0, 1) for _ in range(n)]
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        if not (side[u] != side[v] and rng.random() < 0.5):
            edges.append((u, v, rng.randint(1, 2)))
    if not edges:
        return None
    return ColoredMultigraph.from_edges(n, 2, edges)


def test_cover_alpha2_random():
    rng = random.Random(6)
    done = 0
    while done < 150:
        g = rand_alpha2(rng.randint(3, 14), rng)
        if g is None or alpha(g)[0] != 2:
            continue
        done += 1
        cert = cv.cover_alpha2(g)
        assert len(cert.pieces) <= 2 and verify(g, cert).ok
        assert cert.declared_max_diam == 6


def test_cover_alpha2_cliques_and_guard():
    edges = [(u, v, 1) for u, v in itertools.combinations(range(3), 2)]
    edges += [(u, v, 2) for u, v in itertools.combinations(range(3, 6), 2)]
    g = ColoredMultigraph.from_edges(6, 2, edges)
    cert = cv.cover_alpha2(g)
    assert len(cert.pieces) == 2
    with pytest.raises(GraphError):
        cv.cover_alpha2(monochromatic_complete(4, r=2))


def test_cover_alpha2_case22_isolated_w():
    # engineered: A11 empty, A22 nonempty with a vertex w sending only color 2
    # to A_x and A_y (case 2.2's last branch)
    #   x=0, y=1 nonadjacent; Ax={2}, Ay={3}, A22={4}, w=4
    edges = [(0, 2, 1), (1, 3, 1), (0, 4, 2), (1, 4, 2), (2, 4, 2), (3, 4, 2),
             (2, 3, 1)]
    g = ColoredMultigraph.from_edges(5, 2, edges)
    assert alpha(g)[0] == 2
    cert = cv.cover_alpha2(g)
    assert len(cert.pieces) <= 2 and verify(g, cert).ok


# ---------------------------------------------------------------- multipartite


def rand_multi(parts, r, rng):
    bounds, acc = [], 0
    for s in parts:
        bounds.append((acc, acc + s))
        acc += s
    part_of = [i for i, (a, b) in enumerate(bounds) for _ in range(b - a)]
    edges = [(u, v, rng.randint(1, r))
             for u, v in itertools.combinations(range(acc), 2)
             if part_of[u] != part_of[v]]
    return (ColoredMultigraph.from_edges(acc, r, edges),
            [list(range(a, b)) for a, b in bounds])


def test_cover_multipartite_2():
    rng = random.Random(7)
    for _ in range(150):
        k = rng.randint(2, 5)
        g, parts = rand_multi([rng.randint(1, 5) for _ in range(k)], 2, rng)
        cert = cv.cover_multipartite(g, parts, 2)
        assert len(cert.pieces) <= 2 and verify(g, cert).ok


def test_cover_multipartite_3():
    rng = random.Random(8)
    for _ in range(150):
        g, parts = rand_multi([rng.randint(1, 5) for _ in range(3)], 3, rng)
        cert = cv.cover_multipartite(g, parts, 3)
        assert len(cert.pieces) <= 3 and verify(g, cert).ok


def test_multipartite_star_needs_r():
    from ryserlab.constructions import multipartite_star_example

    g = multipartite_star_example(3, 3)
    cert = cv.cover_multipartite(g, [[0, 1, 2], [3, 4], [5, 6]], 3)
    assert len(cert.pieces) == 3
    assert ex.tc_exact(g)[0] == 3


# ---------------------------------------------------------------- restricted


def test_restricted_cover_random():
    rng = random.Random(9)
    for r in (3, 4, 5):
        for _ in range(60):
            n = rng.randint(2, 16)
            g = closure(rand_complete(n, r, rng))
            S = sorted(rng.sample(range(1, r + 1), 2))
            cert = cv.restricted_cover(g, r, S)
            assert len(cert.pieces) <= r - 1
            cols = {p[0] for p in cert.pieces}
            assert cols <= set(S) or cols <= set(range(1, r + 1)) - set(S)
            assert verify(g, cert).ok


def engineer_residual(case):
    if case == 1:
        comps = {1: [(0, 1, 2), (3, 4)], 2: [(0, 1, 3), (2, 4)],
                 3: [(0, 1, 4), (2, 3)]}
    else:
        comps = {1: [(0, 1, 2, 3), (4,)], 2: [(0, 1, 4), (2, 3)],
                 3: [(2, 3, 4), (0, 1)]}
    edges = []
    for c, blocks in comps.items():
        for b in blocks:
            for u, v in itertools.combinations(b, 2):
                edges.append((u, v, c))
    a1 = comps[1][0]
    for wi, w in enumerate(range(5, 9)):
        edges.append((w, wi, 4))
        edges.append((w, wi + 1, 5))
        for x in range(5):
            if x in (wi, wi + 1):
                continue
            if x in a1:
                edges.append((w, x, 1))
            elif case == 1:
                edges.append((w, x, 2 if x == 3 else 3))
            else:
                edges.append((w, x, 2))
    for w1, w2 in itertools.combinations(range(5, 9), 2):
        edges.append((w1, w2, 1))
    return closure(ColoredMultigraph.from_edges(9, 5, edges))


@pytest.mark.parametrize("case,shape", [
    (1, ((3, 2), (3, 2), (3, 2))),
    (2, ((4, 1), (3, 2), (3, 2))),
])
def test_restricted5_residual_cases(case, shape):
    g = engineer_residual(case)
    sig = signature_of(g, range(5), (1, 2, 3))
    assert sig.shapes() == shape
    cert = cv.restricted_cover(g, 5, [4, 5])
    assert len(cert.pieces) <= 4
    assert {p[0] for p in cert.pieces} <= {1, 2, 3}
    assert verify(g, cert).ok


def test_restricted3_single_component_branch():
    # alpha(G_{2,3}) >= 3 forces one color-1 component to cover everything
    n = 7
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        if u < 3 and v < 3:
            edges.append((u, v, 1))
        elif u < 3:
            edges.append((u, v, [1, 2, 3][(u + v) % 3]))
        else:
            edges.append((u, v, 1))
    g = closure(ColoredMultigraph.from_edges(n, 3, edges))
    gS = g.subgraph_colors({2, 3})
    if alpha(gS)[0] >= 3:
        cert = cv.restricted_cover(g, 3, [2, 3])
        assert len(cert.pieces) == 1 and cert.pieces[0][0] == 1


# ---------------------------------------------------------------- classify3


def check_type(g, res):
    if res.tag == "TypeI":
        c, span = res.data
        assert len(span) == g.n
        from ryserlab.core import diameter
        assert diameter(g, span, c) < float("inf")
        return
    (blue, red, green), parts = res.data
    W, X, Y, Z = [set(p) for p in parts]
    colf = cv._reduced(g)
    assert sorted(W | X | Y | Z) == list(range(g.n))
    if res.tag == "TypeII":
        assert W and X and Y and Z
        blocks = ((W, X, blue), (Y, Z, blue), (W, Y, red), (X, Z, red),
                  (W, Z, green), (X, Y, green))
        for A, B, c in blocks:
            for a in A:
                for b in B:
                    assert colf(min(a, b), max(a, b)) == c
    else:
        assert X and Y and Z
        for A, B, c in ((X, Y, blue), (X, Z, red), (Y, Z, green)):
            for a in A:
                for b in B:
                    assert colf(min(a, b), max(a, b)) == c
        for A, B, banned in ((W, X, green), (W, Y, red), (W, Z, blue)):
            for a in A:
                for b in B:
                    assert colf(min(a, b), max(a, b)) != banned


def test_classify3_examples():
    assert cv.classify3(monochromatic_complete(4, r=3)).tag == "TypeI"
    tri = ColoredMultigraph.from_edges(3, 3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])
    res = cv.classify3(tri)
    assert res.tag == "TypeIII"
    W, X, Y, Z = res.data[1]
    assert W == () and all(len(p) == 1 for p in (X, Y, Z))

    def blowup(u, v):
        pu, pv = u // 2, v // 2
        if pu == pv:
            return 1
        pair = frozenset((pu, pv))
        if pair in (frozenset((0, 1)), frozenset((2, 3))):
            return 1
        if pair in (frozenset((0, 2)), frozenset((1, 3))):
            return 2
        return 3

    res = cv.classify3(complete_graph(8, blowup, 3))
    assert res.tag == "TypeII"
    check_type(complete_graph(8, blowup, 3), res)


def test_classify3_exhaustive_k4():
    pairs = list(itertools.combinations(range(4), 2))
    for colv in itertools.product((1, 2, 3), repeat=6):
        g = ColoredMultigraph.from_edges(
            4, 3, [(u, v, c) for (u, v), c in zip(pairs, colv)])
        check_type(g, cv.classify3(g))


def test_classify3_random():
    rng = random.Random(10)
    for _ in range(100):
        g = rand_complete(rng.randint(2, 12), 3, rng)
        check_type(g, cv.classify3(g))
