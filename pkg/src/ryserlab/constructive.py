"""Executable versions of the constructive cover proofs.

Every routine turns a proof into a deterministic algorithm: each "without loss
of generality" choice becomes "lowest index satisfying the case condition",
and every returned certificate is re-verified before being handed back.  Where
a proof's endgame is a case analysis over a handful of named covers, the
implementation generates the candidates and returns the first that verifies
(an exhausted candidate list is an internal failure and raises with the
witness coloring).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (ColoredMultigraph, CoverCertificate, GraphError, alpha,
                   components, diameter, make_certificate, verify)


# ---------------------------------------------------------------------------
# small helpers


def _reduced(g: ColoredMultigraph):
    """Deterministic single color per edge: the minimum of the color set.

    Returns None on a non-adjacent pair, so callers on incomplete graphs can
    guard with a simple comparison.
    """
    col = {}
    for (u, v), cs in g._edges.items():
        col[(u, v)] = min(cs)
    def f(a, b):
        return col.get((a, b) if a < b else (b, a))
    return f


def _comp_of(g: ColoredMultigraph, c: int, v: int) -> tuple[int, ...]:
    """Vertex set of the color-c component of v."""
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u, c):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return tuple(sorted(seen))


def _star_piece(c, center, leaves):
    vs = [center] + list(leaves)
    es = [(center, w) for w in leaves]
    return (c, vs, es)


def _check(g, pieces, max_size, max_diam=None, allowed_colors=None, mode="cover"):
    cert = make_certificate(pieces, mode=mode, max_size=max_size,
                            max_diam=max_diam, allowed_colors=allowed_colors)
    res = verify(g, cert)
    if not res.ok:
        raise AssertionError(f"constructed cover failed verification: {res.reason}; "
                             f"graph={g!r} edges={g.edges()}")
    return cert


def _ball(g, c, center, radius):
    """Vertices within color-c distance <= radius of center; induced diam <= 2*radius."""
    dist = {center: 0}
    frontier = [center]
    d = 0
    while frontier and d < radius:
        nxt = []
        for u in frontier:
            for w in g.neighbors(u, c):
                if w not in dist:
                    dist[w] = d + 1
                    nxt.append(w)
        frontier = nxt
        d += 1
    return tuple(sorted(dist))


def _cover_search(g, zone, max_pieces, extra_candidates=()):
    """Exact search for <= max_pieces monochromatic diam<=6 pieces covering zone.

    Candidates: radius<=3 balls of every color around every zone vertex, whole
    components of induced diameter <= 6, plus any structured extras.  Returns a
    piece list or None.
    """
    zone = sorted(set(zone))
    zmask_all = 0
    idx = {v: i for i, v in enumerate(zone)}
    for v in zone:
        zmask_all |= 1 << idx[v]
    cands = []
    seen_masks = set()

    def add(piece):
        c, vs = piece[0], tuple(sorted(set(piece[1])))
        if not vs:
            return
        m = 0
        for v in vs:
            if v in idx:
                m |= 1 << idx[v]
        if m == 0 or (c, m) in seen_masks:
            return
        seen_masks.add((c, m))
        cands.append((m, (c, vs)))

    for piece in extra_candidates:
        add(piece)
    for c in range(1, g.r + 1):
        for part in components(g, c).parts:
            if len(part) > 1 and any(v in idx for v in part) \
                    and diameter(g, part, c) <= 6:
                add((c, part))
        for v in zone:
            for rad in (1, 2, 3):
                add((c, _ball(g, c, v, rad)))
    cands.sort(key=lambda t: -bin(t[0]).count("1"))

    def rec(acc, chosen, left):
        if acc == zmask_all:
            return list(chosen)
        if left == 0:
            return None
        rem = zmask_all & ~acc
        v = zone[(rem & -rem).bit_length() - 1]
        for m, piece in cands:
            if m >> idx[v] & 1:
                chosen.append(piece)
                got = rec(acc | m, chosen, left - 1)
                if got is not None:
                    return got
                chosen.pop()
        return None

    return rec(0, [], max_pieces)


# ---------------------------------------------------------------------------
# the 2-colored complete bipartite classifier


@dataclass(frozen=True)
class BipartiteClass:
    """Which case of the 2-coloring classification holds, with its witness data.

    tag P1: data = (double_covered_side, special_for_color_a, special_for_color_b)
    tag P2: data = (X1, X2, Y1, Y2) with [X1,Y1]+[X2,Y2] in color a and the
            cross blocks in color b
    tag P3: data = the color whose class has diameter at most 6 on X+Y
    """

    tag: str
    data: tuple


@dataclass
class _Bip2:
    cls: BipartiteClass
    tree_pieces: list      # <= 2 trees, each of diameter <= 4
    single_piece: tuple | None  # one spanning (color, verts) of diameter <= 6, P3 only


def _classify2(g: ColoredMultigraph, X, Y, ca: int, cb: int) -> _Bip2:
    """Classify the (ca,cb)-coloring of the complete bipartite graph [X, Y].

    Every X-Y pair must carry ca or cb (exclusively: the reduced color is
    used).  Precedence P1 > P2 > P3.
    """
    X = sorted(X)
    Y = sorted(Y)
    if not X or not Y:
        raise GraphError("classify2 needs two nonempty sides")
    col = {}
    for x in X:
        for y in Y:
            cs = g.colors_of(x, y)
            if ca in cs:
                col[(x, y)] = ca
            elif cb in cs:
                col[(x, y)] = cb
            else:
                raise GraphError(f"pair ({x},{y}) carries neither color "
                                 f"{ca} nor {cb}")

    def all_color(v, side_other, c):
        if v in set(X):
            return all(col[(v, y)] == c for y in side_other)
        return all(col[(x, v)] == c for x in side_other)

    # P1: two one-colored vertices on a common side
    for side, other, name in ((X, Y, "X"), (Y, X, "Y")):
        pa = [v for v in side if all_color(v, other, ca)]
        pb = [v for v in side if all_color(v, other, cb)]
        if pa and pb:
            va, vb = pa[0], pb[0]
            dc_side = "Y" if name == "X" else "X"
            cls = BipartiteClass("P1", (dc_side, va, vb))
            # cover: color-ca tree through va and a cb star, both from the
            # lowest vertex of the covered side
            anchor = other[0]
            if name == "X":
                t1_att = [x for x in X if x != va and col[(x, anchor)] == ca]
                t1 = (ca, [va] + list(Y) + t1_att,
                      [(va, y) for y in Y] + [(x, anchor) for x in t1_att])
                rest = [x for x in X if x != va and col[(x, anchor)] == cb]
                t2 = _star_piece(cb, anchor, rest + ([vb] if col[(vb, anchor)] == cb else []))
            else:
                t1_att = [y for y in Y if y != va and col[(anchor, y)] == ca]
                t1 = (ca, [va] + list(X) + t1_att,
                      [(x, va) for x in X] + [(anchor, y) for y in t1_att])
                rest = [y for y in Y if y != va and col[(anchor, y)] == cb]
                t2 = _star_piece(cb, anchor, rest + ([vb] if col[(anchor, vb)] == cb else []))
            return _Bip2(cls, [t1, t2], None)

    # a single one-colored vertex forces its color to span (P3)
    for c, oc in ((ca, cb), (cb, ca)):
        pures = [v for v in X if all_color(v, Y, c)] + \
                [v for v in Y if all_color(v, X, c)]
        if pures:
            v = pures[0]
            own, other = (X, Y) if v in set(X) else (Y, X)
            edges = [(v, w) if v in set(X) else (w, v) for w in other]
            verts = [v] + list(other)
            for u in own:
                if u == v:
                    continue
                t = next(w for w in other if col[(u, w) if u in set(X) else (w, u)] == c)
                edges.append((u, t) if u in set(X) else (t, u))
                verts.append(u)
            piece = (c, verts, [tuple(e) for e in edges])
            return _Bip2(BipartiteClass("P3", (c,)),
                         [piece], (c, sorted(set(X) | set(Y))))

    # adjacency restricted to the bipartite pairs
    both = X + Y

    def neighbors_bip(v, c):
        if v in set(X):
            return [y for y in Y if col[(v, y)] == c]
        return [x for x in X if col[(x, v)] == c]

    def comp_bip(v, c):
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in neighbors_bip(u, c):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    conn = {}
    for c in (ca, cb):
        conn[c] = len(comp_bip(both[0], c)) == len(both)

    if not conn[ca] and not conn[cb]:
        # P2: both classes disconnected
        C = comp_bip(both[0], cb)
        X1 = [x for x in X if x in C]
        X2 = [x for x in X if x not in C]
        Yc = [y for y in Y if y in C]
        Ync = [y for y in Y if y not in C]
        # orient so that [X1,Y1] and [X2,Y2] are the color-ca blocks
        Y1, Y2 = Ync, Yc
        for x in X1:
            for y in Y1:
                assert col[(x, y)] == ca
        cls = BipartiteClass("P2", (tuple(X1), tuple(X2), tuple(Y1), tuple(Y2)))
        trees = []
        for (Xi, Yi) in ((X1, Y1), (X2, Y2)):
            c0 = Xi[0]
            edges = [(c0, y) for y in Yi] + [(x, Yi[0]) for x in Xi[1:]]
            trees.append((ca, list(Xi) + list(Yi), edges))
        return _Bip2(cls, trees, None)

    c = ca if conn[ca] else cb
    oc = cb if c == ca else ca
    # eccentricities in the connected class
    def bfs_layers(v, cc):
        dist = {v: 0}
        frontier = [v]
        d = 0
        while frontier:
            nxt = []
            for u in frontier:
                for w in neighbors_bip(u, cc):
                    if w not in dist:
                        dist[w] = d + 1
                        nxt.append(w)
            frontier = nxt
            d += 1
        return dist

    eccs = {}
    for v in both:
        eccs[v] = max(bfs_layers(v, c).values())
    d = max(eccs.values())
    v0 = min(v for v in both if eccs[v] == d)
    dist = bfs_layers(v0, c)
    layers = [sorted(u for u, dd in dist.items() if dd == i) for i in range(d + 1)]

    if d <= 2:
        edges = []
        for u in layers[1]:
            edges.append((v0, u) if v0 in set(X) else (u, v0))
        for u in (layers[2] if d == 2 else []):
            t = next(w for w in neighbors_bip(u, c) if dist[w] == 1)
            edges.append((u, t) if u in set(X) else (t, u))
        piece = (c, both, edges)
        return _Bip2(BipartiteClass("P3", (c,)), [piece],
                     (c, sorted(both)))

    def pair(a, b):
        return (a, b) if a in set(X) else (b, a)

    if d == 3:
        t1_edges = [pair(v0, u) for u in layers[1]]
        for u in layers[2]:
            t = next(w for w in neighbors_bip(u, c) if dist[w] == 1)
            t1_edges.append(pair(u, t))
        t1 = (c, layers[0] + layers[1] + layers[2], t1_edges)
        t2 = (oc, [v0] + layers[3], [pair(v0, u) for u in layers[3]])
        trees = [t1, t2]
    elif d == 4:
        # two radius-2 trees in the other color
        t1_verts, t1_edges = [v0] + layers[3], [pair(v0, u) for u in layers[3]]
        w0 = layers[4][0]
        t2_verts = [w0] + layers[1]
        t2_edges = [pair(w0, u) for u in layers[1]]
        for u in layers[4][1:]:
            t2_verts.append(u)
            t2_edges.append(pair(u, layers[1][0]))
        for u in layers[2]:
            t3 = [w for w in neighbors_bip(u, oc) if dist[w] == 3]
            if t3:
                t1_verts.append(u)
                t1_edges.append(pair(u, t3[0]))
            else:
                t1a = [w for w in neighbors_bip(u, oc) if dist[w] == 1]
                assert t1a, "every middle vertex sees the other color"
                t2_verts.append(u)
                t2_edges.append(pair(u, t1a[0]))
        trees = [(oc, t1_verts, t1_edges), (oc, t2_verts, t2_edges)]
    else:
        # d >= 5: two double stars in the other color
        z = layers[5][0]
        y1 = layers[1][0]
        w4 = layers[4][0]
        t1_verts, t1_edges = [v0, z], [pair(v0, z)]
        t2_verts, t2_edges = [y1, w4], [pair(w4, y1)]
        for i in range(len(layers)):
            for u in layers[i]:
                if u in (v0, z, y1, w4):
                    continue
                if i >= 3 and i % 2 == 1:
                    t1_verts.append(u)
                    t1_edges.append(pair(v0, u))
                elif i == 2 or (i >= 8 and i % 2 == 0):
                    t1_verts.append(u)
                    t1_edges.append(pair(u, z))
                elif i >= 4 and i % 2 == 0:
                    t2_verts.append(u)
                    t2_edges.append(pair(u, y1))
                elif i == 1:
                    t2_verts.append(u)
                    t2_edges.append(pair(w4, u))
                else:
                    raise AssertionError((i, u))
        trees = [(oc, t1_verts, t1_edges), (oc, t2_verts, t2_edges)]

    if d <= 6:
        single = (c, sorted(both))
    else:
        # the other class spans with radius <= 3 (anchored in layer 3)
        single = (oc, sorted(both))
    return _Bip2(BipartiteClass("P3", (c if d <= 6 else oc,)), trees, single)


def classify_bipartite2(g: ColoredMultigraph, X, Y, colors=(1, 2)):
    """Public classification of a 2-colored complete bipartite graph.

    Returns (BipartiteClass, CoverCertificate of <= 2 trees with diameter <= 4).
    """
    res = _classify2(g, X, Y, colors[0], colors[1])
    cert = _check(g, res.tree_pieces, 2, 4)
    return res.cls, cert


# ---------------------------------------------------------------------------
# complete graphs, r = 2, 3, 4


def cover_complete(g: ColoredMultigraph, r: int) -> CoverCertificate:
    """Diameter-bounded covers of complete graphs for r in {2, 3, 4}."""
    if not g.is_complete():
        raise GraphError("cover_complete needs a complete graph")
    if r == 2:
        return _cover_complete2(g)
    if r == 3:
        return _cover_complete3(g)
    if r == 4:
        return _cover_complete4(g)
    raise GraphError("cover_complete supports r in {2, 3, 4}")


def _cover_complete2(g: ColoredMultigraph) -> CoverCertificate:
    """One spanning tree of diameter <= 4 (hence one subgraph of diameter <= 3)."""
    n = g.n
    if n <= 1:
        return _check(g, [(1, list(range(n)))] if n else [], 1, 4)
    col = _reduced(g)
    x = 0
    a1 = [v for v in range(1, n) if col(x, v) == 1]
    a2 = [v for v in range(1, n) if col(x, v) != 1]
    if not a2:
        return _check(g, [_star_piece(col(x, a1[0]) if a1 else 1, x, a1)], 1, 4)
    if not a1:
        return _check(g, [_star_piece(col(x, a2[0]), x, a2)], 1, 4)
    c1 = col(x, a1[0])
    c2 = col(x, a2[0])
    if c1 == c2:
        return _check(g, [_star_piece(c1, x, a1 + a2)], 1, 4)
    # try the radius-2 tree in color c1
    hang = {}
    stray = None
    for u in a2:
        t = next((w for w in a1 if col(u, w) == c1), None)
        if t is None:
            stray = u
            break
        hang[u] = t
    if stray is None:
        edges = [(x, v) for v in a1] + [(u, t) for u, t in hang.items()]
        return _check(g, [(c1, list(range(n)), edges)], 1, 4)
    # stray sends only c2 to a1: span in color c2 through it
    edges = [(x, v) for v in a2] + [(stray, w) for w in a1]
    return _check(g, [(c2, list(range(n)), edges)], 1, 4)


def _cover_complete3(g: ColoredMultigraph) -> CoverCertificate:
    """Two trees of diameter at most 4 covering a 3-colored complete graph."""
    n = g.n
    if n <= 1:
        return _check(g, [(1, list(range(n)))] if n else [], 2, 4)
    col = _reduced(g)
    x = 0
    A = {i: [v for v in range(1, n) if col(x, v) == i] for i in (1, 2, 3)}

    empty = [i for i in (1, 2, 3) if not A[i]]
    if empty:
        rest = [i for i in (1, 2, 3) if A[i]]
        pieces = [_star_piece(i, x, A[i]) for i in rest[:2]]
        if len(rest) > 2:
            raise AssertionError
        if not pieces:
            pieces = [(1, [x])]
        return _check(g, pieces, 2, 4)

    B = {}
    for i, j in itertools.permutations((1, 2, 3), 2):
        B[(i, j)] = [v for v in A[i] if all(col(v, u) != j for u in A[j])]

    for i, j in itertools.permutations((1, 2, 3), 2):
        if not B[(i, j)]:
            k = next(m for m in (1, 2, 3) if m not in (i, j))
            edges = [(x, u) for u in A[j]]
            verts = [x] + A[j]
            for v in A[i]:
                t = next(u for u in A[j] if col(v, u) == j)
                edges.append((v, t))
                verts.append(v)
            return _check(g, [(j, verts, edges), _star_piece(k, x, A[k])], 2, 4)

    for i, j, k in itertools.permutations((1, 2, 3)):
        extra = [z for z in B[(i, j)] if z not in B[(i, k)]]
        if not extra:
            continue
        z = extra[0]
        u = next(w for w in A[k] if col(z, w) == k)
        verts1 = [x] + A[k] + [z]
        edges1 = [(x, w) for w in A[k]] + [(z, u)]
        for w in B[(j, i)]:
            assert col(w, z) == k, "B_ij x B_ji edges carry the third color"
            verts1.append(w)
            edges1.append((w, z))
        verts2 = [x] + A[i]
        edges2 = [(x, w) for w in A[i]]
        for v in A[j]:
            if v in B[(j, i)]:
                continue
            t = next(w for w in A[i] if col(v, w) == i)
            verts2.append(v)
            edges2.append((v, t))
        return _check(g, [(k, verts1, edges1), (i, verts2, edges2)], 2, 4)

    # B_ij = B_ik =: B_i for all i
    Bi = {i: B[(i, j)] for i, j in (((1, 2)), (2, 1), (3, 1))}
    Bi = {1: B[(1, 2)], 2: B[(2, 1)], 3: B[(3, 1)]}
    for i in (1, 2, 3):
        assert set(B[(i, [j for j in (1, 2, 3) if j != i][0])]) == \
               set(B[(i, [j for j in (1, 2, 3) if j != i][1])])

    unequal = [i for i in (1, 2, 3) if set(A[i]) != set(Bi[i])]
    if unequal:
        i = unequal[0]
        j, k = [m for m in (1, 2, 3) if m != i]
        verts1 = [x] + A[i]
        edges1 = [(x, w) for w in A[i]]
        for v in A[j] + A[k]:
            if v in Bi[j] or v in Bi[k]:
                continue
            t = next(w for w in A[i] if col(v, w) == i)
            verts1.append(v)
            edges1.append((v, t))
        bj, bk = Bi[j], Bi[k]
        assert bj and bk
        c0 = bj[0]
        verts2 = list(bj) + list(bk)
        edges2 = [(c0, w) for w in bk] + [(b, bk[0]) for b in bj[1:]]
        for b in bj:
            for w in bk:
                assert col(b, w) == i
        return _check(g, [(i, verts1, edges1), (i, verts2, edges2)], 2, 4)

    # A_i = B_i for all i: [A_2, A_3] is complete in color 1
    a2, a3 = A[2], A[3]
    c0 = a2[0]
    verts2 = list(a2) + list(a3)
    edges2 = [(c0, w) for w in a3] + [(b, a3[0]) for b in a2[1:]]
    return _check(g, [_star_piece(1, x, A[1]), (1, verts2, edges2)], 2, 4)


def _cover_complete4(g: ColoredMultigraph) -> CoverCertificate:
    """At most three subgraphs of diameter <= 6 covering a 4-colored complete graph."""
    n = g.n
    if n <= 1:
        return _check(g, [(1, list(range(n)))] if n else [], 3, 6)
    col = _reduced(g)
    x = 0
    A = {i: [v for v in range(1, n) if col(x, v) == i] for i in (1, 2, 3, 4)}

    if any(not A[i] for i in (1, 2, 3, 4)):
        pieces = [_star_piece(i, x, A[i]) for i in (1, 2, 3, 4) if A[i]][:3]
        if not pieces:
            pieces = [(1, [x])]
        return _check(g, pieces, 3, 6)

    B = {}
    for i, j in itertools.permutations((1, 2, 3, 4), 2):
        B[(i, j)] = [v for v in A[i] if all(col(v, u) != j for u in A[j])]

    for i, j in itertools.permutations((1, 2, 3, 4), 2):
        if not B[(i, j)]:
            k, l = [m for m in (1, 2, 3, 4) if m not in (i, j)]
            verts = [x] + A[j]
            edges = [(x, u) for u in A[j]]
            for v in A[i]:
                t = next(u for u in A[j] if col(v, u) == j)
                verts.append(v)
                edges.append((v, t))
            return _check(g, [(j, verts, edges), _star_piece(k, x, A[k]),
                              _star_piece(l, x, A[l])], 3, 6)

    # (C1): some triple intersection empty
    for i in (1, 2, 3, 4):
        others = [m for m in (1, 2, 3, 4) if m != i]
        triple = set(B[(i, others[0])]) & set(B[(i, others[1])]) & set(B[(i, others[2])])
        if not triple:
            pieces = []
            for m in others:
                verts = [x] + A[m]
                edges = [(x, u) for u in A[m]]
                for v in A[i]:
                    if v in B[(i, m)]:
                        continue
                    t = next(u for u in A[m] if col(v, u) == m)
                    verts.append(v)
                    edges.append((v, t))
                pieces.append((m, verts, edges))
            return _check(g, pieces, 3, 6)

    # (C2): B_ij minus (B_ik + B_il) nonempty
    for i, j, k, l in itertools.permutations((1, 2, 3, 4)):
        pool = [u for u in B[(i, j)] if u not in B[(i, k)] and u not in B[(i, l)]]
        if not pool:
            continue
        u = pool[0]
        p1v = [x] + A[i]
        p1e = [(x, w) for w in A[i]]
        for v in A[j]:
            if v in B[(j, i)]:
                continue
            t = next(w for w in A[i] if col(v, w) == i)
            p1v.append(v)
            p1e.append((v, t))
        tk = next(w for w in A[k] if col(u, w) == k)
        tl = next(w for w in A[l] if col(u, w) == l)
        p2v, p2e = [x] + A[k] + [u], [(x, w) for w in A[k]] + [(u, tk)]
        p3v, p3e = [x] + A[l] + [u], [(x, w) for w in A[l]] + [(u, tl)]
        for w in B[(j, i)]:
            cw = col(w, u)
            assert cw in (k, l), "B_ij x B_ji edges avoid colors i and j"
            if cw == k:
                p2v.append(w)
                p2e.append((w, u))
            else:
                p3v.append(w)
                p3e.append((w, u))
        return _check(g, [(i, p1v, p1e), (k, p2v, p2e), (l, p3v, p3e)], 3, 6)

    # (C3): B_ik minus B_ij and B_ki minus B_kl both nonempty
    for i, j, k, l in itertools.permutations((1, 2, 3, 4)):
        pi = [u for u in B[(i, k)] if u not in B[(i, j)]]
        pk = [u for u in B[(k, i)] if u not in B[(k, l)]]
        if not pi or not pk:
            continue
        ui, uk = pi[0], pk[0]
        cuv = col(ui, uk)
        assert cuv in (j, l)
        if cuv == l:
            i, j, k, l = k, l, i, j
            ui, uk = uk, ui
        # now the ui-uk edge has color j
        p1v = [x] + A[k]
        p1e = [(x, w) for w in A[k]]
        for v in A[i]:
            if v in B[(i, k)]:
                continue
            t = next(w for w in A[k] if col(v, w) == k)
            p1v.append(v)
            p1e.append((v, t))
        tj = next(w for w in A[j] if col(ui, w) == j)
        tl = next(w for w in A[l] if col(uk, w) == l)
        p2v = [x] + A[j] + [ui, uk]
        p2e = [(x, w) for w in A[j]] + [(ui, tj), (ui, uk)]
        p3v = [x] + A[l] + [uk]
        p3e = [(x, w) for w in A[l]] + [(uk, tl)]
        for w in B[(i, k)]:
            cw = col(w, uk)
            assert cw in (j, l)
            if cw == j:
                p2v.append(w)
                p2e.append((w, uk))
            else:
                p3v.append(w)
                p3e.append((w, uk))
        return _check(g, [(k, p1v, p1e), (j, p2v, p2e), (l, p3v, p3e)], 3, 6)

    # final case: B_ij = B_ik, B_jk+B_jl in B_ji, B_kj+B_kl in B_ki
    chosen = None
    for i, j, k, l in itertools.permutations((1, 2, 3, 4)):
        if set(B[(i, j)]) != set(B[(i, k)]):
            continue
        if not set(B[(j, k)]) | set(B[(j, l)]) <= set(B[(j, i)]):
            continue
        if not set(B[(k, j)]) | set(B[(k, l)]) <= set(B[(k, i)]):
            continue
        if not set(B[(i, l)]) <= set(B[(i, j)]):
            continue
        chosen = (i, j, k, l)
        break
    assert chosen is not None, f"claim structure missing: {g.edges()}"
    i, j, k, l = chosen
    Bij, Bji, Bki = B[(i, j)], B[(j, i)], B[(k, i)]
    p1v = [x] + A[l]
    p1e = [(x, w) for w in A[l]]
    for v, home, bad in [(v, m, bb) for m, bb in ((i, Bij), (j, Bji), (k, Bki))
                         for v in A[m] if v not in bb]:
        t = next(w for w in A[l] if col(v, w) == l)
        p1v.append(v)
        p1e.append((v, t))
    h1 = (l, p1v, p1e)
    zone = list(Bij) + list(Bji) + list(Bki)
    extras = _r4_zone_candidates(g, col, x, i, j, k, l, Bij, Bji, Bki)
    got = _cover_search(g, zone, 2, extras)
    assert got is not None, f"r=4 endgame found no 2-cover of the B-zone: {g.edges()}"
    return _check(g, [h1] + got, 3, 6)


def _r4_zone_candidates(g, col, x, i, j, k, l, Bij, Bji, Bki):
    """Structured pieces for the final-case zone cover, from the proof's branches."""
    out = [(j, [x] + list(Bji)), (k, [x] + list(Bki)), (i, [x] + list(Bij))]
    # color-l structures inside the zone
    zone = set(Bij) | set(Bji) | set(Bki)
    # specials: vertices of one B-side whose edges to the facing side are one-colored
    for side, facing, cc in ((Bij, Bji, (k, l)), (Bji, Bij, (k, l)),
                             (Bij, Bki, (j, l)), (Bki, Bij, (j, l))):
        for c in cc:
            for v in side:
                if facing and all(col(v, w) == c for w in facing):
                    out.append((c, [v] + list(facing)))
    # merged color-l component pieces through B12
    for b in Bij:
        out.append((l, _ball(g, l, b, 3)))
    for v in list(Bji)[:4] + list(Bki)[:4]:
        out.append((l, _ball(g, l, v, 3)))
    # one-sided leftovers: vertices of Bji/Bki attach to Bij in a single color
    for c in (j, k, l, i):
        for b in list(Bij)[:4]:
            att = [v for v in zone if v != b and col(v, b) == c]
            out.append((c, [b] + att))
    return out


# ---------------------------------------------------------------------------
# alpha = 2, two colors


def cover_alpha2(g: ColoredMultigraph) -> CoverCertificate:
    """Two monochromatic subgraphs of diameter <= 6 covering a 2-colored graph
    with independence number exactly 2."""
    a, wit = alpha(g)
    if a != 2:
        raise GraphError(f"cover_alpha2 needs alpha = 2, got {a}")
    col = _reduced(g)
    n = g.n
    # lexicographically first independent pair
    xy = None
    for u in range(n):
        for v in range(u + 1, n):
            if not g.colors_of(u, v):
                xy = (u, v)
                break
        if xy:
            break
    assert xy is not None
    x, y = xy

    def N(v):
        return {w for w in range(n)
                if w != v and g.colors_of(v, w)}

    Nx, Ny = N(x), N(y)
    Ax = sorted(Nx - Ny)
    Ay = sorted(Ny - Nx)
    Amid = sorted(Nx & Ny)
    Aij = {(i, j): [v for v in Amid if col(x, v) == i and col(y, v) == j]
           for i in (1, 2) for j in (1, 2)}

    def blob_diams(side, anchor):
        vs = side + [anchor]
        return {c: diameter(g, vs, c) if len(vs) > 1 else 0 for c in (1, 2)}

    dx = blob_diams(Ax, x)
    dy = blob_diams(Ay, y)
    assert min(dx.values()) <= 3 and min(dy.values()) <= 3, "folklore bound"

    pieces = _alpha2_cases(g, col, x, y, Ax, Ay, Aij, dx, dy)
    if pieces is None:
        zone = list(range(n))
        pieces = _cover_search(g, zone, 2)
    assert pieces is not None, f"alpha2 cover not found: {g.edges()}"
    return _check(g, pieces, 2, 6)


def _alpha2_cases(g, col, x, y, Ax, Ay, Aij, dx, dy):
    def swap_colors(d):
        return {1: d[2], 2: d[1]}

    # Case 1: some side has diameter exactly 3 in both colors
    for (sx, sy, ax, ay, aij, ddx, ddy, flipped) in (
            (x, y, Ax, Ay, Aij, dx, dy, False),
            (y, x, Ay, Ax, {(i, j): Aij[(j, i)] for i in (1, 2) for j in (1, 2)},
             dy, dx, True)):
        if min(ddx.values()) == 3:
            # color 1 below means: a color with diameter <= 3 on the other blob
            c1 = 1 if ddy[1] <= 3 else 2
            c2 = 3 - c1
            a11 = aij[(c1, c1)]
            a22 = aij[(c2, c2)]
            a12 = aij[(c1, c2)]
            a21 = aij[(c2, c1)]
            if a11:
                h1 = (c1, [sx] + a11 + a12 + a21 + [sy] + ay)
                h2 = (c2, ax + [sx] + a22)
                return [h1, h2]
            if a22:
                h1 = (c2, ax + [sx] + a11 + a12 + a21 + a22 + [sy])
                h2 = (c1, ay + [sy])
                return [h1, h2]
            h1 = (c1, ax + [sx] + a12)
            h2 = (c1, ay + [sy] + a21)
            return [h1, h2]

    # Case 2: both blobs have a color of diameter <= 2
    cx = 1 if dx[1] <= 2 else 2
    cy = 1 if dy[1] <= 2 else 2
    if cx == cy:
        return _alpha2_case22(g, col, x, y, Ax, Ay, Aij, cx)
    return _alpha2_case21(g, col, x, y, Ax, Ay, Aij, cx, cy)


def _alpha2_case21(g, col, x, y, Ax, Ay, Aij, c1, c2):
    """diam(G_c1 on Ax+x) <= 2 and diam(G_c2 on Ay+y) <= 2, c1 != c2."""
    a11 = Aij[(c1, c1)]
    a22 = Aij[(c2, c2)]
    a12 = Aij[(c1, c2)]
    a21 = Aij[(c2, c1)]
    if a11:
        h1 = (c1, Ax + [x, y] + a11 + a12 + a21)
        h2 = (c2, Ay + [y] + a22)
        return [h1, h2]
    if a22:
        # mirror of the a11 branch under (x<->y, c1<->c2)
        h1 = (c2, Ay + [y, x] + a22 + a21 + a12)
        h2 = (c1, Ax + [x] + a11)
        return [h1, h2]
    # a11 = a22 = empty
    if not a21:
        h1 = (c1, Ax + [x] + a12)
        h2 = (c2, Ay + [y])
        return [h1, h2]
    edge1 = next(((a, b) for a in Ax for b in a21 if col(a, b) == c1), None)
    if edge1 is not None:
        h1 = (c1, [x, y] + Ax + a21)
        h2 = (c2, [y] + a12 + Ay)
        return [h1, h2]
    edge2 = next(((a, b) for a in Ay for b in a21 if col(a, b) == c2), None)
    if edge2 is not None:
        h1 = (c2, [y, x] + Ay + a21)
        h2 = (c1, [x] + a12 + Ax)
        return [h1, h2]
    # every Ax,a21-edge is c2; every Ay,a21-edge is c1 (missing pairs allowed)
    z1 = [v for v in Ax if not any(g.colors_of(v, b) for b in a21)]
    z2 = [v for v in Ay if not any(g.colors_of(v, b) for b in a21)]
    if not z1:
        h1 = (c2, [x] + Ax + a21)
        h2 = (c2, [y] + Ay + a12)
        return [h1, h2]
    if not z2:
        h1 = (c1, [y] + Ay + a21)
        h2 = (c1, [x] + Ax + a12)
        return [h1, h2]
    dz = {c: diameter(g, z1 + z2, c) if len(z1 + z2) > 1 else 0 for c in (1, 2)}
    assert min(dz.values()) <= 3, "Z1 x Z2 is complete so folklore applies"
    if dz[c1] <= 3:
        h1 = (c1, [x] + Ax + a12 + z2)
        h2 = (c1, [y] + a21 + [v for v in Ay if v not in z2])
        return [h1, h2]
    h1 = (c2, [y] + Ay + a12 + z1)
    h2 = (c2, [x] + a21 + [v for v in Ax if v not in z1])
    return [h1, h2]


def _alpha2_case22(g, col, x, y, Ax, Ay, Aij, c1):
    """Both blobs have diameter <= 2 in the same color c1."""
    c2 = 3 - c1
    a11 = Aij[(c1, c1)]
    a22 = Aij[(c2, c2)]
    a12 = Aij[(c1, c2)]
    a21 = Aij[(c2, c1)]
    if a11:
        h1 = (c1, [x, y] + Ax + Ay + a11 + a12 + a21)
        h2 = (c2, [x] + a22)
        return [h1, h2]
    if not a22:
        h1 = (c1, [x] + Ax + a12)
        h2 = (c1, [y] + Ay + a21)
        return [h1, h2]
    # a11 empty, a22 nonempty
    bad = [w for w in a22
           if not any(col(w, u) == c1 for u in Ax + Ay if g.colors_of(w, u))]
    if not bad:
        u1 = [w for w in a22 if any(col(w, u) == c1 for u in Ax if g.colors_of(w, u))]
        u2 = [w for w in a22 if w not in u1]
        h1 = (c1, [x] + Ax + a12 + u1)
        h2 = (c1, [y] + Ay + a21 + u2)
        return [h1, h2]
    w = bad[0]
    Z = [v for v in Ax + Ay if not g.colors_of(w, v)]
    pieces = []
    if Z:
        dz = {c: diameter(g, Z, c) if len(Z) > 1 else 0 for c in (1, 2)}
        assert min(dz.values()) <= 3, "G[Z] is complete"
        cz = c1 if dz[c1] <= 3 else c2
        pieces.append((cz, Z))
    n2w = [v for v in Ax + Ay if g.colors_of(w, v) and col(w, v) == c2]
    pieces.append((c2, [x, y] + a12 + a21 + a22 + n2w))
    return pieces


# ---------------------------------------------------------------------------
# complete bipartite graphs, three colors


def cover_bipartite3(g: ColoredMultigraph, X, Y) -> CoverCertificate:
    """At most four monochromatic subgraphs of diameter <= 6 covering a
    3-colored complete bipartite graph with sides X and Y."""
    X = sorted(X)
    Y = sorted(Y)
    if not X or not Y:
        raise GraphError("cover_bipartite3 needs two nonempty sides")
    col = _reduced(g)
    sides = (set(X), set(Y))

    def bip_comp(v, c):
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            us = 0 if u in sides[0] else 1
            pool = X if us == 1 else Y
            for w in pool:
                if w not in seen and col(*((u, w) if u < w else (w, u))) == c:
                    seen.add(w)
                    stack.append(w)
        return seen

    # all two-sided components, per color, deduped
    comps = []
    seen_keys = set()
    for c in (1, 2, 3):
        for v in X:
            comp = frozenset(bip_comp(v, c))
            key = (c, comp)
            if key not in seen_keys and any(w in sides[1] for w in comp):
                seen_keys.add(key)
                comps.append((c, comp))

    other = {1: (2, 3), 2: (1, 3), 3: (1, 2)}

    def sub_bip_cover(A, B, colors):
        """<= 2 tree pieces of diameter <= 4 covering the 2-colored [A, B]."""
        if not A or not B:
            return None
        return _classify2(g, A, B, colors[0], colors[1]).tree_pieces

    # Step 1: a component missing part of both sides and meeting both
    for c, comp in comps:
        Xin = [v for v in X if v in comp]
        Yin = [v for v in Y if v in comp]
        Xout = [v for v in X if v not in comp]
        Yout = [v for v in Y if v not in comp]
        if Xin and Yin and Xout and Yout:
            p1 = sub_bip_cover(Xout, Yin, other[c])
            p2 = sub_bip_cover(Yout, Xin, other[c])
            return _check(g, p1 + p2, 4, 6)

    # Step 2: every two-sided component contains a full side; pick one with
    # small diameter if possible
    side_comps = []
    for c, comp in comps:
        contains_x = sides[0] <= comp
        contains_y = sides[1] <= comp
        if contains_x or contains_y:
            side_comps.append((c, comp, contains_y))
    assert side_comps, "a component of any edge contains a side here"
    for c, comp, _cy in side_comps:
        d = diameter(g, sorted(comp), c)
        if d <= 5:
            rest_x = [v for v in X if v not in comp]
            rest_y = [v for v in Y if v not in comp]
            pieces = [(c, sorted(comp))]
            if rest_x:
                pieces += sub_bip_cover(rest_x, [v for v in Y if v in comp],
                                        other[c])
            if rest_y:
                pieces += sub_bip_cover(rest_y, [v for v in X if v in comp],
                                        other[c])
            return _check(g, pieces, 4, 6)

    got = _bip3_layered(g, col, X, Y, side_comps, other)
    if got is None:
        got = _cover_search(g, list(X) + list(Y), 4)
    assert got is not None, f"bipartite r=3 cover not found: {g.edges()}"
    return _check(g, got, 4, 6)


def _bip3_layered(g, col, X, Y, side_comps, other):
    """The distance-layer decomposition for a wide side-containing component."""
    c3, comp, contains_y = side_comps[0]
    if not contains_y:
        X, Y = Y, X  # make Y the contained side
    ca, cb = other[c3]
    Xset = set(X)

    def nb(v, c):
        pool = Y if v in Xset else X
        return [w for w in pool
                if col(*((v, w) if v < w else (w, v))) == c]

    # eccentricities inside the component, witnesses on the X side preferred
    members = sorted(comp)

    def layers_from(v):
        dist = {v: 0}
        frontier = [v]
        d = 0
        while frontier:
            nxt = []
            for u in frontier:
                for w in nb(u, c3):
                    if w in comp and w not in dist:
                        dist[w] = d + 1
                        nxt.append(w)
            frontier = nxt
            d += 1
        return dist

    best = None
    for v in members:
        if v not in Xset:
            continue
        dist = layers_from(v)
        ecc = max(dist.values())
        if best is None or ecc > best[0] or (ecc == best[0] and v < best[1]):
            best = (ecc, v, dist)
    if best is None:
        return None
    d, v0, dist = best
    if d < 5:
        return None
    layers = [sorted(u for u, dd in dist.items() if dd == i) for i in range(d + 1)]
    X1 = layers[0] + layers[2]
    X2 = [v for v in X if v not in comp] + \
         [u for i in range(4, d + 1, 2) for u in layers[i]]
    Y2 = layers[1]
    Y0 = layers[3]
    Y1 = [u for i in range(5, d + 1, 2) for u in layers[i]]
    if not Y1 or not X2:
        return None
    far_x2 = [v for v in X2 if v not in set(layers[4])]

    r1 = _classify2(g, X1, Y1, ca, cb)
    r2 = _classify2(g, X2, Y2, ca, cb)
    cstar = (c3, sorted(set(layers[0] + layers[1] + layers[2] + layers[3])))

    # (a) one of the sub-bipartite graphs has a spanning piece of diameter <= 6
    for rr, oo in ((r1, r2), (r2, r1)):
        if rr.single_piece is not None:
            return [rr.single_piece] + oo.tree_pieces + [cstar]

    # (b) P1 with the X side double covered: specials live in Y_i
    for rr, Ai, Bi, oo in ((r1, X1, Y1, r2), (r2, X2, Y2, r1)):
        if rr.cls.tag != "P1":
            continue
        dc, va, vb = rr.cls.data
        if va in set(Bi):  # specials on the Y side cover X_i
            xf = layers[0] if Ai is X1 else far_x2
            if not xf:
                continue
            xstar = xf[0]
            # vertices reached in each color through va/vb/xstar
            ha_verts = [va] + list(Ai)
            hb_verts = [vb] + list(Ai)
            for y in Bi:
                if y in (va, vb):
                    continue
                cy = col(*((y, Ai[0]) if y < Ai[0] else (Ai[0], y)))
                (ha_verts if cy == ca else hb_verts).append(y)
            for w in Y0:
                cw = col(*((w, xstar) if w < xstar else (xstar, w)))
                (ha_verts if cw == ca else hb_verts).append(w)
            return [(ca, ha_verts), (cb, hb_verts)] + oo.tree_pieces
    # (c) [X1, Y1] is P1 with Y1 double covered: specials in X1
    if r1.cls.tag == "P1":
        dc, va, vb = r1.cls.data
        if va in set(X1):
            h1 = (ca, [va] + list(Y1))
            return [h1, cstar] + r2.tree_pieces

    # (d)/(e): [X1,Y1] is P2 or remaining P1 orientations; fall back to the
    # candidate search seeded with the structured pieces
    zone = list(X) + list(Y)
    extras = [cstar]
    for rr in (r1, r2):
        extras.extend((c, vs) for c, vs, *_ in rr.tree_pieces)
        if rr.single_piece:
            extras.append(rr.single_piece)
    y0p = [(ca, [v0] + [w for w in Y0 if col(*((v0, w) if v0 < w else (w, v0))) == ca]),
           (cb, [v0] + [w for w in Y0 if col(*((v0, w) if v0 < w else (w, v0))) == cb])]
    extras.extend(y0p)
    got = _cover_search(g, zone, 4, extras)
    return got


# ---------------------------------------------------------------------------
# complete multipartite graphs


def cover_multipartite(g: ColoredMultigraph, parts, r: int) -> CoverCertificate:
    """tc-style covers of complete multipartite graphs: <= 2 components for
    two colors, <= 3 components for three colors on three parts."""
    parts = [sorted(p) for p in parts]
    flat = sorted(v for p in parts for v in p)
    if flat != list(range(g.n)):
        raise GraphError("parts must partition the vertex set")
    if r == 2:
        return _multipartite2(g, parts)
    if r == 3:
        if len(parts) != 3:
            raise GraphError("the three-color bound needs exactly three parts")
        return _multipartite3(g, parts)
    raise GraphError("cover_multipartite supports r in {2, 3}")


def _spanning_component(g):
    for c in range(1, g.r + 1):
        comp = _comp_of(g, c, 0)
        if len(comp) == g.n:
            return (c, comp)
    return None


def _multipartite2(g, parts):
    sp = _spanning_component(g)
    if sp is not None:
        return _check(g, [sp], 2)
    V1 = parts[0]
    R = sorted(v for p in parts[1:] for v in p)
    res = _classify2(g, V1, R, 1, 2)
    if res.cls.tag == "P1":
        _, va, vb = res.cls.data
        pieces = [(1, _comp_of(g, 1, va)), (2, _comp_of(g, 2, vb))]
    elif res.cls.tag == "P2":
        X1, X2, Y1, Y2 = res.cls.data
        pieces = [(1, _comp_of(g, 1, X1[0])), (1, _comp_of(g, 1, X2[0]))]
    else:
        c = res.cls.data[0]
        pieces = [(c, _comp_of(g, c, V1[0]))]
    dedup = []
    for p in pieces:
        if p not in dedup:
            dedup.append(p)
    return _check(g, dedup, 2)


def _component_cover_search(g, max_pieces):
    """Exact search for <= max_pieces whole monochromatic components covering V."""
    n = g.n
    cands = []
    seen = set()
    for c in range(1, g.r + 1):
        for part in components(g, c).parts:
            m = 0
            for v in part:
                m |= 1 << v
            if (c, m) not in seen:
                seen.add((c, m))
                cands.append((m, (c, part)))
    cands.sort(key=lambda t: -bin(t[0]).count("1"))
    full = (1 << n) - 1

    def rec(acc, chosen, left):
        if acc == full:
            return list(chosen)
        if left == 0:
            return None
        v = ((full & ~acc) & -(full & ~acc)).bit_length() - 1
        for m, piece in cands:
            if m >> v & 1:
                chosen.append(piece)
                got = rec(acc | m, chosen, left - 1)
                if got is not None:
                    return got
                chosen.pop()
        return None

    return rec(0, [], max_pieces)


def _multipartite3(g, parts):
    sp = _spanning_component(g)
    if sp is not None:
        return _check(g, [sp], 3)
    # a component covering a full part leaves a 2-colored bipartite rest
    for c in range(1, 4):
        for comp in components(g, c).parts:
            compset = set(comp)
            for pi, part in enumerate(parts):
                if set(part) <= compset:
                    rest = [v for v in range(g.n) if v not in compset]
                    if not rest:
                        return _check(g, [(c, comp)], 3)
                    oc = [cc for cc in (1, 2, 3) if cc != c]
                    res = _classify2(g, rest, part, oc[0], oc[1])
                    extra = [(pc, _comp_of(g, pc, pvs[0]))
                             for pc, pvs, *_ in res.tree_pieces]
                    dedup = [(c, comp)]
                    for p in extra:
                        if p not in dedup:
                            dedup.append(p)
                    return _check(g, dedup, 3)
    # general case: the proof guarantees a 3-component cover exists
    got = _component_cover_search(g, 3)
    assert got is not None, f"three-part cover missing: {g.edges()}"
    return _check(g, got, 3)


# ---------------------------------------------------------------------------
# restricted covers (two-sided color classes)


def _konig_cover(g, s1, s2):
    """Minimum component cover of the {s1,s2}-colored subgraph via Konig.

    Every vertex lies in one component per color; the bipartite graph on
    components (edges = vertices) has vertex cover = matching, found by
    augmenting paths.
    """
    comps1 = components(g, s1).parts
    comps2 = components(g, s2).parts
    of1 = {}
    for i, p in enumerate(comps1):
        for v in p:
            of1[v] = i
    of2 = {}
    for i, p in enumerate(comps2):
        for v in p:
            of2[v] = i
    adj = [[] for _ in range(len(comps1))]
    for v in range(g.n):
        a, b = of1[v], of2[v]
        if b not in adj[a]:
            adj[a].append(b)
    match1 = [-1] * len(comps1)
    match2 = [-1] * len(comps2)

    def augment(a, seen):
        for b in adj[a]:
            if b in seen:
                continue
            seen.add(b)
            if match2[b] == -1 or augment(match2[b], seen):
                match1[a] = b
                match2[b] = a
                return True
        return False

    for a in range(len(comps1)):
        augment(a, set())
    # Konig: reachable via alternating paths from unmatched left vertices
    reach1 = set(a for a in range(len(comps1)) if match1[a] == -1)
    reach2 = set()
    frontier = list(reach1)
    while frontier:
        nxt = []
        for a in frontier:
            for b in adj[a]:
                if b not in reach2:
                    reach2.add(b)
                    a2 = match2[b]
                    if a2 != -1 and a2 not in reach1:
                        reach1.add(a2)
                        nxt.append(a2)
        frontier = nxt
    cover = [(s1, comps1[a]) for a in range(len(comps1)) if a not in reach1]
    cover += [(s2, comps2[b]) for b in sorted(reach2)]
    return cover


def restricted_cover(g: ColoredMultigraph, r: int, S) -> CoverCertificate:
    """An (r-1)-cover of a closed complete r-colored graph whose pieces are all
    colored inside S or all inside its complement (|S| = 2, r in {3,4,5})."""
    if r not in (3, 4, 5):
        raise GraphError("restricted_cover supports r in {3, 4, 5}")
    S = sorted(S)
    if len(S) != 2 or any(not 1 <= c <= r for c in S):
        raise GraphError("S must be two colors in 1..r")
    if not g.is_complete():
        raise GraphError("restricted_cover needs a complete graph")
    s1, s2 = S
    gS = g.subgraph_colors(S)
    aS, witness = alpha(gS)
    if aS <= r - 1:
        pieces = _konig_cover(g, s1, s2)
        assert len(pieces) <= r - 1, (len(pieces), r - 1)
        return _check(g, pieces, r - 1, None, allowed_colors=S)
    X = sorted(witness)[:r]
    P = [c for c in range(1, r + 1) if c not in S]
    if r == 3:
        c0 = P[0]
        comp = _comp_of(g, c0, X[0])
        assert len(comp) == g.n, "a single component must cover"
        return _check(g, [(c0, comp)], r - 1, None, allowed_colors=P)
    if r == 4:
        return _restricted4(g, X, P)
    return _restricted5(g, X, P)


def _on_x_comps(g, c, X):
    """Global components of color c through X, sorted by X-intersection size."""
    seen = set()
    out = []
    for v in X:
        comp = _comp_of(g, c, v)
        if comp in seen:
            continue
        seen.add(comp)
        out.append(comp)
    out.sort(key=lambda comp: (-len([v for v in X if v in comp]), comp))
    return out


def _restricted4(g, X, P):
    c1, c2 = P
    # a spanning color on X: c1 connected on X, else c2
    span = None
    for c in (c1, c2):
        comp0 = _comp_of(g, c, X[0])
        if all(v in comp0 for v in X):
            span = c
            break
    assert span is not None, "one of two colors always spans a K_4"
    oc = c2 if span == c1 else c1
    pieces = [(span, _comp_of(g, span, X[0]))]
    greedy = [comp for comp in _on_x_comps(g, oc, X)
              if len([v for v in X if v in comp]) >= 2]
    pieces += [(oc, comp) for comp in greedy[:2]]
    return _check(g, pieces, 3, None, allowed_colors=P)


def _restricted5(g, X, P):
    from .signatures import signature_of

    sig = signature_of(g, X, P)
    comps_by_color = {c: _on_x_comps(g, c, X) for c in P}
    tX = {c: [len([v for v in X if v in comp]) for comp in comps_by_color[c]]
          for c in P}

    def pieces_for(cond, roles):
        i, j, k = roles
        if cond == 1:
            ps = [(i, comp) for comp in comps_by_color[i]]
            ps += [(j, comp) for comp in comps_by_color[j]]
            ps += [(k, comp) for comp, sz in zip(comps_by_color[k], tX[k]) if sz >= 3]
        else:
            ps = [(i, comp) for comp in comps_by_color[i]]
            ps += [(j, comp) for comp, sz in zip(comps_by_color[j], tX[j]) if sz >= 2]
            ps += [(k, comp) for comp, sz in zip(comps_by_color[k], tX[k]) if sz >= 2]
        return ps

    for i, j, k in itertools.permutations(P):
        if len(tX[i]) + len(tX[j]) + sum(1 for s in tX[k] if s >= 3) <= 4:
            ps = pieces_for(1, (i, j, k))
            return _check(g, ps, 4, None, allowed_colors=P)
        if len(tX[i]) + sum(1 for s in tX[j] if s >= 2) + \
                sum(1 for s in tX[k] if s >= 2) <= 4:
            ps = pieces_for(2, (i, j, k))
            return _check(g, ps, 4, None, allowed_colors=P)

    shapes = sorted((tuple(sorted(t, reverse=True)) for t in tX.values()),
                    reverse=True)
    assert shapes in ([(3, 2), (3, 2), (3, 2)], [(4, 1), (3, 2), (3, 2)]), \
        f"residual signature expected, got {shapes}"

    candidates = []
    if shapes == [(3, 2), (3, 2), (3, 2)]:
        for A, Bc, Cc in itertools.permutations(P):
            A1, A2 = comps_by_color[A][0], comps_by_color[A][1]
            B1, B2 = comps_by_color[Bc][0], comps_by_color[Bc][1]
            C1, C2 = comps_by_color[Cc][0], comps_by_color[Cc][1]
            candidates.append([(Bc, B1), (Bc, B2), (Cc, C1), (Cc, C2)])
            candidates.append([(A, A1), (A, A2), (Bc, B1), (Cc, C1)])
    else:
        A = next(c for c in P if tuple(sorted(tX[c], reverse=True)) == (4, 1))
        rest = [c for c in P if c != A]
        A1, A2 = comps_by_color[A][0], comps_by_color[A][1]
        for Bc, Cc in itertools.permutations(rest):
            B1, B2 = comps_by_color[Bc][0], comps_by_color[Bc][1]
            C1, C2 = comps_by_color[Cc][0], comps_by_color[Cc][1]
            candidates.append([(A, A1), (A, A2), (Bc, B1), (Bc, B2)])
            candidates.append([(A, A1), (A, A2), (Cc, C1), (Cc, C2)])
        # the deep branch: u, v outside both candidate covers join in color A
        cover1 = set().union(*[set(p) for _, p in candidates[0]])
        cover2 = set().union(*[set(p) for _, p in candidates[1]])
        out1 = [v for v in range(g.n) if v not in cover1]
        out2 = [v for v in range(g.n) if v not in cover2]
        if out1 and out2:
            u, v = out1[0], out2[0]
            if A in g.colors_of(u, v):
                A3 = _comp_of(g, A, u)
                for Bc in rest:
                    B1 = comps_by_color[Bc][0]
                    candidates.append([(A, A1), (A, A2), (A, A3), (Bc, B1)])

    for cand in candidates:
        cert = make_certificate(cand, max_size=4, allowed_colors=frozenset(P))
        if verify(g, cert).ok:
            return cert
    raise AssertionError(f"no residual-case cover verified: {g.edges()}")


# ---------------------------------------------------------------------------
# the 3-coloring classification of complete graphs


@dataclass(frozen=True)
class ThreeColorClass:
    """tag TypeI: data = (color, spanning vertex set);
    tag TypeII: data = (colors (blue, red, green), (W, X, Y, Z));
    tag TypeIII: same data layout, W possibly empty."""

    tag: str
    data: tuple


def classify3(g: ColoredMultigraph) -> ThreeColorClass:
    """The spanning/blow-up/broom trichotomy for <= 3-colored complete graphs."""
    if not g.is_complete():
        raise GraphError("classify3 needs a complete graph")
    if g.r > 3:
        raise GraphError("classify3 needs at most three colors")
    if g.r < 3:
        g = ColoredMultigraph(g.n, 3, dict(g._edges))
    col = _reduced(g)
    n = g.n
    if n == 1:
        return ThreeColorClass("TypeI", (1, (0,)))
    # maximal monochromatic component: largest, ties to lowest color/vertex
    best = None
    for c in (1, 2, 3):
        seen = set()
        for v in range(n):
            if v in seen:
                continue
            red_comp = _mono_comp_reduced(g, col, c, v)
            seen.update(red_comp)
            key = (-len(red_comp), c, red_comp)
            if best is None or key < best:
                best = key
    blue = best[1]
    B = set(best[2])
    if len(B) == n:
        return ThreeColorClass("TypeI", (blue, tuple(sorted(B))))
    U = [v for v in range(n) if v not in B]
    # component of the lowest B-U edge
    eb, eu = min((b, u) for b in sorted(B) for u in U)
    red = col(min(eb, eu), max(eb, eu))
    R = set(_mono_comp_reduced(g, col, red, eb))
    assert red != blue
    green = next(c for c in (1, 2, 3) if c not in (blue, red))
    Bs, Us = B, set(U)
    W = sorted(Bs & R)
    if Us - R:
        Xp = sorted(Bs - R)
        Yp = sorted(Us & R)
        Zp = sorted(Us - R)
        return ThreeColorClass("TypeII", ((blue, red, green),
                                          (tuple(W), tuple(Xp), tuple(Yp), tuple(Zp))))
    # U inside R: the green component swallows U and B-R
    gverts = sorted(Bs - R) + sorted(Us)
    G = set(_mono_comp_reduced(g, col, green, gverts[0]))
    Wc = sorted(Bs & R & G)
    Xp = sorted(Bs - G)
    Yp = sorted(Bs - R)
    Zp = sorted(Us)
    return ThreeColorClass("TypeIII", ((blue, red, green),
                                       (tuple(Wc), tuple(Xp), tuple(Yp), tuple(Zp))))


def _mono_comp_reduced(g, col, c, v):
    """Component of v in the reduced (one color per edge) color-c graph."""
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in range(g.n):
            if w != u and w not in seen and g.colors_of(u, w) \
                    and col(min(u, w), max(u, w)) == c:
                seen.add(w)
                stack.append(w)
    return tuple(sorted(seen))
