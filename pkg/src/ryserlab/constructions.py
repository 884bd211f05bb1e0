"""Finite-geometry generators and the named extremal colorings.

Projective planes come from the 1- and 2-dimensional subspaces of GF(q)^3;
prime-power fields are built by polynomial arithmetic modulo the first
irreducible monic found by trial division.  Each generated design is verified
against its defining incidence counts before being returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import ColoredMultigraph
from .duality import ColoredHypergraph


class UnsupportedOrder(ValueError):
    """q is not a prime power, so no Galois plane of that order is available."""


def _factor_prime_power(q: int):
    if q < 2:
        raise UnsupportedOrder(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p:
            continue
        e = 0
        m = q
        while m % p == 0:
            m //= p
            e += 1
        if m == 1:
            return p, e
        raise UnsupportedOrder(f"{q} is not a prime power")
    raise UnsupportedOrder(f"{q} is not a prime power")


class GF:
    """GF(p^e) with elements encoded as integers 0..q-1 (base-p digit vectors)."""

    def __init__(self, q: int):
        self.q = q
        self.p, self.e = _factor_prime_power(q)
        if self.e == 1:
            self.modpoly = None
        else:
            self.modpoly = self._find_irreducible()

    # polynomials are little-endian digit tuples over GF(p)

    def _enc(self, digits) -> int:
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def _dec(self, x: int):
        out = []
        for _ in range(self.e):
            out.append(x % self.p)
            x //= self.p
        return out

    def _polymul(self, a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % self.p
        return out

    def _polymod(self, a, m):
        a = list(a)
        dm = len(m) - 1
        while len(a) > dm:
            lead = a[-1]
            if lead:
                shift = len(a) - 1 - dm
                for i, c in enumerate(m):
                    a[shift + i] = (a[shift + i] - lead * c) % self.p
            a.pop()
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        return a

    def _find_irreducible(self):
        # lexicographically first irreducible monic of degree e over GF(p)
        for tail in itertools.product(range(self.p), repeat=self.e):
            poly = list(tail) + [1]
            if self._irreducible(poly):
                return poly
        raise AssertionError("an irreducible polynomial always exists")

    def _irreducible(self, poly):
        deg = len(poly) - 1
        for d in range(1, deg // 2 + 1):
            for tail in itertools.product(range(self.p), repeat=d):
                div = list(tail) + [1]
                if self._divides(div, poly):
                    return False
        return True

    def _divides(self, div, poly):
        rem = list(poly)
        dd = len(div) - 1
        while len(rem) - 1 >= dd:
            lead = rem[-1]
            if lead:
                inv = pow(div[-1], -1, self.p)
                f = (lead * inv) % self.p
                shift = len(rem) - 1 - dd
                for i, c in enumerate(div):
                    rem[shift + i] = (rem[shift + i] - f * c) % self.p
            rem.pop()
        return all(c == 0 for c in rem)

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        da, db = self._dec(a), self._dec(b)
        return self._enc([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        return self._enc([(-x) % self.p for x in self._dec(a)])

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        prod = self._polymul(self._dec(a), self._dec(b))
        red = self._polymod(prod, self.modpoly)
        red += [0] * (self.e - len(red))
        return self._enc(red)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise AssertionError


@dataclass(frozen=True)
class IncidenceDesign:
    points: int
    lines: tuple[tuple[int, ...], ...]
    order: int
    kind: str  # projective | truncated | affine

    def parallel_classes(self):
        if self.kind != "affine":
            raise ValueError("parallel classes exist only for affine planes")
        q = self.order
        classes = []
        used = set()
        for i, l in enumerate(self.lines):
            if i in used:
                continue
            cls = [i]
            used.add(i)
            for j in range(i + 1, len(self.lines)):
                if j in used:
                    continue
                if not set(l) & set(self.lines[j]):
                    cls.append(j)
                    used.add(j)
            classes.append(tuple(cls))
        return classes


def galois_plane(q: int, kind: str = "projective") -> IncidenceDesign:
    """The projective/truncated/affine plane of prime-power order q."""
    field = GF(q)
    # canonical 1-dim subspace representatives of GF(q)^3: first nonzero coord = 1
    pts = [(0, 0, 1)]
    pts += [(0, 1, z) for z in range(q)]
    pts += [(1, y, z) for y in range(q) for z in range(q)]
    idx = {p: i for i, p in enumerate(pts)}
    lines = []
    for a, b, c in pts:  # lines are dual points
        line = []
        for p in pts:
            s = field.add(field.add(field.mul(a, p[0]), field.mul(b, p[1])),
                          field.mul(c, p[2]))
            if s == 0:
                line.append(idx[p])
        lines.append(tuple(sorted(line)))
    lines.sort()
    design = IncidenceDesign(len(pts), tuple(lines), q, "projective")
    _check_projective(design)
    if kind == "projective":
        return design
    if kind == "truncated":
        drop = design.points - 1
        keep_lines = [l for l in design.lines if drop not in l]
        # points stay densely numbered: only the top point disappears
        out = IncidenceDesign(design.points - 1, tuple(keep_lines), q, "truncated")
        assert out.points == q * q + q and len(out.lines) == q * q
        return out
    if kind == "affine":
        gone_line = design.lines[0]
        gone = set(gone_line)
        remap = {}
        for p in range(design.points):
            if p not in gone:
                remap[p] = len(remap)
        keep = [tuple(sorted(remap[p] for p in l if p not in gone))
                for l in design.lines[1:]]
        out = IncidenceDesign(len(remap), tuple(sorted(keep)), q, "affine")
        assert out.points == q * q and len(out.lines) == q * q + q
        assert all(len(l) == q for l in out.lines)
        assert len(out.parallel_classes()) == q + 1
        return out
    raise ValueError(f"unknown kind {kind!r}")


def _check_projective(d: IncidenceDesign):
    q = d.order
    assert d.points == q * q + q + 1 == len(d.lines)
    assert all(len(l) == q + 1 for l in d.lines)
    seen = set()
    for l in d.lines:
        for pair in itertools.combinations(l, 2):
            assert pair not in seen, "pair on two lines"
            seen.add(pair)
    assert len(seen) == d.points * (d.points - 1) // 2, "pair off all lines"


def design_to_hypergraph(d: IncidenceDesign) -> ColoredHypergraph:
    k = len(d.lines[0]) if d.lines else 0
    uniform = k if all(len(l) == k for l in d.lines) else 0
    return ColoredHypergraph(d.points, uniform, 0, None,
                             [(None, l) for l in d.lines])


def truncated_plane_hypergraph(q: int) -> ColoredHypergraph:
    """The truncated plane of order q as an (q+1)-partite hypergraph.

    The deleted point's q+1 lines partition the surviving points into the
    classes; every remaining line is a transversal, so the hypergraph is
    intersecting and (q+1)-partite with tau = q.
    """
    proj = galois_plane(q, "projective")
    drop = proj.points - 1
    classes = [tuple(v for v in l if v != drop)
               for l in proj.lines if drop in l]
    keep = [l for l in proj.lines if drop not in l]
    return ColoredHypergraph(proj.points - 1, q + 1, 0, classes,
                             [(None, l) for l in keep])


# ---------------------------------------------------------------------------
# extremal colorings


def affine_tc_coloring(r: int, alpha_copies: int = 1) -> ColoredMultigraph:
    """alpha disjoint copies of the affine-plane coloring of K_{(r-1)^2}.

    Vertices are plane points, the color of an edge is the parallel class of
    the unique line through the pair; tc_r of the result is (r-1)*alpha.
    """
    if alpha_copies < 1:
        raise ValueError("need alpha >= 1")
    q = r - 1
    plane = galois_plane(q, "affine")
    classes = plane.parallel_classes()
    assert len(classes) == r
    line_class = {}
    for ci, cls in enumerate(classes, start=1):
        for li in cls:
            line_class[li] = ci
    pair_color = {}
    for li, line in enumerate(plane.lines):
        for u, v in itertools.combinations(line, 2):
            pair_color[(u, v)] = line_class[li]
    nn = q * q
    edges = []
    for copy in range(alpha_copies):
        off = copy * nn
        for (u, v), c in sorted(pair_color.items()):
            edges.append((off + u, off + v, c))
    return ColoredMultigraph.from_edges(alpha_copies * nn, r, edges)


def half_r_example(r: int, block_size: int | None = None) -> ColoredMultigraph:
    """The coloring on C(r, floor(r/2)+1) blocks forcing many colors in small covers.

    Blocks are indexed by the (floor(r/2)+1)-subsets of [r]; the edge between
    blocks X and Y (or inside a block) gets min(X cap Y).
    """
    if r < 3:
        raise ValueError("need r >= 3")
    if block_size is None:
        block_size = r
    subsets = list(itertools.combinations(range(1, r + 1), r // 2 + 1))
    n = block_size * len(subsets)
    block_of = [i // block_size for i in range(n)]
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        X = set(subsets[block_of[u]])
        Y = set(subsets[block_of[v]])
        edges.append((u, v, min(X & Y)))
    return ColoredMultigraph.from_edges(n, r, edges)


def multipartite_star_example(k: int, r: int, other_part_size: int = 2) -> ColoredMultigraph:
    """Complete k-partite graph with tc_r = r: one part holds star vertices x_1..x_r,
    every edge at x_i gets color i, the rest color 1."""
    if k < 2 or r < 2:
        raise ValueError("need k, r >= 2")
    sizes = [r] + [other_part_size] * (k - 1)
    bounds = []
    acc = 0
    for s in sizes:
        bounds.append((acc, acc + s))
        acc += s
    n = acc
    part_of = [next(i for i, (a, b) in enumerate(bounds) if a <= v < b)
               for v in range(n)]
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        if part_of[u] == part_of[v]:
            continue
        if part_of[u] == 0 and u < r:
            c = u + 1
        elif part_of[v] == 0 and v < r:
            c = v + 1
        else:
            c = 1
        edges.append((u, v, c))
    return ColoredMultigraph.from_edges(n, r, edges)


def alpha2_multipartite_example(k: int = 3) -> ColoredMultigraph:
    """The three-part size-2 coloring with alpha = 2 and tc_3 >= 3.

    Parts {x1,x2}, {y1,y2}, {z1,z2}; blue/red/green triangles and the stated
    completion; extra parts (k > 3) attach by the "every other edge" rules,
    edges between extra parts get color 1.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    blue, red, green = 1, 2, 3
    x1, x2, y1, y2, z1, z2 = range(6)
    color = {}

    def put(u, v, c):
        color[(min(u, v), max(u, v))] = c

    for a, b in itertools.combinations((x1, y1, z1), 2):
        put(a, b, blue)
    for a, b in itertools.combinations((x2, y1, z2), 2):
        put(a, b, red)
    for a, b in itertools.combinations((x2, y2, z1), 2):
        put(a, b, green)
    put(x1, y2, red)
    put(y2, z2, blue)
    put(x1, z2, green)
    # remaining pairs across the three core parts
    core_pairs = [(u, v) for u, v in itertools.combinations(range(6), 2)
                  if u // 2 != v // 2]
    for u, v in core_pairs:
        if (u, v) in color:
            continue
        if u in (y1, z2) or v in (y1, z2):
            put(u, v, red)
        elif u in (x1, z1) or v in (x1, z1):
            put(u, v, blue)
        else:
            put(u, v, green)
    n = 2 * k
    edges = [(u, v, c) for (u, v), c in color.items()]
    for w in range(6, n):
        for v in (y1, z2):
            edges.append((v, w, red))
        for v in (x1, z1):
            edges.append((v, w, blue))
        for v in (x2, y2):
            edges.append((v, w, green))
    for u, v in itertools.combinations(range(6, n), 2):
        if u // 2 != v // 2:
            edges.append((u, v, 1))
    return ColoredMultigraph.from_edges(n, 3, edges)
