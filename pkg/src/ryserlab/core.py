"""Edge-colored multigraphs and the primitive computations everything else builds on.

Vertices are dense integers 0..n-1, colors are 1..r.  An edge carries a nonempty
set of colors (multigraph semantics: the closure of a coloring puts several
colors on one vertex pair).  All values are immutable after construction and
every operation here is a pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations


class GraphError(ValueError):
    """Malformed graph data or an operation precondition violation."""


def _norm_pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class ColoredMultigraph:
    """Finite vertex set 0..n-1 with edges carrying nonempty color sets from 1..r."""

    __slots__ = ("n", "r", "_edges", "_adj", "_hash")

    def __init__(self, n: int, r: int, edges: dict[tuple[int, int], frozenset[int]]):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        if r < 0:
            raise GraphError("color count must be nonnegative")
        norm: dict[tuple[int, int], frozenset[int]] = {}
        for (u, v), cols in edges.items():
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            cols = frozenset(cols)
            if not cols:
                raise GraphError(f"edge ({u},{v}) has an empty color set")
            for c in cols:
                if not (1 <= c <= r):
                    raise GraphError(f"color {c} on edge ({u},{v}) out of range for r={r}")
            key = _norm_pair(u, v)
            norm[key] = norm.get(key, frozenset()) | cols
        self.n = n
        self.r = r
        self._edges = norm
        # adjacency per color, built eagerly: adj[c][u] = sorted neighbors
        adj: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(r + 1)]
        for (u, v), cols in norm.items():
            for c in cols:
                adj[c][u].append(v)
                adj[c][v].append(u)
        for c in range(1, r + 1):
            for u in range(n):
                adj[c][u].sort()
        self._adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, r: int, edges) -> "ColoredMultigraph":
        """Build from an iterable of (u, v, color) or (u, v, iterable-of-colors)."""
        acc: dict[tuple[int, int], set[int]] = {}
        for u, v, c in edges:
            cols = {c} if isinstance(c, int) else set(c)
            acc.setdefault(_norm_pair(u, v), set()).update(cols)
        return cls(n, r, {k: frozenset(v) for k, v in acc.items()})

    def edges(self):
        """Sorted list of (u, v, frozenset of colors)."""
        return [(u, v, self._edges[(u, v)]) for (u, v) in sorted(self._edges)]

    def colors_of(self, u: int, v: int) -> frozenset[int]:
        return self._edges.get(_norm_pair(u, v), frozenset())

    def has_color(self, u: int, v: int, c: int) -> bool:
        return c in self._edges.get(_norm_pair(u, v), frozenset())

    def neighbors(self, u: int, c: int) -> list[int]:
        return self._adj[c][u]

    def is_complete(self) -> bool:
        return len(self._edges) == self.n * (self.n - 1) // 2

    def min_color_of(self, u: int, v: int) -> int:
        """Deterministic single-color reduction used by the constructive proofs."""
        cols = self.colors_of(u, v)
        if not cols:
            raise GraphError(f"no edge between {u} and {v}")
        return min(cols)

    def subgraph_colors(self, colors) -> "ColoredMultigraph":
        """The graph keeping only the given colors (color labels unchanged)."""
        colors = frozenset(colors)
        kept = {}
        for pair, cols in self._edges.items():
            inter = cols & colors
            if inter:
                kept[pair] = inter
        return ColoredMultigraph(self.n, self.r, kept)

    def relabel_colors(self, mapping: dict[int, int], new_r: int) -> "ColoredMultigraph":
        kept = {}
        for pair, cols in self._edges.items():
            mapped = frozenset(mapping[c] for c in cols if c in mapping)
            if mapped:
                kept[pair] = mapped
        return ColoredMultigraph(self.n, new_r, kept)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ColoredMultigraph) and self.n == other.n
                and self.r == other.r and self._edges == other._edges)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.r, frozenset(self._edges.items())))
        return self._hash

    def __repr__(self):
        return f"ColoredMultigraph(n={self.n}, r={self.r}, m={len(self._edges)})"


@dataclass(frozen=True)
class ComponentSet:
    """Connected components of one color class; parts partition 0..n-1."""

    color: int
    parts: tuple[tuple[int, ...], ...]

    def part_of(self, v: int) -> tuple[int, ...]:
        for p in self.parts:
            if v in p:
                return p
        raise KeyError(v)


@dataclass(frozen=True)
class CoverCertificate:
    """A claimed cover or partition by monochromatic connected pieces.

    Each piece is (color, vertex tuple) or (color, vertex tuple, edge tuple);
    an explicit edge set claims a connected spanning subgraph (e.g. a tree)
    whose own diameter obeys the declared bound.
    """

    pieces: tuple
    mode: str = "cover"  # "cover" | "partition"
    declared_max_size: int | None = None
    declared_max_diam: int | None = None
    allowed_colors: frozenset[int] | None = None

    def piece_vertices(self, i: int) -> tuple[int, ...]:
        return tuple(self.pieces[i][1])

    def __len__(self):
        return len(self.pieces)


def make_certificate(pieces, mode="cover", max_size=None, max_diam=None,
                     allowed_colors=None) -> CoverCertificate:
    norm = []
    for piece in pieces:
        if len(piece) == 2:
            c, vs = piece
            norm.append((c, tuple(sorted(set(vs)))))
        else:
            c, vs, es = piece
            norm.append((c, tuple(sorted(set(vs))),
                         tuple(sorted(_norm_pair(u, v) for u, v in es))))
    return CoverCertificate(tuple(norm), mode, max_size, max_diam,
                            None if allowed_colors is None else frozenset(allowed_colors))


# ---------------------------------------------------------------------------
# primitive operations


def components(g: ColoredMultigraph, c: int) -> ComponentSet:
    """Connected components of the color-c subgraph; colorless vertices are singletons."""
    if not (1 <= c <= g.r):
        raise GraphError(f"color {c} out of range 1..{g.r}")
    seen = [False] * g.n
    parts = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.neighbors(u, c):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        parts.append(tuple(sorted(comp)))
    parts.sort()
    return ComponentSet(c, tuple(parts))


def closure(g: ColoredMultigraph) -> ColoredMultigraph:
    """Complete every monochromatic component to a clique in its color."""
    acc: dict[tuple[int, int], set[int]] = {}
    for pair, cols in g._edges.items():
        acc.setdefault(pair, set()).update(cols)
    for c in range(1, g.r + 1):
        for part in components(g, c).parts:
            for u, v in combinations(part, 2):
                acc.setdefault((u, v), set()).add(c)
    return ColoredMultigraph(g.n, g.r, {k: frozenset(v) for k, v in acc.items()})


def diameter(g: ColoredMultigraph, vertices, c: int) -> float:
    """Diameter of the color-c subgraph induced on the given vertex set.

    Only edges with both endpoints inside the set count.  Returns math.inf when
    the induced subgraph is disconnected, 0 for a single vertex.
    """
    vs = sorted(set(vertices))
    if not vs:
        raise GraphError("diameter of an empty vertex set")
    inside = set(vs)
    best = 0
    for src in vs:
        dist = {src: 0}
        frontier = [src]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.neighbors(u, c):
                    if w in inside and w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        if len(dist) < len(vs):
            return math.inf
        best = max(best, max(dist.values()))
    return best


def subgraph_diameter(n: int, edges) -> float:
    """Diameter of an explicit edge set (used for tree pieces)."""
    verts = sorted({u for e in edges for u in e})
    if not verts:
        return 0
    adj = {v: [] for v in verts}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    best = 0
    for src in verts:
        dist = {src: 0}
        frontier = [src]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        if len(dist) < len(verts):
            return math.inf
        best = max(best, max(dist.values()))
    return best


def alpha(g: ColoredMultigraph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set of the underlying simple graph.

    Branch and bound on the maximum-degree vertex (ties to the lowest index)
    with a greedy initial bound.  Any color counts as adjacency.
    """
    n = g.n
    adjmask = [0] * n
    for (u, v) in g._edges:
        adjmask[u] |= 1 << v
        adjmask[v] |= 1 << u

    # greedy lower bound: repeatedly take the minimum-degree available vertex
    avail = (1 << n) - 1
    greedy = []
    while avail:
        best_v, best_d = -1, n + 1
        m = avail
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            d = bin(adjmask[v] & avail).count("1")
            if d < best_d:
                best_d, best_v = d, v
        greedy.append(best_v)
        avail &= ~((1 << best_v) | adjmask[best_v])
    best_size = len(greedy)
    best_set = sorted(greedy)

    def bb(avail: int, chosen: list[int]):
        nonlocal best_size, best_set
        cnt = bin(avail).count("1")
        if len(chosen) + cnt <= best_size:
            return
        if avail == 0:
            if len(chosen) > best_size:
                best_size = len(chosen)
                best_set = sorted(chosen)
            return
        # branch on the max-degree available vertex, lowest index on ties
        best_v, best_d = -1, -1
        m = avail
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            d = bin(adjmask[v] & avail).count("1")
            if d > best_d:
                best_d, best_v = d, v
        if best_d == 0:
            # all remaining are independent
            extra = []
            m = avail
            while m:
                b = m & -m
                extra.append(b.bit_length() - 1)
                m ^= b
            if len(chosen) + len(extra) > best_size:
                best_size = len(chosen) + len(extra)
                best_set = sorted(chosen + extra)
            return
        v = best_v
        chosen.append(v)
        bb(avail & ~((1 << v) | adjmask[v]), chosen)
        chosen.pop()
        bb(avail & ~(1 << v), chosen)

    bb((1 << n) - 1, [])
    return best_size, tuple(best_set)


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def verify(g: ColoredMultigraph, cert: CoverCertificate) -> VerifyResult:
    """Check a cover/partition certificate; the first failure is reported."""
    if cert.declared_max_size is not None and len(cert.pieces) > cert.declared_max_size:
        return VerifyResult(False, f"{len(cert.pieces)} pieces exceed declared max "
                                   f"{cert.declared_max_size}")
    covered = set()
    seen_disjoint: set[int] = set()
    for i, piece in enumerate(cert.pieces):
        c, vs = piece[0], piece[1]
        es = piece[2] if len(piece) > 2 else None
        if not vs:
            return VerifyResult(False, f"piece {i} is empty")
        if not (1 <= c <= g.r):
            return VerifyResult(False, f"piece {i} has color {c} out of range")
        if cert.allowed_colors is not None and c not in cert.allowed_colors:
            return VerifyResult(False, f"piece {i} uses disallowed color {c}")
        for v in vs:
            if not (0 <= v < g.n):
                return VerifyResult(False, f"piece {i} contains vertex {v} out of range")
        if cert.mode == "partition":
            overlap = seen_disjoint.intersection(vs)
            if overlap:
                return VerifyResult(False, f"piece {i} overlaps vertex {min(overlap)}")
            seen_disjoint.update(vs)
        if es is not None:
            vset = set(vs)
            for (u, v) in es:
                if u not in vset or v not in vset:
                    return VerifyResult(False, f"piece {i} edge ({u},{v}) leaves its vertex set")
                if not g.has_color(u, v, c):
                    return VerifyResult(False, f"piece {i} edge ({u},{v}) is not color {c}")
            d = subgraph_diameter(g.n, es) if len(vs) > 1 else 0
            touched = {u for e in es for u in e}
            if len(vs) > 1 and touched != vset:
                return VerifyResult(False, f"piece {i} edge set does not span its vertices")
            if d == math.inf:
                return VerifyResult(False, f"piece {i} edge set is disconnected")
        else:
            d = diameter(g, vs, c)
            if d == math.inf:
                return VerifyResult(False, f"piece {i} (color {c}) is not connected")
        if cert.declared_max_diam is not None and d > cert.declared_max_diam:
            return VerifyResult(False, f"piece {i} has diameter {d} > "
                                       f"{cert.declared_max_diam}")
        covered.update(vs)
    for v in range(g.n):
        if v not in covered:
            return VerifyResult(False, f"vertex {v} uncovered")
    return VerifyResult(True)


# small builders used across modules and tests

def complete_graph(n: int, coloring, r: int) -> ColoredMultigraph:
    """K_n with coloring(u, v) giving a color or iterable of colors."""
    edges = []
    for u, v in combinations(range(n), 2):
        edges.append((u, v, coloring(u, v)))
    return ColoredMultigraph.from_edges(n, r, edges)


def monochromatic_complete(n: int, r: int = 1, color: int = 1) -> ColoredMultigraph:
    return complete_graph(n, lambda u, v: color, r)
