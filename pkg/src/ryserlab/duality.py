"""The two-way translation between r-partite hypergraphs and r-colored multigraphs.

A closed r-colored graph G maps to the hypergraph H whose vertices are the
monochromatic components of G (partitioned into classes by color) and whose
edges are the maximal families of components meeting in a common graph vertex.
Conversely an r-partite hypergraph H maps to the closed multigraph on E(H)
with an edge of color i between hyperedges meeting inside class V_i.
Matchings of H correspond to independent sets, vertex covers to monochromatic
component covers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ColoredMultigraph, alpha, closure, components


class HypergraphError(ValueError):
    pass


class ColoredHypergraph:
    """k-uniform (k=0: non-uniform) hypergraph, optionally r-partite / edge-colored."""

    __slots__ = ("n", "k", "r", "parts", "_edges")

    def __init__(self, n: int, k: int = 0, r: int = 0, parts=None, edges=()):
        self.n = n
        self.k = k
        self.r = r
        norm = []
        for e in edges:
            if (isinstance(e, tuple) and len(e) == 2
                    and (e[0] is None or isinstance(e[0], int))
                    and isinstance(e[1], (tuple, list, set, frozenset))):
                color, vs = e
            else:
                color, vs = None, e
            raw = tuple(vs)
            vs = tuple(sorted(set(raw)))
            if len(vs) != len(raw):
                raise HypergraphError(f"edge {raw} repeats a vertex")
            if not vs:
                raise HypergraphError("empty hyperedge")
            for v in vs:
                if not (0 <= v < n):
                    raise HypergraphError(f"vertex {v} out of range")
            if k and len(vs) != k:
                raise HypergraphError(f"edge {vs} is not {k}-uniform")
            if color is not None and not (1 <= color <= max(r, 1)):
                raise HypergraphError(f"edge color {color} out of range")
            norm.append((color, vs))
        self._edges = tuple(norm)
        if parts is not None:
            parts = tuple(tuple(sorted(p)) for p in parts)
            flat = [v for p in parts for v in p]
            if sorted(flat) != list(range(n)):
                raise HypergraphError("parts must partition the vertex set")
            cls = {}
            for i, p in enumerate(parts):
                for v in p:
                    cls[v] = i
            for _, vs in norm:
                hit = [cls[v] for v in vs]
                if len(hit) != len(set(hit)):
                    raise HypergraphError(f"edge {vs} meets a class twice")
        self.parts = parts

    @classmethod
    def uniform(cls, n, k, colored_edges, r=0):
        return cls(n, k, r, None, list(colored_edges))

    def edges(self):
        return self._edges

    def edge_vertex_sets(self):
        return [vs for _, vs in self._edges]

    def edge_color(self, i: int):
        return self._edges[i][0]

    def __repr__(self):
        return (f"ColoredHypergraph(n={self.n}, k={self.k}, r={self.r}, "
                f"m={len(self._edges)})")


def complete_uniform(n: int, k: int, coloring) -> ColoredHypergraph:
    """K_n^k with coloring(edge tuple) -> color in 1..r (r inferred)."""
    import itertools
    edges = []
    r = 1
    for e in itertools.combinations(range(n), k):
        c = coloring(e)
        r = max(r, c)
        edges.append((c, e))
    return ColoredHypergraph(n, k, r, None, edges)


def graph_to_hypergraph(g: ColoredMultigraph):
    """The dual hypergraph of the closure of g, plus the component index map.

    Component-vertices are the monochromatic components with at least one edge,
    numbered color-major then by smallest contained graph vertex; edges are the
    maximal sets of components sharing a graph vertex.
    """
    cg = closure(g)
    comp_ids = {}
    classes = []
    comps = []
    for c in range(1, cg.r + 1):
        cls = []
        for part in components(cg, c).parts:
            if len(part) < 2:
                continue
            comp_ids[(c, part)] = len(comps)
            cls.append(len(comps))
            comps.append((c, part))
        classes.append(tuple(cls))
    # hyperedge candidate per graph vertex: the components through it
    raw = []
    for v in range(cg.n):
        e = []
        for (c, part), i in comp_ids.items():
            if v in part:
                e.append(i)
        if not e:
            raise HypergraphError(
                f"vertex {v} lies in no nontrivial monochromatic component")
        raw.append(frozenset(e))
    maximal = []
    for e in sorted(set(raw), key=lambda s: (-len(s), sorted(s))):
        if not any(e < f for f in maximal):
            maximal.append(e)
    maximal_sorted = sorted(tuple(sorted(e)) for e in maximal)
    h = ColoredHypergraph(len(comps), 0, cg.r, classes,
                          [(None, e) for e in maximal_sorted])
    return h, comps


def hypergraph_to_graph(h: ColoredHypergraph) -> ColoredMultigraph:
    """One graph vertex per hyperedge; color i joins edges meeting inside class i."""
    if h.parts is None:
        raise HypergraphError("hypergraph_to_graph needs a declared partition")
    r = len(h.parts)
    cls = {}
    for i, p in enumerate(h.parts):
        for v in p:
            cls[v] = i + 1
    sets = h.edge_vertex_sets()
    edges = []
    for i in range(len(sets)):
        si = set(sets[i])
        for j in range(i + 1, len(sets)):
            common = si.intersection(sets[j])
            cols = sorted({cls[v] for v in common})
            if cols:
                edges.append((i, j, cols))
    return ColoredMultigraph.from_edges(len(sets), r, edges)


@dataclass(frozen=True)
class DualityReport:
    ok: bool
    nu: int
    alpha: int
    tau: int
    tc: int
    mismatches: tuple[str, ...]


def check_duality(h: ColoredHypergraph, g: ColoredMultigraph | None = None,
                  budget=None) -> DualityReport:
    """Assert nu(h) = alpha(g) and tau(h) = minimum component cover of g."""
    from .exact import tau_nu, tc_exact

    if g is None:
        g = hypergraph_to_graph(h)
    tau, _, nu, _ = tau_nu(h, budget)
    a, _ = alpha(g)
    tc, _ = tc_exact(g, budget=budget)
    issues = []
    if nu != a:
        issues.append(f"nu={nu} != alpha={a}")
    if tau != tc:
        issues.append(f"tau={tau} != tc={tc}")
    return DualityReport(not issues, nu, a, tau, tc, tuple(issues))
