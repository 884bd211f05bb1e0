"""Exhaustive, pruned solvers for the cover and partition quantities.

These are the ground truth at desk scale: every constructive algorithm and
every quoted bound is checked against them.  Budgets make giving up explicit:
an exceeded budget yields an "inconclusive" outcome, never a wrong value.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .core import (ColoredMultigraph, alpha, closure, components, diameter,
                   make_certificate, verify)


@dataclass(frozen=True)
class SolveBudget:
    max_nodes: int = 50_000_000
    max_seconds: float = 600.0
    threads: int = 1


class Inconclusive(Exception):
    """Budget exhausted before the search space was settled."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats or {}


class Infeasible(Exception):
    """No cover exists under the given constraints."""

    def __init__(self, message, witness_vertex=None):
        super().__init__(message)
        self.witness_vertex = witness_vertex


# ---------------------------------------------------------------------------
# minimum set cover over bitmask candidates


def _min_set_cover(n: int, candidates, budget: SolveBudget):
    """Exact minimum cover of {0..n-1} by the candidate (mask, payload) list.

    Branch and bound: candidates sorted by decreasing size, greedy upper bound
    first, branching on the least-covered element.
    """
    full = (1 << n) - 1
    cands = [t for _, t in sorted(enumerate(candidates),
                                  key=lambda it: (-bin(it[1][0]).count("1"), it[0]))]
    reach = 0
    for m, _ in cands:
        reach |= m
    if reach != full:
        missing = (full & ~reach)
        v = (missing & -missing).bit_length() - 1
        raise Infeasible(f"vertex {v} is not coverable", witness_vertex=v)

    # greedy upper bound
    acc = 0
    greedy = []
    while acc != full:
        best = max(cands, key=lambda t: bin(t[0] & ~acc).count("1"))
        greedy.append(best)
        acc |= best[0]
    best_size = len(greedy)
    best_sol = [p for _, p in greedy]

    by_elem = [[] for _ in range(n)]
    for m, p in cands:
        mm = m
        while mm:
            b = mm & -mm
            by_elem[b.bit_length() - 1].append((m, p))
            mm ^= b
    maxsize = max(bin(m).count("1") for m, _ in cands)
    deadline = time.monotonic() + budget.max_seconds
    state = {"nodes": 0}

    def rec(acc, chosen):
        nonlocal best_size, best_sol
        state["nodes"] += 1
        if state["nodes"] > budget.max_nodes or \
           (state["nodes"] % 16384 == 0 and time.monotonic() > deadline):
            raise Inconclusive("set cover budget exhausted", dict(state))
        if acc == full:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_sol = list(chosen)
            return
        uncovered = full & ~acc
        uc = bin(uncovered).count("1")
        if len(chosen) + (uc + maxsize - 1) // maxsize >= best_size:
            return
        # least-covered uncovered element
        pick, cnt = -1, 1 << 60
        mm = uncovered
        while mm:
            b = mm & -mm
            e = b.bit_length() - 1
            mm ^= b
            c = len(by_elem[e])
            if c < cnt:
                cnt, pick = c, e
        opts = sorted(by_elem[pick], key=lambda t: -bin(t[0] & uncovered).count("1"))
        for m, p in opts:
            chosen.append(p)
            rec(acc | m, chosen)
            chosen.pop()

    rec(0, [])
    return best_size, best_sol


def _connected_subsets_with_diam(g, c, max_diam, budget):
    """All (mask, vertexlist) of connected color-c subsets with induced diameter <= max_diam."""
    out = {}
    seen_masks = set()
    deadline = time.monotonic() + budget.max_seconds
    for part in components(g, c).parts:
        # grow connected subsets within the component
        base = list(part)
        frontier = [frozenset([v]) for v in base]
        for s in frontier:
            seen_masks.add(s)
        while frontier:
            if time.monotonic() > deadline:
                raise Inconclusive("diameter-piece enumeration budget exhausted")
            nxt = []
            for s in frontier:
                if len(s) == 1 or diameter(g, s, c) <= max_diam:
                    mask = 0
                    for v in s:
                        mask |= 1 << v
                    out[mask] = sorted(s)
                boundary = set()
                for v in s:
                    boundary.update(w for w in g.neighbors(v, c) if w not in s)
                for w in boundary:
                    s2 = s | {w}
                    if s2 not in seen_masks:
                        seen_masks.add(s2)
                        nxt.append(s2)
            frontier = nxt
    return [(m, vs) for m, vs in sorted(out.items())]


def tc_exact(g: ColoredMultigraph, max_diam=None, allowed_colors=None,
             budget: SolveBudget | None = None):
    """Minimum monochromatic cover: (size, CoverCertificate).

    Without max_diam the pieces are whole components of the allowed colors;
    with max_diam they are connected sub-pieces of induced diameter <= max_diam.
    """
    budget = budget or SolveBudget()
    colors = sorted(allowed_colors) if allowed_colors is not None else range(1, g.r + 1)
    if g.n == 0:
        return 0, make_certificate([], max_size=0)
    candidates = []
    if max_diam is None:
        for c in colors:
            for part in components(g, c).parts:
                mask = 0
                for v in part:
                    mask |= 1 << v
                candidates.append((mask, (c, part)))
    else:
        if g.n > 24:
            raise Inconclusive("diameter-constrained exact cover limited to n <= 24")
        for c in colors:
            for mask, vs in _connected_subsets_with_diam(g, c, max_diam, budget):
                candidates.append((mask, (c, tuple(vs))))
    size, pieces = _min_set_cover(g.n, candidates, budget)
    cert = make_certificate(pieces, max_size=size, max_diam=max_diam,
                            allowed_colors=allowed_colors)
    assert verify(g, cert).ok
    return size, cert


def tp_exact(g: ColoredMultigraph, budget: SolveBudget | None = None):
    """Minimum monochromatic partition: (size, CoverCertificate in partition mode).

    Parts are vertex-disjoint connected monochromatic subgraphs, possibly proper
    subgraphs of components.  t=1 and t=2 are decided by direct scans, deeper
    values by piece-growing DFS from the lowest uncovered vertex.
    """
    budget = budget or SolveBudget()
    n = g.n
    if n == 0:
        return 0, make_certificate([], mode="partition", max_size=0)
    full = (1 << n) - 1

    def connected_in(mask, c) -> bool:
        verts = [v for v in range(n) if mask >> v & 1]
        if not verts:
            return False
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u, c):
                if mask >> w & 1 and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def colors_connecting(mask):
        return [c for c in range(1, g.r + 1) if connected_in(mask, c)]

    # t = 1
    for c in range(1, g.r + 1):
        if connected_in(full, c):
            cert = make_certificate([(c, range(n))], mode="partition", max_size=1)
            assert verify(g, cert).ok
            return 1, cert
    # t = 2: scan bipartitions with vertex 0 on the left
    if n <= 22:
        for left in range(0, 1 << (n - 1)):
            lm = (left << 1) | 1
            rm = full & ~lm
            if rm == 0:
                continue
            lc = colors_connecting(lm)
            if not lc:
                continue
            rc = colors_connecting(rm)
            if not rc:
                continue
            cert = make_certificate(
                [(lc[0], [v for v in range(n) if lm >> v & 1]),
                 (rc[0], [v for v in range(n) if rm >> v & 1])],
                mode="partition", max_size=2)
            assert verify(g, cert).ok
            return 2, cert
        start_t = 3
    else:
        start_t = 2

    # iterative deepening DFS over pieces grown from the lowest uncovered vertex
    deadline = time.monotonic() + budget.max_seconds
    state = {"nodes": 0}

    def pieces_from(v, avail_mask):
        """Connected monochromatic subsets containing v inside avail_mask, deduped."""
        seen = set()
        for c in range(1, g.r + 1):
            frontier = [(1 << v, frozenset([v]))]
            local = {frozenset([v])}
            while frontier:
                nxt = []
                for mask, s in frontier:
                    key = (mask, c) if len(s) > 1 else mask
                    if key not in seen:
                        seen.add(key)
                        yield mask, c, tuple(sorted(s))
                    boundary = set()
                    for u in s:
                        boundary.update(w for w in g.neighbors(u, c)
                                        if avail_mask >> w & 1 and w not in s)
                    for w in boundary:
                        s2 = s | {w}
                        if s2 not in local:
                            local.add(s2)
                            nxt.append((mask | (1 << w), s2))
                frontier = nxt

    def dfs(avail, t_left, acc):
        state["nodes"] += 1
        if state["nodes"] > budget.max_nodes or \
           (state["nodes"] % 8192 == 0 and time.monotonic() > deadline):
            raise Inconclusive("partition search budget exhausted", dict(state))
        if avail == 0:
            return list(acc)
        if t_left == 0:
            return None
        if t_left == 1:
            cs = colors_connecting(avail)
            if cs:
                return list(acc) + [(cs[0], tuple(v for v in range(n)
                                                  if avail >> v & 1))]
            return None
        v = (avail & -avail).bit_length() - 1
        for mask, c, vs in pieces_from(v, avail):
            acc.append((c, vs))
            got = dfs(avail & ~mask, t_left - 1, acc)
            if got is not None:
                return got
            acc.pop()
        return None

    for t in range(start_t, n + 1):
        got = dfs(full, t, [])
        if got is not None:
            cert = make_certificate(got, mode="partition", max_size=t)
            assert verify(g, cert).ok
            return t, cert
    raise AssertionError("singleton pieces always partition")


def mc_graph(g: ColoredMultigraph):
    """Largest monochromatic component: (size, color, vertex tuple)."""
    best = None
    for c in range(1, g.r + 1):
        for part in components(g, c).parts:
            key = (-len(part), c, part)
            if best is None or key < best:
                best = key
    size, c, part = -best[0], best[1], best[2]
    return size, c, part


# ---------------------------------------------------------------------------
# hypergraph tau / nu


def tau_nu(h, budget: SolveBudget | None = None):
    """Exact matching and vertex cover numbers with witnesses: (tau, cover, nu, matching)."""
    budget = budget or SolveBudget()
    edges = [frozenset(e) for e in h.edge_vertex_sets()]
    n = h.n

    # nu: maximum set of pairwise disjoint edges, branch and bound
    best_matching = []

    def bb_nu(idx, used, cur):
        nonlocal best_matching
        if len(cur) > len(best_matching):
            best_matching = list(cur)
        if idx == len(edges):
            return
        if len(cur) + (len(edges) - idx) <= len(best_matching):
            return
        for i in range(idx, len(edges)):
            e = edges[i]
            if not (used & e):
                cur.append(i)
                bb_nu(i + 1, used | e, cur)
                cur.pop()

    bb_nu(0, frozenset(), [])
    nu = len(best_matching)

    # tau: minimum hitting set via set cover on the edge universe
    if not edges:
        return 0, (), 0, ()
    m = len(edges)
    covers_by_vertex = []
    for v in range(n):
        mask = 0
        for i, e in enumerate(edges):
            if v in e:
                mask |= 1 << i
        if mask:
            covers_by_vertex.append((mask, v))
    tau, chosen = _min_set_cover(m, covers_by_vertex, budget)
    assert tau >= nu
    return tau, tuple(sorted(chosen)), nu, tuple(best_matching)


def tc_cl_exact(h, c: int, ell: int, budget: SolveBudget | None = None):
    """Minimum cover of all c-sets by monochromatic (c,ell)-components."""
    from .hypercover import cl_components

    budget = budget or SolveBudget()
    comps = cl_components(h, c, ell)
    csets = list(itertools.combinations(range(h.n), c))
    idx = {s: i for i, s in enumerate(csets)}
    candidates = []
    for comp in comps:
        mask = 0
        for s in comp.shadow:
            mask |= 1 << idx[s]
        candidates.append((mask, comp))
    size, chosen = _min_set_cover(len(csets), candidates, budget)
    return size, chosen


# ---------------------------------------------------------------------------
# counterexample hunt


def _canonical_coloring(n: int, r: int, colv, pair_index, perms, color_perms) -> bool:
    """Is this edge-color vector lexicographically minimal in its orbit?"""
    for vp in perms:
        for cp in color_perms:
            smaller = False
            for k, (u, v) in enumerate(pair_index):
                a, b = vp[u], vp[v]
                if a > b:
                    a, b = b, a
                mapped = cp[colv[(a * (2 * n - a - 1)) // 2 + (b - a - 1)]]
                if mapped < colv[k]:
                    smaller = True
                    break
                if mapped > colv[k]:
                    break
            if smaller:
                return False
    return True


def _eval_bound(bound, r, a):
    if isinstance(bound, int):
        return bound
    expr = str(bound).lower()
    if expr == "alpha":
        return a
    if expr == "2alpha":
        return 2 * a
    if expr == "ryser":
        return (r - 1) * a
    raise ValueError(f"unknown bound expression {bound!r}")


def hunt(n: int, r: int, bound, use_appendix_filters: bool = False,
         budget: SolveBudget | None = None):
    """Search all r-colorings of K_n (canonical forms) for tc_r > bound.

    bound is an integer or one of "alpha", "2alpha", "ryser", evaluated on each
    closure.  With filters on, colorings violating the necessary properties of
    a minimal counterexample (every color class has > bound components, every
    vertex sees every color, every transversal of components meets in at most
    one vertex) are pruned before the exact solve.  Returns None or a
    counterexample (ColoredMultigraph closure, tc value, stats).
    """
    budget = budget or SolveBudget()
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    color_perms = []
    for cp in itertools.permutations(range(1, r + 1)):
        d = {i + 1: cp[i] for i in range(r)}
        color_perms.append(d)
    deadline = time.monotonic() + budget.max_seconds
    stats = {"enumerated": 0, "canonical": 0, "filtered": 0, "solved": 0}

    for colv in itertools.product(range(1, r + 1), repeat=len(pairs)):
        stats["enumerated"] += 1
        if stats["enumerated"] % 4096 == 0 and time.monotonic() > deadline:
            raise Inconclusive("hunt budget exhausted", stats)
        if not _canonical_coloring(n, r, colv, pairs, perms, color_perms):
            continue
        stats["canonical"] += 1
        g = ColoredMultigraph.from_edges(
            n, r, [(u, v, colv[k]) for k, (u, v) in enumerate(pairs)])
        cg = closure(g)
        a, _ = alpha(cg)
        b = _eval_bound(bound, r, a)
        if use_appendix_filters and _appendix_filtered(cg, b, stats):
            continue
        stats["solved"] += 1
        t, _cert = tc_exact(cg, budget=budget)
        if t > b:
            return cg, t, stats
    return None


def _appendix_filtered(cg: ColoredMultigraph, bound: int, stats) -> bool:
    comp_sets = [components(cg, c) for c in range(1, cg.r + 1)]
    # (ii) every color class is itself a cover, so it needs more than `bound` parts
    for cs in comp_sets:
        if len(cs.parts) <= bound:
            stats["filtered"] += 1
            return True
    # (iv) every vertex incident with an edge of every color
    for v in range(cg.n):
        for c in range(1, cg.r + 1):
            if not cg.neighbors(v, c):
                stats["filtered"] += 1
                return True
    # (v) every transversal of components (one per color) meets in <= 1 vertex
    vertex_sets = []
    for cs in comp_sets:
        vertex_sets.append([set(p) for p in cs.parts if len(p) > 1])
    for combo in itertools.product(*vertex_sets):
        inter = set.intersection(*combo) if combo else set()
        if len(inter) > 1:
            stats["filtered"] += 1
            return True
    return False
