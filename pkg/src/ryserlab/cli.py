"""Command-line front end: file formats, subcommands, reproducible runs.

Text formats (whitespace separated, '#' starts a comment):
  graphs       cg <n> <r>          then lines  e <u> <v> <c>   (repeats merge)
  hypergraphs  hg <n> <k> <r>      then lines  part <i> <v...> (optional)
                                   and         e <c> <v...>    (r > 0)
                                   or          e <v...>        (r = 0)
  covers       cover <mode> <count> then lines piece <color> <v...>

Exit codes: 0 success, 1 violation or counterexample found, 2 inconclusive,
3 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import __version__
from .core import ColoredMultigraph, GraphError, make_certificate, verify
from .duality import ColoredHypergraph, HypergraphError


class FormatError(ValueError):
    def __init__(self, line_no, col, message):
        super().__init__(f"line {line_no}, field {col}: {message}")
        self.line = line_no
        self.col = col


def _tokenize(text):
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield ln, line.split()


def parse_graph(text: str) -> ColoredMultigraph:
    rows = list(_tokenize(text))
    if not rows or rows[0][1][0] != "cg":
        raise FormatError(rows[0][0] if rows else 1, 1, "expected 'cg <n> <r>' header")
    ln, header = rows[0]
    if len(header) != 3:
        raise FormatError(ln, 2, "header needs exactly n and r")
    try:
        n, r = int(header[1]), int(header[2])
    except ValueError:
        raise FormatError(ln, 2, "n and r must be integers") from None
    edges = []
    for ln, tok in rows[1:]:
        if tok[0] != "e" or len(tok) != 4:
            raise FormatError(ln, 1, "expected 'e <u> <v> <c>'")
        try:
            u, v, c = int(tok[1]), int(tok[2]), int(tok[3])
        except ValueError:
            raise FormatError(ln, 2, "vertices and colors must be integers") from None
        edges.append((u, v, c))
    try:
        return ColoredMultigraph.from_edges(n, r, edges)
    except GraphError as exc:
        raise FormatError(rows[0][0], 1, str(exc)) from None


def write_graph(g: ColoredMultigraph) -> str:
    out = [f"cg {g.n} {g.r}"]
    for u, v, cols in g.edges():
        for c in sorted(cols):
            out.append(f"e {u} {v} {c}")
    return "\n".join(out) + "\n"


def parse_hypergraph(text: str) -> ColoredHypergraph:
    rows = list(_tokenize(text))
    if not rows or rows[0][1][0] != "hg":
        raise FormatError(rows[0][0] if rows else 1, 1, "expected 'hg <n> <k> <r>' header")
    ln, header = rows[0]
    if len(header) != 4:
        raise FormatError(ln, 2, "header needs n, k and r")
    n, k, r = (int(x) for x in header[1:])
    part_map = {}
    edges = []
    seen_edges = set()
    for ln, tok in rows[1:]:
        if tok[0] == "part":
            idx = int(tok[1])
            part_map[idx] = [int(x) for x in tok[2:]]
        elif tok[0] == "e":
            vals = [int(x) for x in tok[1:]]
            if r > 0:
                c, vs = vals[0], tuple(vals[1:])
            else:
                c, vs = None, tuple(vals)
            key = (c, tuple(sorted(vs)))
            if key in seen_edges:
                raise FormatError(ln, 1, f"duplicate hyperedge {vs}")
            seen_edges.add(key)
            edges.append((c, vs))
        else:
            raise FormatError(ln, 1, f"unknown directive {tok[0]!r}")
    parts = None
    if part_map:
        parts = [part_map[i] for i in sorted(part_map)]
    try:
        return ColoredHypergraph(n, k, r, parts, edges)
    except HypergraphError as exc:
        raise FormatError(rows[0][0], 1, str(exc)) from None


def write_hypergraph(h: ColoredHypergraph) -> str:
    out = [f"hg {h.n} {h.k} {h.r}"]
    if h.parts is not None:
        for i, p in enumerate(h.parts):
            out.append("part " + " ".join(str(v) for v in (i,) + tuple(p)))
    for c, vs in h.edges():
        body = " ".join(str(v) for v in vs)
        out.append(f"e {c} {body}" if c is not None else f"e {body}")
    return "\n".join(out) + "\n"


def parse_cover(text: str):
    rows = list(_tokenize(text))
    if not rows or rows[0][1][0] != "cover":
        raise FormatError(rows[0][0] if rows else 1, 1, "expected 'cover <mode> <count>'")
    ln, header = rows[0]
    mode = header[1]
    count = int(header[2])
    pieces = []
    for ln, tok in rows[1:]:
        if tok[0] != "piece":
            raise FormatError(ln, 1, "expected 'piece <color> <v...>'")
        pieces.append((int(tok[1]), tuple(int(x) for x in tok[2:])))
    if len(pieces) != count:
        raise FormatError(rows[0][0], 3, f"header says {count} pieces, got {len(pieces)}")
    return make_certificate(pieces, mode=mode)


def write_cover(cert) -> str:
    out = [f"cover {cert.mode} {len(cert.pieces)}"]
    for piece in cert.pieces:
        c, vs = piece[0], piece[1]
        out.append("piece " + " ".join(str(x) for x in (c,) + tuple(vs)))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------


def _read(path):
    with open(path) as f:
        return f.read()


def _budget(args):
    from .exact import SolveBudget

    threads = int(os.environ.get("RYSERLAB_THREADS", "1"))
    if getattr(args, "threads", None):
        threads = args.threads
    return SolveBudget(max_seconds=args.budget_seconds, threads=threads)


def _parse_parts(spec_str, n):
    parts = [[int(v) for v in chunk.split(",") if v != ""]
             for chunk in spec_str.split(";") if chunk]
    flat = sorted(v for p in parts for v in p)
    if flat != list(range(n)):
        raise SystemExit("--parts must partition 0..n-1")
    return parts


def _emit(args, text, payload=None):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    if args.manifest:
        manifest = {
            "command": " ".join(sys.argv[1:]),
            "seed": getattr(args, "seed", None),
            "budget_seconds": args.budget_seconds,
            "threads": int(os.environ.get("RYSERLAB_THREADS", "1")),
            "version": __version__,
            "generator": "python-mt19937",
            "digest": hashlib.sha256(text.encode()).hexdigest(),
        }
        if payload:
            manifest.update(payload)
        with open(args.manifest, "w") as f:
            json.dump(manifest, f, indent=2, sort_keys=True)
            f.write("\n")


def cmd_tc(args):
    from .exact import Infeasible, tc_exact

    g = parse_graph(_read(args.input))
    try:
        size, cert = tc_exact(g, max_diam=args.max_diam,
                              allowed_colors=set(args.colors) if args.colors else None,
                              budget=_budget(args))
    except Infeasible as exc:
        _emit(args, f"infeasible: {exc}")
        return 1
    _emit(args, f"tc = {size}\n{write_cover(cert)}", {"tc": size})
    return 0


def cmd_tp(args):
    from .exact import tp_exact

    g = parse_graph(_read(args.input))
    size, cert = tp_exact(g, budget=_budget(args))
    _emit(args, f"tp = {size}\n{write_cover(cert)}", {"tp": size})
    return 0


def cmd_taunu(args):
    from .exact import tau_nu

    h = parse_hypergraph(_read(args.input))
    tau, cover, nu, matching = tau_nu(h, _budget(args))
    _emit(args, f"tau = {tau} cover = {' '.join(map(str, cover))}\n"
                f"nu = {nu} matching-edges = {' '.join(map(str, matching))}")
    return 0


def cmd_mc(args):
    from .exact import mc_graph

    g = parse_graph(_read(args.input))
    size, color, part = mc_graph(g)
    _emit(args, f"mc = {size} color = {color} vertices = "
                + " ".join(map(str, part)))
    return 0


def cmd_dualize(args):
    from .duality import graph_to_hypergraph

    g = parse_graph(_read(args.input))
    h, comps = graph_to_hypergraph(g)
    legend = "\n".join(f"# {i}: color {c} {list(vs)}" for i, (c, vs) in enumerate(comps))
    _emit(args, write_hypergraph(h) + legend)
    return 0


def cmd_classify(args):
    from .constructive import classify3, classify_bipartite2

    g = parse_graph(_read(args.input))
    if args.parts:
        parts = _parse_parts(args.parts, g.n)
        cls, cert = classify_bipartite2(g, parts[0], parts[1])
        _emit(args, f"{cls.tag} {cls.data}\n{write_cover(cert)}")
    else:
        res = classify3(g)
        _emit(args, f"{res.tag} {res.data}")
    return 0


def cmd_cover(args):
    from .constructive import (classify_bipartite2, cover_alpha2,
                               cover_bipartite3, cover_complete,
                               cover_multipartite, restricted_cover)
    from .exact import tc_exact

    g = parse_graph(_read(args.input))
    m = args.method
    if m == "exact":
        size, cert = tc_exact(g, max_diam=args.max_diam, budget=_budget(args))
    elif m in ("r2", "r3", "r4"):
        cert = cover_complete(g, int(m[1]))
    elif m == "bip2":
        parts = _parse_parts(args.parts, g.n)
        _, cert = classify_bipartite2(g, parts[0], parts[1])
    elif m == "bip3":
        parts = _parse_parts(args.parts, g.n)
        cert = cover_bipartite3(g, parts[0], parts[1])
    elif m == "alpha2":
        cert = cover_alpha2(g)
    elif m == "multipartite":
        parts = _parse_parts(args.parts, g.n)
        cert = cover_multipartite(g, parts, args.r or 2)
    elif m == "restricted":
        cert = restricted_cover(g, args.r or g.r, args.restrict_colors)
    else:
        raise SystemExit(f"unknown method {m}")
    _emit(args, write_cover(cert), {"pieces": len(cert.pieces)})
    return 0


def cmd_signatures(args):
    from . import signatures as sg

    n, p = args.n, args.p
    if args.stage == "enumerate":
        sigs = sg.enumerate_signatures(n, p)
    elif args.stage == "valid":
        sigs = sg.valid_signatures(n, p)
    elif args.stage == "residual":
        sigs = sg.residual_cases(n, p)
    else:
        raise SystemExit(f"unknown stage {args.stage}")
    lines = [",".join(str(s) for s in sig.sigs) for sig in sigs]
    _emit(args, f"# {args.stage}({n},{p}) = {len(sigs)}\n" + "\n".join(lines),
          {"count": len(sigs)})
    return 0


def cmd_zrd(args):
    from .goodpart import z_exact

    out = z_exact(args.r, args.d, _budget(args))
    witness = ""
    if out.witness is not None:
        witness = " ".join("".join(map(str, w)) for w in out.witness.sorted_words())
    if out.exact:
        text = f"Z({args.r},{args.d}) = {out.value}\nwitness: {witness}"
        code = 0
    else:
        text = f"Z({args.r},{args.d}) in [{out.lower},{out.upper}]\nwitness: {witness}"
        code = 2
    if args.format == "csv":
        text = "r,d,lower,upper,exact,witness\n" \
               f"{args.r},{args.d},{out.lower},{out.upper},{out.exact},{witness}"
    _emit(args, text, {"lower": out.lower, "upper": out.upper})
    return code


def cmd_goodpart(args):
    from .goodpart import BipartiteColoring, good_partition

    g = parse_graph(_read(args.input))
    parts = _parse_parts(args.parts, g.n)
    Y, Z = parts[0], parts[1]
    color = {}
    for yi, y in enumerate(Y):
        for zi, z in enumerate(Z):
            cs = g.colors_of(y, z)
            if not cs:
                raise SystemExit("goodpart needs a complete bipartite coloring")
            color[(yi, zi)] = min(cs)
    col = BipartiteColoring(len(Y), len(Z), g.r, color)
    got = good_partition(col, _budget(args))
    if got == "inconclusive":
        _emit(args, "inconclusive")
        return 2
    if got is None:
        _emit(args, "no good partition")
        return 1
    _emit(args, "\n".join(f"Y_{i+1}: " + " ".join(str(Y[j]) for j in part)
                          for i, part in enumerate(got)))
    return 0


def cmd_hyper(args):
    from .exact import tc_cl_exact
    from .hypercover import (cover_midrange, cover_product, kiraly_cover,
                             mc_cl, tight_spanning)

    h = parse_hypergraph(_read(args.input))
    c, ell = args.c, args.ell
    if args.method == "exact":
        size, comps = tc_cl_exact(h, c, ell, _budget(args))
        _emit(args, f"tc^{{{c},{ell}}} = {size}")
    elif args.method == "kiraly":
        comps = kiraly_cover(h)
        _emit(args, f"kiraly cover size = {len(comps)}")
    elif args.method == "product":
        comps = cover_product(h, c, ell)
        _emit(args, f"product cover size = {len(comps)}")
    elif args.method == "midrange":
        comps = cover_midrange(h, c, ell)
        _emit(args, f"midrange cover size = {len(comps)}")
    elif args.method == "tight":
        comp = tight_spanning(h)
        _emit(args, f"spanning tight component: color {comp.color}")
    elif args.method == "mc":
        size, color, _ = mc_cl(h, c, ell)
        _emit(args, f"mc^{{{c},{ell}}} = {size} color = {color}")
    else:
        raise SystemExit(f"unknown hyper method {args.method}")
    return 0


def cmd_construct(args):
    from . import constructions as cn
    from .goodpart import badmulti_graph

    kind = args.kind
    if kind == "plane":
        d = cn.galois_plane(args.q, args.plane_kind)
        _emit(args, write_hypergraph(cn.design_to_hypergraph(d)))
    elif kind == "affine-coloring":
        g = cn.affine_tc_coloring(args.r, args.alpha)
        _emit(args, write_graph(g))
    elif kind == "half-r":
        g = cn.half_r_example(args.r, args.block_size)
        _emit(args, write_graph(g))
    elif kind == "badmulti":
        g = badmulti_graph(args.k, args.t)
        _emit(args, write_graph(g))
    elif kind == "star":
        g = cn.multipartite_star_example(args.k, args.r)
        _emit(args, write_graph(g))
    else:
        raise SystemExit(f"unknown construction {kind}")
    return 0


def cmd_hunt(args):
    from .exact import Inconclusive, hunt

    bound = args.bound
    if bound not in ("alpha", "2alpha", "ryser"):
        bound = int(bound)
    try:
        got = hunt(args.n, args.r, bound, use_appendix_filters=args.filters,
                   budget=_budget(args))
    except Inconclusive as exc:
        _emit(args, f"inconclusive: {exc} {exc.stats}")
        return 2
    if got is None:
        _emit(args, "none")
        return 0
    cg, t, stats = got
    _emit(args, f"counterexample: tc = {t}\n{write_graph(cg)}")
    return 1


def cmd_verify(args):
    g = parse_graph(_read(args.input))
    cert = parse_cover(_read(args.cover))
    res = verify(g, cert)
    if res.ok:
        _emit(args, "accept")
        return 0
    _emit(args, f"violation: {res.reason}")
    return 1


def main(argv=None):
    ap = argparse.ArgumentParser(prog="ryserlab",
                                 description="monochromatic cover workbench")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--budget-seconds", type=float, default=600.0)
    ap.add_argument("--threads", type=int, default=None)
    ap.add_argument("--format", choices=("csv", "md", "plain"), default="plain")
    ap.add_argument("--manifest", default=None)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        return p

    p = add("tc", cmd_tc)
    p.add_argument("--input", required=True)
    p.add_argument("--max-diam", type=int, default=None)
    p.add_argument("--colors", type=int, nargs="*", default=None)
    p.add_argument("--exact", action="store_true")

    p = add("tp", cmd_tp)
    p.add_argument("--input", required=True)

    p = add("taunu", cmd_taunu)
    p.add_argument("--input", required=True)

    p = add("mc", cmd_mc)
    p.add_argument("--input", required=True)

    p = add("dualize", cmd_dualize)
    p.add_argument("--input", required=True)

    p = add("classify", cmd_classify)
    p.add_argument("--input", required=True)
    p.add_argument("--parts", default=None)

    p = add("cover", cmd_cover)
    p.add_argument("--input", required=True)
    p.add_argument("--method", required=True,
                   choices=("exact", "r2", "r3", "r4", "bip2", "bip3", "alpha2",
                            "multipartite", "restricted"))
    p.add_argument("--parts", default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--max-diam", type=int, default=None)
    p.add_argument("--restrict-colors", type=int, nargs=2, default=None)

    p = add("signatures", cmd_signatures)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--stage", choices=("enumerate", "valid", "residual"),
                   default="residual")

    p = add("zrd", cmd_zrd)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("goodpart", cmd_goodpart)
    p.add_argument("--input", required=True)
    p.add_argument("--parts", required=True)

    p = add("hyper", cmd_hyper)
    p.add_argument("--input", required=True)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--method", required=True,
                   choices=("exact", "kiraly", "product", "midrange", "tight", "mc"))

    p = add("construct", cmd_construct)
    p.add_argument("kind", choices=("plane", "affine-coloring", "half-r",
                                    "badmulti", "star"))
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--plane-kind", choices=("projective", "truncated", "affine"),
                   default="projective")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--block-size", type=int, default=None)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--t", type=int, default=1)

    p = add("hunt", cmd_hunt)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--bound", required=True)
    p.add_argument("--filters", action="store_true")

    p = add("verify", cmd_verify)
    p.add_argument("--input", required=True)
    p.add_argument("--cover", required=True)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except FormatError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
