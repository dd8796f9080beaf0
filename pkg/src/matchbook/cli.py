"""Command-line interface.

Exit codes: 0 success / valid, 1 invalid embedding, 2 usage or input error,
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import constructions as cons
from .bounds import BudgetExceeded, classify, mbt_lower_bound, verify_certificate
from .embedding import validate
from .fsum import f_sum
from .graph import GraphError, SizeBudgetExceeded, cycle, generate
from .io import parse_embedding, parse_graph, render_svg, serialize_embedding, serialize_graph
from .solver import DEFAULT_BUDGET, DEFAULT_MAX_VERTICES, embed_with_k, heuristic_upper, mbt_exact
from .transforms import transform

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Out:
    def __init__(self, quiet: bool):
        self.quiet = quiet

    def __call__(self, key: str, value="") -> None:
        if not self.quiet:
            print(f"{key}: {value}" if value != "" else key)


def _read_graph(path: str):
    return parse_graph(Path(path).read_text())


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _emit_graph(g, path: Optional[str], out) -> int:
    _write(serialize_graph(g), path)
    if path and path != "-":
        out("wrote", f"{path} ({g.vertex_count} vertices, {g.edge_count} edges)")
    return EXIT_OK


def _cmd_gen(args, out):
    return _emit_graph(generate(args.kind, *args.params), args.output, out)


def _cmd_transform(args, out):
    return _emit_graph(transform(_read_graph(args.graph), args.F), args.output, out)


def _cmd_fsum(args, out):
    return _emit_graph(f_sum(_read_graph(args.g1), _read_graph(args.g2), args.F), args.output, out)


def _h_input(path: Optional[str]):
    if path is None:
        raise GraphError("this construction needs --H h.json")
    return cons.dispersable_input(_read_graph(path))


def _need(value, flag):
    if value is None:
        raise GraphError(f"this construction needs {flag}")
    return value


def _cmd_embed(args, out):
    c = args.construction
    if c == "outerplanar":
        g = _read_graph(_need(args.graph, "--graph"))
        emb = cons.embed_outerplanar(g)
    elif c == "q-star":
        n = _need(args.n, "--n")
        g, emb = transform(generate("star", n), "Q"), cons.embed_Q_star(n)
    elif c == "t-star":
        n = _need(args.n, "--n")
        g, emb = transform(generate("star", n), "T"), cons.embed_T_star(n)
    elif c == "fsum-generic":
        base = _read_graph(_need(args.G, "--G"))
        h = _h_input(args.H)
        kind = _need(args.F, "-F")
        if args.fg_embedding:
            emb_fg = parse_embedding(Path(args.fg_embedding).read_text()).embedding
        else:
            emb_fg = cons.embed_transformed(base, kind)
        g = f_sum(base, h.graph, kind)
        emb = cons.embed_fsum_generic(base, h, kind, emb_fg)
    elif c == "star-q":
        n, h = _need(args.n, "--n"), _h_input(args.H)
        g = f_sum(generate("star", n), h.graph, "Q")
        emb = cons.embed_star_Q(n, h, page_choice=args.page)
    elif c == "path-q":
        n, h = _need(args.n, "--n"), _h_input(args.H)
        g = f_sum(generate("path", n), h.graph, "Q")
        emb = cons.embed_path_Q(n, h)
    elif c == "cycle-q-cycle":
        p, q = _need(args.p, "--p"), _need(args.q, "--q")
        g = f_sum(cycle(p), cycle(q), "Q")
        emb = cons.embed_cycle_Q_cycle(p, q)
    else:  # argparse restricts the choices
        raise GraphError(f"unknown construction {c}")
    _write(serialize_embedding(emb, g), args.output)
    if args.graph_out:
        Path(args.graph_out).write_text(serialize_graph(g))
    out("construction", c)
    out("pages", emb.page_count)
    out("max_degree", g.max_degree)
    return EXIT_OK


def _load_pair(gpath: str, epath: str):
    g = _read_graph(gpath)
    doc = parse_embedding(Path(epath).read_text())
    return g, doc.embedding


def _cmd_validate(args, out):
    g, emb = _load_pair(args.graph, args.embedding)
    report = validate(g, emb)
    if not args.quiet:
        print(report)
    return EXIT_OK if report.ok else EXIT_INVALID


def _circ(args):
    return tuple(args.circulant) if args.circulant else None


def _cmd_solve(args, out):
    g = _read_graph(args.graph)
    try:
        if args.k is not None:
            emb = embed_with_k(g, args.k, budget=args.budget, threads=args.threads)
            out("k", args.k)
            out("feasible", "yes" if emb is not None else "no (exhausted)")
            if emb is not None and args.witness:
                Path(args.witness).write_text(serialize_embedding(emb, g))
                out("witness", args.witness)
            return EXIT_OK
        res = mbt_exact(g, budget=args.budget, threads=args.threads,
                        max_vertices=args.max_vertices, circulant_params=_circ(args))
    except BudgetExceeded as exc:
        out("status", "budget exceeded")
        if exc.bracket:
            lo, hi = exc.bracket
            out("bracket", f"[{lo}, {hi if hi is not None else '?'}]")
        return EXIT_BUDGET
    out("mbt", res.mbt)
    out("max_degree", g.max_degree)
    out("classification", classify(g, res.mbt).value)
    out("certificate", res.lower_certificate.describe())
    out("optimality", "certified by lower bound" if res.certified_by_bound else "by exhaustive search")
    out("nodes", res.stats.nodes)
    out("backend", res.stats.backend)
    if args.witness:
        Path(args.witness).write_text(serialize_embedding(res.embedding, g))
        out("witness", args.witness)
    return EXIT_OK


def _cmd_bounds(args, out):
    g = _read_graph(args.graph)
    cert = mbt_lower_bound(g, circulant_params=_circ(args))
    out("max_degree", g.max_degree)
    out("lower_bound", cert.value)
    out("reason", cert.reason.value)
    out("witness", {k: v for k, v in cert.witness.items() if k != "mapping"})
    out("verified", str(verify_certificate(g, cert)).lower())
    return EXIT_OK


def _cmd_classify(args, out):
    g = _read_graph(args.graph)
    out("classification", classify(g, args.mbt).value)
    return EXIT_OK


def _cmd_render(args, out):
    g, emb = _load_pair(args.graph, args.embedding)
    _write(render_svg(g, emb, title=args.title), args.output)
    return EXIT_OK


def _cmd_experiment(args, out):
    if args.name != "cpcq-odd":
        raise GraphError(f"unknown experiment {args.name}")
    g = f_sum(cycle(args.p), cycle(args.q), "Q")
    cert = mbt_lower_bound(g, max_coloring_edges=0)
    emb = heuristic_upper(g, seed=args.seed, tries=args.tries, steps=args.steps)
    report = validate(g, emb)
    out("graph", f"C_{args.p} +_Q C_{args.q}")
    out("vertices", g.vertex_count)
    out("max_degree", g.max_degree)
    out("lower_bound", f"{cert.value} ({cert.reason.value})")
    out("heuristic_upper", f"{emb.page_count} (valid={str(report.ok).lower()})")
    out("bracket", f"[{cert.value}, {emb.page_count}]")
    out("note", "heuristic evidence only; no optimality claim")
    if args.output:
        Path(args.output).write_text(serialize_embedding(emb, g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    def global_flags(default):
        common = argparse.ArgumentParser(add_help=False, argument_default=default)
        common.add_argument("--seed", type=int)
        common.add_argument("--threads", type=int)
        common.add_argument("--quiet", action="store_true")
        return common

    # global flags are accepted before or after the subcommand
    parser = argparse.ArgumentParser(prog="matchbook", parents=[global_flags(None)],
                                     description="Matching book embeddings of F-sums and friends.")
    parser.set_defaults(seed=0, threads=1, quiet=False)
    sub = parser.add_subparsers(dest="command", required=True)
    sub_flags = global_flags(argparse.SUPPRESS)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[sub_flags], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("gen", _cmd_gen, "generate path/cycle/star/circulant graphs")
    p.add_argument("kind")
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("-o", "--output", default=None)

    p = add("transform", _cmd_transform, "apply S, R, Q or T")
    p.add_argument("-F", required=True, choices=list("SRQT"))
    p.add_argument("graph")
    p.add_argument("-o", "--output", default=None)

    p = add("fsum", _cmd_fsum, "F-sum of two graphs")
    p.add_argument("-F", required=True, choices=list("SRQT"))
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("-o", "--output", default=None)

    p = add("embed", _cmd_embed, "run an explicit construction")
    p.add_argument("--construction", required=True, choices=[
        "outerplanar", "q-star", "t-star", "fsum-generic", "star-q", "path-q", "cycle-q-cycle"])
    for flag in ("--n", "--p", "--q"):
        p.add_argument(flag, type=int, default=None)
    p.add_argument("--page", type=int, default=0, help="H-page spread over the star pages (star-q)")
    p.add_argument("--graph", default=None, help="input graph (outerplanar)")
    p.add_argument("--G", default=None, help="left factor (fsum-generic)")
    p.add_argument("--H", default=None, help="dispersable bipartite right factor")
    p.add_argument("-F", default=None, choices=list("SRQT"))
    p.add_argument("--fg-embedding", default=None, help="embedding of F(G) to reuse (fsum-generic)")
    p.add_argument("--graph-out", default=None)
    p.add_argument("-o", "--output", default=None)

    p = add("validate", _cmd_validate, "check an embedding")
    p.add_argument("graph")
    p.add_argument("embedding")

    p = add("solve", _cmd_solve, "exact matching book thickness")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.add_argument("--circulant", type=int, nargs=2, metavar=("N", "K"), default=None)
    p.add_argument("--witness", default=None, help="write the witness embedding here")

    p = add("bounds", _cmd_bounds, "lower-bound certificate")
    p.add_argument("graph")
    p.add_argument("--circulant", type=int, nargs=2, metavar=("N", "K"), default=None)

    p = add("classify", _cmd_classify, "dispersable / nearly dispersable / other")
    p.add_argument("graph")
    p.add_argument("--mbt", type=int, required=True)

    p = add("render", _cmd_render, "SVG arc diagram")
    p.add_argument("graph")
    p.add_argument("embedding")
    p.add_argument("--title", default=None)
    p.add_argument("-o", "--output", default=None)

    p = add("experiment", _cmd_experiment, "heuristic experiments")
    p.add_argument("name", choices=["cpcq-odd"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--tries", type=int, default=4)
    p.add_argument("--steps", type=int, default=150)
    p.add_argument("-o", "--output", default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.quiet)
    try:
        return args.func(args, out)
    except SizeBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
