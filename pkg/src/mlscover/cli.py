"""Command-line front end.

Exit codes: 0 success (for ``cover``: the cover verified), 1 bad input or
usage, 2 a self-check failed.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import io
from .config import DEFAULT_LIMITS
from .cover import mls_cover
from .errors import GraphFormatError, MlsError, ResourceLimitError, UsageError
from .families import FamilySpec
from .graph import Graph, members, universe, vset
from .local_sets import (count_bound_base, enumerate_minimal_local_sets, generators_of,
                         is_minimal_local_set, log2_mls_count_lower_bound, max_mls_size_bound,
                         mls_count_lower_bound, mls_statistics, verify_generator_structure)
from .rank import CutRankOracle

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read(path: str, fmt: str):
    text = sys.stdin.read() if path == "-" else open(path).read()
    return io.parse_graph(text, fmt)


def _as_simple(g):
    if isinstance(g, Graph):
        return g
    if g.q == 2:
        return Graph.from_edges(g.n, ((u, v) for u, v, _ in g.edges()))
    return None


def _parse_set(text: str, n: int) -> int:
    items = [t for t in text.replace(" ", "").split(",") if t]
    try:
        vs = [int(t) for t in items]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None
    for v in vs:
        if not 0 <= v < n:
            raise UsageError(f"vertex {v} out of range [0, {n})")
    return vset(vs)


def cmd_cover(args) -> int:
    g = _read(args.file, args.format)
    start = time.perf_counter()
    cover = mls_cover(CutRankOracle(g), trace=True)
    elapsed = time.perf_counter() - start
    checker = CutRankOracle(g)
    verified = cover.covered == universe(g.n) and len(cover.sets) <= g.n and all(
        is_minimal_local_set(checker, s) for s in cover.sets)
    simple = _as_simple(g)
    gens = [len(generators_of(simple, s)) if simple is not None else None for s in cover.sets]
    if args.dot:
        sys.stdout.write(io.cover_to_dot(cover.sets))
    elif args.json:
        rep = io.cover_report(g, cover, gens, verified, include_trace=args.trace,
                              elapsed=elapsed if args.timing else None)
        sys.stdout.write(io.dump_json(rep))
    else:
        q = 2 if isinstance(g, Graph) else g.q
        print(f"order {g.n} field F_{q} sets {len(cover.sets)} "
              f"oracle_evaluations {cover.evaluations}")
        for s, c in zip(cover.sets, gens):
            tail = "" if c is None else f"  (generators: {c})"
            print(" ".join(map(str, members(s))) + tail)
        if args.trace:
            for t in cover.trace.targets:
                print(f"target {t.target}: grown {members(t.grown)} "
                      f"removed {t.shrink_removed} mls {members(t.mls)} "
                      f"evaluations {t.evaluations}")
        if args.timing:
            print(f"elapsed {elapsed:.6f}s")
        print("verified" if verified else "VERIFICATION FAILED")
    return EXIT_OK if verified else EXIT_VERIFY


def cmd_cutrank(args) -> int:
    g = _read(args.file, args.format)
    a = _parse_set(args.set, g.n)
    r = CutRankOracle(g)(a)
    size = a.bit_count()
    if args.json:
        sys.stdout.write(io.dump_json({"set": members(a), "cutrank": r, "size": size,
                                       "full": r == size}))
    else:
        print(f"cutrank {r}\nsize {size}\nfull {'yes' if r == size else 'no'}")
    return EXIT_OK


def _violations(g: Graph, recs) -> list[str]:
    oracle = CutRankOracle(g)
    bound = max_mls_size_bound(g.n) if g.n else 0
    out = []
    for r in recs:
        name = members(r.vertices)
        if r.size > bound:
            out.append(f"{name}: size {r.size} exceeds bound {bound}")
        if not verify_generator_structure(r):
            out.append(f"{name}: {len(r.generators)} generators")
        nullity = r.size - oracle(r.vertices)
        if nullity not in (1, 2) or (nullity == 2 and r.size % 2):
            out.append(f"{name}: |L| - cutrk(L) = {nullity}")
    return out


def cmd_enumerate(args) -> int:
    g = _read(args.file, args.format)
    g = _as_simple(g)
    if g is None:
        raise UsageError("enumerate supports simple graphs (or q = 2) only")
    recs = enumerate_minimal_local_sets(g, limit=args.max_n)
    problems = _violations(g, recs) if args.stats else []
    stats = mls_statistics(recs)
    if args.json:
        doc = {"order": g.n, "mls": [{"vertices": r.members(), "size": r.size,
                                       "generators": [members(d) for d in r.generators]}
                                      for r in recs]}
        if args.stats:
            doc["stats"] = {"count": stats.count, "min_size": stats.min_size,
                            "max_size": stats.max_size,
                            "size_histogram": {str(k): v for k, v in stats.size_histogram.items()},
                            "size_bound": max_mls_size_bound(g.n) if g.n else 0}
            doc["violations"] = problems
        sys.stdout.write(io.dump_json(doc))
    else:
        for r in recs:
            gens = "; ".join(" ".join(map(str, members(d))) for d in r.generators)
            print(f"{' '.join(map(str, r.members()))}  [generators: {gens}]")
        if args.stats:
            print(f"count {stats.count} min_size {stats.min_size} max_size {stats.max_size}")
            print("histogram " + " ".join(f"{k}:{v}" for k, v in stats.size_histogram.items()))
            if g.n:
                print(f"size_bound {max_mls_size_bound(g.n)}")
            for p in problems:
                print(f"violation: {p}")
    return EXIT_VERIFY if problems else EXIT_OK


def _param(tok: str):
    try:
        return int(tok)
    except ValueError:
        try:
            return float(tok)
        except ValueError:
            raise UsageError(f"bad family parameter {tok!r}") from None


def cmd_gen(args) -> int:
    params = [_param(p) for p in args.params]
    if args.family.startswith("random"):
        params.insert(2, args.seed)
    g, witness = FamilySpec(args.family, tuple(params)).build()
    comments = [f"witness {' '.join(map(str, members(witness)))}"] if witness is not None else []
    if args.format == "graph6":
        text = io.to_graph6(g) + "\n"
    else:
        text = io.write_edge_list(g, comments)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if witness is not None and (args.output or args.format == "graph6"):
        print(comments[0], file=sys.stdout if args.output else sys.stderr)
    return EXIT_OK


def cmd_bounds(args) -> int:
    n, m = args.n, args.m
    if m is not None and (m < 1 or 2 * m >= n):
        raise UsageError("need 1 <= m < n/2 (the bound vanishes at m = n/2)")
    print(f"max_mls_size {max_mls_size_bound(n)}")
    if m is not None:
        print(f"count_lower_bound {mls_count_lower_bound(n, m):.12g}")
        print(f"count_lower_bound_log2 {log2_mls_count_lower_bound(n, m):.12g}")
        print(f"exponent_base {count_bound_base(m / n):.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mlscover", description="Minimal local set covers of graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_input(sp):
        sp.add_argument("file", help="graph file, or - for stdin")
        sp.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="auto")

    sp = sub.add_parser("cover", help="compute and verify an MLS cover")
    graph_input(sp)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--trace", action="store_true", help="include per-target search records")
    sp.add_argument("--dot", action="store_true", help="print the cover's intersection graph as DOT")
    sp.add_argument("--timing", action="store_true", help="report elapsed time")
    sp.set_defaults(fn=cmd_cover)

    sp = sub.add_parser("cutrank", help="cut-rank of a vertex set")
    graph_input(sp)
    sp.add_argument("--set", required=True, help="comma-separated vertices (may be empty)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_cutrank)

    sp = sub.add_parser("enumerate", help="list all minimal local sets (brute force)")
    graph_input(sp)
    sp.add_argument("--max-n", type=int, default=DEFAULT_LIMITS.enumerate_max_n)
    sp.add_argument("--stats", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("gen", help="write a named graph family")
    sp.add_argument("family")
    sp.add_argument("params", nargs="*")
    sp.add_argument("-o", "--output")
    sp.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=cmd_gen)

    sp = sub.add_parser("bounds", help="MLS size bound and count lower bound")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int, nargs="?")
    sp.set_defaults(fn=cmd_bounds)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    try:
        return args.fn(args)
    except (GraphFormatError, UsageError, ResourceLimitError, OSError) as e:
        print(f"mlscover: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except MlsError as e:
        print(f"mlscover: internal check failed: {e}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
