"""Reading and writing graphs: edge lists and graph6; DOT and JSON output.

Edge-list documents::

    # comment
    n 4            # or "n 4 q 3" for a 3-multigraph
    0 1
    1 2 2          # "u v mult" (multigraphs only), mult in [1, q)

graph6 follows the nauty format: simple graphs only.
"""

from __future__ import annotations

import json

from .errors import ParseError, UnsupportedFormatError, ValidationError
from .graph import Graph, MultiGraph, is_prime, members

REPORT_SCHEMA = "mlscover.cover-report"
REPORT_VERSION = 1


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_edge_list(text: str) -> Graph | MultiGraph:
    n = q = None
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if n is None:
            if tokens[0] != "n" or len(tokens) not in (2, 4) or (len(tokens) == 4 and tokens[2] != "q"):
                raise ParseError("header must be 'n <order>' or 'n <order> q <prime>'", lineno)
            n = _ints(tokens[1:2], lineno)[0]
            if n < 0:
                raise ParseError("order must be non-negative", lineno)
            if len(tokens) == 4:
                q = _ints(tokens[3:4], lineno)[0]
                if not is_prime(q):
                    raise ValidationError(f"line {lineno}: q = {q} is not prime")
            continue
        vals = _ints(tokens, lineno)
        if len(vals) == 3 and q is None:
            raise ParseError("multiplicities require a 'q <prime>' header", lineno)
        if len(vals) not in (2, 3):
            raise ParseError("edge lines are 'u v' or 'u v mult'", lineno)
        u, v = vals[:2]
        mult = vals[2] if len(vals) == 3 else 1
        if not (0 <= u < n and 0 <= v < n):
            raise ValidationError(f"line {lineno}: vertex out of range [0, {n})")
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        if q is not None and not 1 <= mult < q:
            raise ValidationError(f"line {lineno}: multiplicity {mult} not in [1, {q})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValidationError(f"line {lineno}: edge {key} listed twice")
        seen.add(key)
        edges.append((u, v, mult))
    if n is None:
        raise ParseError("missing 'n <order>' header")
    if q is None:
        return Graph.from_edges(n, ((u, v) for u, v, _ in edges))
    return MultiGraph.from_edges(n, q, edges)


def write_edge_list(g: Graph | MultiGraph, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    if isinstance(g, Graph):
        lines.append(f"n {g.n}")
        lines += [f"{u} {v}" for u, v in g.edges()]
    else:
        lines.append(f"n {g.n} q {g.q}")
        lines += [f"{u} {v} {m}" for u, v, m in g.edges()]
    return "\n".join(lines) + "\n"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise UnsupportedFormatError("graph too large for graph6")


def to_graph6(g: Graph | MultiGraph, header: bool = False) -> str:
    if not isinstance(g, Graph):
        raise UnsupportedFormatError("graph6 cannot encode multigraphs")
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return (">>graph6<<" if header else "") + _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise ParseError("invalid graph6 characters")
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n, rest = vals[1] << 12 | vals[2] << 6 | vals[3], vals[4:]
    elif len(vals) >= 8:
        n = 0
        for x in vals[2:8]:
            n = n << 6 | x
        rest = vals[8:]
    else:
        raise ParseError("truncated graph6 order field")
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(rest)} bytes, expected {(nbits + 5) // 6}")
    bits = [x >> (5 - k) & 1 for x in rest for k in range(6)]
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    if any(bits[nbits:]):
        raise ParseError("nonzero graph6 padding bits")
    return Graph(n, tuple(rows))


def detect_format(text: str) -> str:
    for raw in text.splitlines():
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            return "edgelist" if tokens[0] == "n" else "graph6"
    return "edgelist"


def parse_graph(text: str, format: str = "auto") -> Graph | MultiGraph:
    fmt = detect_format(text) if format == "auto" else format
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        lines = [l for l in text.splitlines() if l.strip()]
        if len(lines) != 1:
            raise ParseError("expected exactly one graph6 line")
        return from_graph6(lines[0])
    raise UnsupportedFormatError(f"unknown format {fmt!r}")


def serialize_graph(g: Graph | MultiGraph, format: str = "edgelist") -> str:
    if format == "graph6":
        return to_graph6(g) + "\n"
    if format == "edgelist":
        return write_edge_list(g)
    raise UnsupportedFormatError(f"unknown format {format!r}")


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"] + [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    return "\n".join(lines + ["}"]) + "\n"


def cover_to_dot(sets: list[int], name: str = "cover") -> str:
    """Intersection graph of a cover; node labels list each set's members."""
    lines = [f"graph {name} {{"]
    for i, s in enumerate(sets):
        label = ",".join(map(str, members(s)))
        lines.append(f'  L{i} [label="{{{label}}}"];')
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j]:
                lines.append(f"  L{i} -- L{j};")
    return "\n".join(lines + ["}"]) + "\n"


def cover_report(g, cover, generator_counts, verified: bool,
                 include_trace: bool = False, elapsed: float | None = None) -> dict:
    """Machine-readable cover report. Key order and content are fixed for a given input;
    ``elapsed_seconds`` is only present when ``elapsed`` is given."""
    q = 2 if isinstance(g, Graph) else g.q
    rep = {
        "schema": REPORT_SCHEMA,
        "version": REPORT_VERSION,
        "order": g.n,
        "field": q,
        "cover": cover.as_lists(),
        "sets": [{"vertices": members(s), "size": s.bit_count(), "generators": c}
                 for s, c in zip(cover.sets, generator_counts)],
        "oracle_evaluations": cover.evaluations,
        "verified": verified,
    }
    if include_trace and cover.trace is not None:
        rep["trace"] = [{
            "target": t.target,
            "grown": members(t.grown),
            "growth_sets": [members(x) for x in t.growth_sets],
            "shrink_removed": t.shrink_removed,
            "mls": members(t.mls),
            "evaluations": t.evaluations,
        } for t in cover.trace.targets]
    if elapsed is not None:
        rep["elapsed_seconds"] = elapsed
    return rep


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
