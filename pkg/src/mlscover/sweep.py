"""Exhaustive corpora of small labeled graphs."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .graph import Graph


def pair_list(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in the bit order used by :func:`graph_from_code`."""
    return list(combinations(range(n), 2))


def graph_from_code(n: int, code: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    """Bit ``i`` of ``code`` says whether the ``i``-th pair of :func:`pair_list` is an edge."""
    pairs = pair_list(n) if pairs is None else pairs
    rows = [0] * n
    for i, (u, v) in enumerate(pairs):
        if code >> i & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def graph_code(g: Graph) -> int:
    code = 0
    for i, (u, v) in enumerate(pair_list(g.n)):
        if g.adj[u] >> v & 1:
            code |= 1 << i
    return code


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n choose 2)`` labeled graphs on ``n`` vertices, by increasing code."""
    pairs = pair_list(n)
    for code in range(1 << len(pairs)):
        yield graph_from_code(n, code, pairs)
