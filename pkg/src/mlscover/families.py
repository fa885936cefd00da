"""Named graph families, each with a fixed vertex labeling.

Witness-carrying constructions return ``(graph, witness)`` where the witness
is the minimal local set the construction is built around.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

import numpy as np

from .errors import UsageError
from .graph import Graph, MultiGraph, VertexSet, is_prime, vset


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise UsageError(msg)


def edgeless(n: int) -> Graph:
    _need(n >= 1, "n must be >= 1")
    return Graph.edgeless(n)


def path(n: int) -> Graph:
    _need(n >= 1, "n must be >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "a cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _need(n >= 1, "n must be >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts ``0..a-1`` and ``a..a+b-1``."""
    _need(a >= 1 and b >= 1, "both parts must be nonempty")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def bipartite_minus_matching(k: int) -> Graph:
    """K_{k,k} minus a perfect matching: ``u_i = i``, ``v_j = k + j``, edge iff ``i != j``."""
    _need(k >= 2, "k must be >= 2")
    return Graph.from_edges(2 * k, ((i, k + j) for i in range(k) for j in range(k) if i != j))


def bipartite_matching_witnesses(k: int) -> list[VertexSet]:
    """``L_w = {u_i : i in w} | {v_i : i not in w}`` for every odd-size ``w``; each is an MLS of size k."""
    _need(k >= 2, "k must be >= 2")
    out = []
    for w in range(1 << k):
        if w.bit_count() % 2:
            out.append(w | (((1 << k) - 1) & ~w) << k)
    return out


def bound_tight(n: int) -> tuple[Graph, VertexSet]:
    """Graph of order ``n`` with an MLS of the largest possible size.

    * ``n = 2m+1``: ``x = 0`` joined to ``v_i = i`` (i = 1..m), each ``v_i``
      pendant to ``u_i = m + i``; witness ``{x, v_1..v_m}``.
    * ``n = 2m``, m odd: ``x = 0``, ``y = 1``, ``v_i = 1 + i``, ``u_i = m + i``
      (i = 1..m-1); edges ``x-y``, ``x-v_i``, ``y-u_i``, ``v_i-u_i``, plus
      ``v_1-v_2`` and ``u_1-u_2``; witness ``{x, y, v_1..v_{m-1}}``.
    * ``n = 2m``, m even: ``x = 0``, ``v_i = i``, ``u_i = m - 1 + i``
      (i = 1..m-1), ``y = n - 1``; edges ``x-v_i``, ``v_i-u_i``, ``u_i-y``;
      witness ``{x, v_1..v_{m-1}}``.

    In every case the witness is ``{x} | N(x)``.
    """
    _need(n >= 1, "n must be >= 1")
    m = n // 2
    if n % 2:
        edges = [(0, i) for i in range(1, m + 1)] + [(i, m + i) for i in range(1, m + 1)]
        return Graph.from_edges(n, edges), vset(range(m + 1))
    if m % 2:
        vs = [1 + i for i in range(1, m)]
        us = [m + i for i in range(1, m)]
        edges = [(0, 1)] + [(0, v) for v in vs] + [(1, u) for u in us]
        edges += list(zip(vs, us))
        if m >= 3:
            edges += [(vs[0], vs[1]), (us[0], us[1])]
        return Graph.from_edges(n, edges), vset(range(m + 1))
    vs = list(range(1, m))
    us = [m - 1 + i for i in range(1, m)]
    y = n - 1
    edges = [(0, v) for v in vs] + list(zip(vs, us)) + [(u, y) for u in us]
    return Graph.from_edges(n, edges), vset(range(m))


def fig2_counterexample() -> Graph:
    """Order-15 graph in which no closed neighborhood contains an MLS through 0, 1 or 2."""
    edges = [(0, v) for v in range(3, 9)] + [(1, v) for v in range(3, 15)]
    edges += [(2, v) for v in range(9, 15)]
    edges += [(v, v + 1) for v in range(3, 15, 2)]
    return Graph.from_edges(15, edges)


def path_mls_witness(n: int, k: int) -> VertexSet:
    """``{0, 2, ..., 2k} | {2k+1}``: an MLS of size ``k + 2`` in the path on ``n`` vertices."""
    _need(n > 2, "path witnesses need n > 2")
    _need(0 <= k < (n + 1) // 2 - 1, f"k must lie in [0, {(n + 1) // 2 - 1})")
    return vset(range(0, 2 * k + 1, 2)) | 1 << (2 * k + 1)


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """G(n, p) drawn from numpy's PCG64 stream seeded with ``seed``.

    Pairs ``(u, v)``, ``u < v``, are visited in lexicographic order, one
    uniform draw each.
    """
    _need(n >= 0, "n must be >= 0")
    _need(0.0 <= edge_probability <= 1.0, "edge probability must lie in [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph.from_edges(n, (p for p, x in zip(pairs, draws) if x < edge_probability))


def random_multigraph(n: int, q: int, seed: int, edge_probability: float = 1.0) -> MultiGraph:
    """Each pair present with ``edge_probability``; multiplicities uniform in ``[0, q)``."""
    _need(n >= 0, "n must be >= 0")
    _need(is_prime(q), f"q = {q} is not prime")
    _need(0.0 <= edge_probability <= 1.0, "edge probability must lie in [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(combinations(range(n), 2))
    present = rng.random(len(pairs)) < edge_probability
    mult = rng.integers(0, q, size=len(pairs))
    edges = [(u, v, int(x)) for (u, v), p, x in zip(pairs, present, mult) if p and x]
    return MultiGraph.from_edges(n, q, edges)


@dataclass(frozen=True)
class FamilySpec:
    """A named family with its parameters; ``build()`` returns ``(graph, witness or None)``."""

    name: str
    params: tuple = field(default_factory=tuple)

    def build(self):
        try:
            entry = FAMILIES[self.name]
        except KeyError:
            raise UsageError(f"unknown family {self.name!r}; choose from {sorted(FAMILIES)}")
        fn, arity, _ = entry
        if len(self.params) not in arity:
            raise UsageError(f"family {self.name!r} takes {'/'.join(map(str, arity))} parameters")
        out = fn(*self.params)
        return out if isinstance(out, tuple) else (out, None)


def _bm(k):
    return bipartite_minus_matching(k), None


FAMILIES: dict[str, tuple[Callable, tuple[int, ...], str]] = {
    "edgeless": (edgeless, (1,), "n"),
    "path": (path, (1,), "n"),
    "cycle": (cycle, (1,), "n"),
    "complete": (complete, (1,), "n"),
    "complete-bipartite": (complete_bipartite, (2,), "a b"),
    "bipartite-matching": (_bm, (1,), "k"),
    "bound-tight": (bound_tight, (1,), "n"),
    "fig2": (fig2_counterexample, (0,), ""),
    "path-witness": (lambda n, k: (path(n), path_mls_witness(n, k)), (2,), "n k"),
    "random": (random_graph, (3,), "n p seed"),
    "random-multigraph": (random_multigraph, (3, 4), "n q seed [p]"),
}
