"""Simple graphs and q-multigraphs on the vertex set {0, ..., n-1}.

Vertex sets are plain Python ints used as bit-vectors: bit ``v`` is set iff
vertex ``v`` is a member. A simple graph stores one such int per vertex (its
neighborhood), so symmetric differences of neighborhoods are single XORs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import NotPrimeError, UsageError, ValidationError

VertexSet = int


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Members of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def universe(n: int) -> VertexSet:
    return (1 << n) - 1


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _check_vertex(n: int, u: int) -> None:
    if not 0 <= u < n:
        raise UsageError(f"vertex {u} out of range for a graph of order {n}")


def _check_set(n: int, a: VertexSet) -> None:
    if a < 0 or a >> n:
        raise UsageError(f"vertex set {members(a) if a >= 0 else a} not within [0, {n})")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[u]`` is the neighborhood bit-vector of ``u``.

    Immutable. Construct through :meth:`from_edges` or :meth:`from_rows`, which
    validate symmetry and the zero diagonal.
    """

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise UsageError("graph order must be non-negative")
        rows = [0] * n
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        rows = tuple(rows)
        n = len(rows)
        for u, row in enumerate(rows):
            _check_set(n, row)
            if row >> u & 1:
                raise ValidationError(f"self-loop at vertex {u}")
            for v in members(row):
                if not rows[v] >> u & 1:
                    raise ValidationError(f"asymmetric adjacency between {u} and {v}")
        return cls(n, rows)

    @classmethod
    def edgeless(cls, n: int) -> "Graph":
        if n < 0:
            raise UsageError("graph order must be non-negative")
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in members(row >> (u + 1) << (u + 1)):
                yield u, v

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def to_numpy(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            m[u, v] = m[v, u] = 1
        return m


@dataclass(frozen=True)
class MultiGraph:
    """Undirected q-multigraph: symmetric multiplicity matrix over F_q, q prime."""

    n: int
    q: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.q):
            raise NotPrimeError(f"q = {self.q} is not prime")
        if len(self.adj) != self.n or any(len(row) != self.n for row in self.adj):
            raise ValidationError("adjacency matrix must be n x n")
        for u in range(self.n):
            if self.adj[u][u] != 0:
                raise ValidationError(f"self-loop at vertex {u}")
            for v in range(u + 1, self.n):
                x = self.adj[u][v]
                if not 0 <= x < self.q:
                    raise ValidationError(f"multiplicity {x} of ({u}, {v}) not in [0, {self.q})")
                if self.adj[v][u] != x:
                    raise ValidationError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, q: int, edges: Iterable[tuple[int, int, int]]) -> "MultiGraph":
        if not is_prime(q):
            raise NotPrimeError(f"q = {q} is not prime")
        if n < 0:
            raise UsageError("graph order must be non-negative")
        m = [[0] * n for _ in range(n)]
        for u, v, mult in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            m[u][v] = m[v][u] = mult % q
        return cls(n, q, tuple(map(tuple, m)))

    @classmethod
    def from_graph(cls, g: Graph) -> "MultiGraph":
        return cls.from_edges(g.n, 2, ((u, v, 1) for u, v in g.edges()))

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Triples ``(u, v, multiplicity)`` with ``u < v`` and nonzero multiplicity."""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.adj[u][v]:
                    yield u, v, self.adj[u][v]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.adj, dtype=np.int64).reshape(self.n, self.n)


def neighborhood(g: Graph, u: int) -> VertexSet:
    _check_vertex(g.n, u)
    return g.adj[u]


def closed_neighborhood(g: Graph, u: int) -> VertexSet:
    _check_vertex(g.n, u)
    return g.adj[u] | 1 << u


def odd_neighborhood(g: Graph, d: VertexSet) -> VertexSet:
    """Vertices adjacent to an odd number of members of ``d``."""
    _check_set(g.n, d)
    adj = g.adj
    out = 0
    while d:
        low = d & -d
        out ^= adj[low.bit_length() - 1]
        d ^= low
    return out


def local_complement(g: Graph, u: int) -> Graph:
    """``g`` with the subgraph induced by the neighborhood of ``u`` complemented."""
    _check_vertex(g.n, u)
    nb = g.adj[u]
    rows = list(g.adj)
    for v in members(nb):
        rows[v] ^= nb & ~(1 << v)
    return Graph(g.n, tuple(rows))


def cut_matrix(g: Graph | MultiGraph, a: VertexSet) -> np.ndarray:
    """|a| x (n - |a|) adjacency block; rows are ``a``, columns its complement, both ascending."""
    _check_set(g.n, a)
    rows = members(a)
    cols = members(universe(g.n) & ~a)
    m = g.to_numpy()
    return m[np.ix_(rows, cols)] if rows and cols else np.zeros((len(rows), len(cols)), dtype=np.int64)
