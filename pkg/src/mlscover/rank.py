"""Cut-rank over F_2 and F_q, kernels of cut matrices, connectivity oracles.

The cover algorithm only ever talks to a :class:`ConnectivityOracle`: a set
function on bit-vector subsets of ``{0..n-1}`` that is assumed (not checked)
to be symmetric, linearly bounded and submodular. Cut-rank of a graph or
q-multigraph is the main instance; matroid connectivity is another.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from typing import Callable

from .graph import Graph, MultiGraph, VertexSet, _check_set, members, universe


def gf2_rank(rows: list[int]) -> int:
    """Rank over F_2 of rows given as int bit-vectors."""
    basis: list[tuple[int, int]] = []
    for r in rows:
        for pivot, b in basis:
            if r & pivot:
                r ^= b
        if r:
            basis.append((r & -r, r))
    return len(basis)


def gfq_rank(rows: list[list[int]], q: int) -> int:
    """Rank over F_q (q prime) of a dense matrix given as a list of rows."""
    m = [[x % q for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], q - 2, q)
        prow = [x * inv % q for x in m[rank]]
        m[rank] = prow
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], prow)]
        rank += 1
        if rank == len(m):
            break
    return rank


def _cutrank_gf2(adj: tuple[int, ...], a: int, full: int) -> int:
    comp = full & ~a
    basis: list[tuple[int, int]] = []
    while a:
        low = a & -a
        a ^= low
        r = adj[low.bit_length() - 1] & comp
        for pivot, b in basis:
            if r & pivot:
                r ^= b
        if r:
            basis.append((r & -r, r))
    return len(basis)


def cutrank(g: Graph, a: VertexSet) -> int:
    """Rank over F_2 of the cut matrix between ``a`` and its complement."""
    _check_set(g.n, a)
    return _cutrank_gf2(g.adj, a, universe(g.n))


def _cut_rows_q(mg: MultiGraph, a: VertexSet) -> list[list[int]]:
    cols = members(universe(mg.n) & ~a)
    return [[mg.adj[u][c] for c in cols] for u in members(a)]


def cutrank_q(mg: MultiGraph, a: VertexSet) -> int:
    """Rank over F_q of the cut matrix of a q-multigraph."""
    _check_set(mg.n, a)
    return gfq_rank(_cut_rows_q(mg, a), mg.q)


def cutrank_table(g: Graph) -> list[int]:
    """Cut-rank of every subset, indexed by bit-vector."""
    full = universe(g.n)
    return [_cutrank_gf2(g.adj, a, full) for a in range(1 << g.n)]


@dataclass(frozen=True)
class KernelBasis:
    """Basis of ``{D in F_q^a : Gamma_a^T D = 0}``.

    Each vector is a length-n coefficient tuple supported inside the queried
    set. Over F_2 a vector is just a generator set; :attr:`masks` gives them as
    bit-vectors.
    """

    q: int
    vectors: tuple[tuple[int, ...], ...]

    @property
    def masks(self) -> list[VertexSet]:
        return [sum(1 << i for i, x in enumerate(vec) if x) for vec in self.vectors]

    def __len__(self):
        return len(self.vectors)


def kernel_masks_gf2(g: Graph, a: VertexSet) -> list[VertexSet]:
    """Kernel basis of the F_2 cut map ``D -> Odd(D) minus a`` on subsets of ``a``.

    One vector per dependent row, so the basis has ``|a| - cutrank(a)`` members.
    """
    _check_set(g.n, a)
    comp = universe(g.n) & ~a
    basis: list[tuple[int, int, int]] = []
    kernel = []
    for u in members(a):
        r = g.adj[u] & comp
        combo = 1 << u
        for pivot, b, bcombo in basis:
            if r & pivot:
                r ^= b
                combo ^= bcombo
        if r:
            basis.append((r & -r, r, combo))
        else:
            kernel.append(combo)
    return kernel


def _kernel_q(mg: MultiGraph, a: VertexSet) -> list[tuple[int, ...]]:
    q, n = mg.q, mg.n
    rows = members(a)
    cut = _cut_rows_q(mg, a)
    k = len(cut[0]) if cut else 0
    # Augment each row with its coefficient vector and eliminate on the cut part.
    aug = []
    for i, u in enumerate(rows):
        coeff = [0] * n
        coeff[u] = 1
        aug.append(cut[i] + coeff)
    rank = 0
    for col in range(k):
        pivot = next((i for i in range(rank, len(aug)) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = pow(aug[rank][col], q - 2, q)
        prow = [x * inv % q for x in aug[rank]]
        aug[rank] = prow
        for i in range(len(aug)):
            if i != rank and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(x - f * y) % q for x, y in zip(aug[i], prow)]
        rank += 1
    return [tuple(row[k:]) for row in aug[rank:]]


def kernel_basis(g: Graph | MultiGraph, a: VertexSet) -> KernelBasis:
    if isinstance(g, Graph):
        masks = kernel_masks_gf2(g, a)
        return KernelBasis(2, tuple(tuple(m >> i & 1 for i in range(g.n)) for m in masks))
    _check_set(g.n, a)
    return KernelBasis(g.q, tuple(_kernel_q(g, a)))


class ConnectivityOracle:
    """Integer set function over subsets of ``{0..n-1}``, called with bit-vectors.

    Subclasses implement :meth:`_evaluate`. ``evaluations`` counts calls.
    With ``memoize=True`` values are cached by bit pattern; the cache and the
    counter are guarded by a lock so concurrent calls stay correct.
    """

    def __init__(self, n: int, memoize: bool = False):
        self.n = n
        self.memoize = memoize
        self.evaluations = 0
        self._cache: dict[int, int] = {}
        self._lock = threading.Lock()

    def _evaluate(self, a: VertexSet) -> int:
        raise NotImplementedError

    def __call__(self, a: VertexSet) -> int:
        with self._lock:
            self.evaluations += 1
            if self.memoize and a in self._cache:
                return self._cache[a]
        value = self._evaluate(a)
        if self.memoize:
            with self._lock:
                self._cache[a] = value
        return value

    def is_full(self, a: VertexSet) -> bool:
        return self(a) == a.bit_count()


class CutRankOracle(ConnectivityOracle):
    """Cut-rank of a graph (F_2) or q-multigraph (F_q).

    The axioms hold because the cut matrix of the complement is the transpose
    (symmetry), has |a| rows (linear boundedness), and rank of adjacency blocks
    is submodular in the row set.
    """

    def __init__(self, g: Graph | MultiGraph, memoize: bool = False):
        super().__init__(g.n, memoize)
        self.graph = g
        self._full = universe(g.n)
        if isinstance(g, Graph):
            adj, full = g.adj, self._full
            self._evaluate = lambda a: _cutrank_gf2(adj, a, full)
        else:
            self._evaluate = lambda a: gfq_rank(_cut_rows_q(g, a), g.q)

    @property
    def q(self) -> int:
        return 2 if isinstance(self.graph, Graph) else self.graph.q


class FunctionOracle(ConnectivityOracle):
    def __init__(self, fn: Callable[[VertexSet], int], n: int, memoize: bool = False):
        super().__init__(n, memoize)
        self._evaluate = fn


def is_full_cutrank(oracle: ConnectivityOracle, a: VertexSet) -> bool:
    return oracle(a) == a.bit_count()


def matroid_connectivity_oracle(rank_fn: Callable[[VertexSet], int], n: int,
                                memoize: bool = False) -> FunctionOracle:
    """Connectivity ``r(X) + r(E - X) - r(E)`` of a matroid with rank function ``rank_fn``."""
    full = universe(n)
    r_full = rank_fn(full)
    return FunctionOracle(lambda x: rank_fn(x) + rank_fn(full & ~x) - r_full, n, memoize)


def uniform_matroid_rank(k: int) -> Callable[[VertexSet], int]:
    """Rank function of the uniform matroid U_{k,n}."""
    return lambda x: min(x.bit_count(), k)


def uniform_matroid_oracle(k: int, n: int) -> FunctionOracle:
    return matroid_connectivity_oracle(uniform_matroid_rank(k), n)


def check_axioms(oracle: ConnectivityOracle, samples: int = 2000, seed: int = 0,
                 exhaustive_limit: int = 6) -> list[str]:
    """Look for violations of symmetry, linear boundedness and submodularity.

    Exhaustive over all subsets (and all pairs) when ``n <= exhaustive_limit``,
    otherwise ``samples`` random sets and pairs. Returns human-readable
    violation descriptions; empty means none found.
    """
    n = oracle.n
    full = universe(n)
    problems = []
    if n <= exhaustive_limit:
        sets = list(range(1 << n))
        pairs = ((x, y) for x in sets for y in sets if x < y)
    else:
        rng = random.Random(seed)
        sets = [rng.getrandbits(n) for _ in range(samples)]
        pairs = ((rng.getrandbits(n), rng.getrandbits(n)) for _ in range(samples))
    for x in sets:
        v = oracle(x)
        if v != oracle(full & ~x):
            problems.append(f"symmetry fails at {members(x)}")
        if not 0 <= v <= x.bit_count():
            problems.append(f"linear boundedness fails at {members(x)}")
    for x, y in pairs:
        if oracle(x | y) + oracle(x & y) > oracle(x) + oracle(y):
            problems.append(f"submodularity fails at {members(x)}, {members(y)}")
    return problems
