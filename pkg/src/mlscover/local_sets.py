"""Local sets and minimal local sets (MLS).

A local set is a nonempty ``D | Odd(D)``. Minimality can be decided either by
definition (enumerate generators) or through cut-rank: ``A`` is an MLS iff
it is not full cut-rank while every ``A - {x}`` is. Both routes live here so
they can check each other.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_LIMITS
from .errors import ResourceLimitError, UsageError
from .graph import Graph, MultiGraph, VertexSet, _check_set, members, odd_neighborhood
from .rank import ConnectivityOracle, CutRankOracle, kernel_masks_gf2


def local_set_of(g: Graph, d: VertexSet) -> VertexSet:
    """The local set generated by ``d``."""
    return d | odd_neighborhood(g, d)


def _span(basis: list[int]) -> list[int]:
    span = [0]
    for b in basis:
        span += [x ^ b for x in span]
    return span


def generators_of(g: Graph, a: VertexSet) -> list[VertexSet]:
    """All ``D`` with ``D | Odd(D) == a``, ascending; empty iff ``a`` is not local.

    Candidates are the ``2^(|a| - cutrk(a))`` members of the kernel span.
    """
    _check_set(g.n, a)
    if not a:
        return []
    adj = g.adj
    out = []
    for d in _span(kernel_masks_gf2(g, a)):
        odd = 0
        x = d
        while x:
            low = x & -x
            odd ^= adj[low.bit_length() - 1]
            x ^= low
        if d | odd == a:
            out.append(d)
    return sorted(out)


def is_local_set(g: Graph, a: VertexSet) -> bool:
    return bool(generators_of(g, a))


def _as_oracle(obj) -> ConnectivityOracle:
    if isinstance(obj, (Graph, MultiGraph)):
        return CutRankOracle(obj)
    return obj


def is_minimal_local_set(oracle, a: VertexSet) -> bool:
    """Cut-rank test: ``mu(a) <= |a| - 1`` and ``mu(a - {x}) == |a| - 1`` for all ``x``.

    Checking the maximal proper subsets is enough since subsets of full sets
    are full. Accepts a graph, a multigraph, or any oracle.
    """
    oracle = _as_oracle(oracle)
    if not a:
        return False
    s = a.bit_count()
    if oracle(a) > s - 1:
        return False
    x = a
    while x:
        low = x & -x
        if oracle(a ^ low) != s - 1:
            return False
        x ^= low
    return True


def is_minimal_local_set_by_definition(g: Graph, a: VertexSet) -> bool:
    """Definition-level check: some ``D`` generates ``a`` and none generates a
    nonempty proper subset of ``a``. Enumerates all ``2^|a|`` candidate ``D``."""
    _check_set(g.n, a)
    if not a:
        return False
    adj = g.adj
    pos = members(a)
    local = False
    odds = [0]
    for v in pos:
        row = adj[v]
        odds += [o ^ row for o in odds]
    # odds[i] is Odd of the subset of a picked by the bits of i over pos
    ds = [0]
    for v in pos:
        bit = 1 << v
        ds += [d | bit for d in ds]
    for d, odd in zip(ds, odds):
        if not d:
            continue
        ls = d | odd
        if ls == a:
            local = True
        elif ls & ~a == 0:
            return False
    return local


@dataclass(frozen=True)
class LocalSetRecord:
    vertices: VertexSet
    generators: tuple[VertexSet, ...]
    is_minimal: bool = True

    @property
    def size(self) -> int:
        return self.vertices.bit_count()

    def members(self) -> list[int]:
        return members(self.vertices)


@dataclass
class MlsStatistics:
    count: int
    min_size: int
    max_size: int
    size_histogram: dict[int, int] = field(default_factory=dict)


def _check_limit(n: int, limit: int | None) -> None:
    limit = DEFAULT_LIMITS.enumerate_max_n if limit is None else limit
    if n > limit:
        raise ResourceLimitError(f"order {n} exceeds the exhaustive limit of {limit} vertices")


def local_set_array(g: Graph, limit: int | None = None) -> np.ndarray:
    """``L[D] = D | Odd(D)`` for every bit-vector ``D`` in ``[0, 2^n)``."""
    _check_limit(g.n, limit)
    odd = np.zeros(1, dtype=np.int64)
    for row in g.adj:
        odd = np.concatenate((odd, odd ^ row))
    return np.arange(1 << g.n, dtype=np.int64) | odd


def minimal_mask(ls: np.ndarray, n: int) -> np.ndarray:
    """Boolean array over ``[0, 2^n)`` marking the inclusion-minimal local sets."""
    size = 1 << n
    local = np.zeros(size, dtype=bool)
    local[ls] = True
    local[0] = False
    # has[A]: some local set is contained in A (superset-closure of `local`)
    has = local.copy()
    for i in range(n):
        h = has.reshape(-1, 2, 1 << i)
        h[:, 1, :] |= h[:, 0, :]
    strict = np.zeros(size, dtype=bool)
    for i in range(n):
        s = strict.reshape(-1, 2, 1 << i)
        s[:, 1, :] |= has.reshape(-1, 2, 1 << i)[:, 0, :]
    return local & ~strict


def enumerate_minimal_local_sets(g: Graph, limit: int | None = None) -> list[LocalSetRecord]:
    """Every MLS of ``g`` with its generators, sorted by size then members.

    Brute force over all ``2^n`` generators; refuses orders above ``limit``.
    """
    ls = local_set_array(g, limit)
    minimal = minimal_mask(ls, g.n)
    ds = np.nonzero(minimal[ls])[0]
    groups: dict[int, list[int]] = {}
    for d, l in zip(ds.tolist(), ls[ds].tolist()):
        groups.setdefault(l, []).append(d)
    recs = [LocalSetRecord(l, tuple(sorted(gens))) for l, gens in groups.items()]
    recs.sort(key=lambda r: (r.size, r.members()))
    return recs


def mls_family(g: Graph, limit: int | None = None) -> frozenset[VertexSet]:
    ls = local_set_array(g, limit)
    return frozenset(np.nonzero(minimal_mask(ls, g.n))[0].tolist())


def mls_statistics(records: list[LocalSetRecord]) -> MlsStatistics:
    sizes = [r.size for r in records]
    hist = dict(sorted(Counter(sizes).items()))
    return MlsStatistics(len(sizes), min(sizes, default=0), max(sizes, default=0), hist)


def generator_count_from_cutrank(g, a: VertexSet, limit: int | None = None) -> int:
    """Number of generators of ``a`` computed from cut-rank values alone.

    Solves ``gens(A) = 2^(|A| - cutrk(A)) - sum_{B < A} gens(B)`` for every
    subset of ``a`` at once (Moebius inversion over the subset lattice).
    The empty set's term is 1 (for ``D = {}``) inside the sum, but the empty
    set itself is not local, so ``a = {}`` returns 0.
    """
    oracle = _as_oracle(g)
    k = a.bit_count()
    limit = DEFAULT_LIMITS.generator_count_max_size if limit is None else limit
    if k > limit:
        raise ResourceLimitError(f"|A| = {k} exceeds the limit of {limit}")
    if not a:
        return 0
    subsets = [0]
    for v in members(a):
        bit = 1 << v
        subsets += [s | bit for s in subsets]
    counts = np.array([1 << (s.bit_count() - oracle(s)) for s in subsets], dtype=np.int64)
    for i in range(k):
        c = counts.reshape(-1, 2, 1 << i)
        c[:, 1, :] -= c[:, 0, :]
    return int(counts[-1])


def local_min_degree(g: Graph, limit: int | None = None) -> int:
    """Smallest MLS size minus one."""
    if g.n == 0:
        raise UsageError("local minimum degree is undefined for the empty graph")
    return min(r.size for r in enumerate_minimal_local_sets(g, limit)) - 1


def max_mls_size_bound(n: int) -> int:
    """Largest possible MLS size in a graph of order ``n`` (tight for every n)."""
    if n < 1:
        raise UsageError("bound defined for n >= 1")
    return n // 2 if n % 4 == 0 else n // 2 + 1


def binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def count_bound_exponent(r: float) -> float:
    """Exponent ``e(r) = 1 - (1-r) H2(1 / (2(1-r)))`` so the bound grows like ``2^(e n)``."""
    if not 0 <= r <= 0.5:
        raise UsageError("r must lie in [0, 1/2]")
    return 1 - (1 - r) * binary_entropy(1 / (2 * (1 - r)))


def count_bound_base(r: float) -> float:
    return 2.0 ** count_bound_exponent(r)


def _check_bound_args(n: int, m: int) -> None:
    if n < 1 or not 1 <= m or 2 * m > n:
        raise UsageError("need 1 <= m <= n/2")


def log2_mls_count_lower_bound(n: int, m: int) -> float:
    """``log2`` of :func:`mls_count_lower_bound`; ``-inf`` at ``m = n/2``."""
    _check_bound_args(n, m)
    if 2 * m == n:
        return -math.inf
    r = m / n
    return math.log2(1 - 2 * r) - math.log2(3 * math.sqrt(n)) + n * count_bound_exponent(r)


def mls_count_lower_bound(n: int, m: int) -> float:
    """Lower bound on the number of MLS of an order-``n`` graph whose MLS all have size >= ``m``.

    A formula evaluator (double precision); whether the hypothesis holds for a
    given graph is the caller's business. Returns 0.0 at ``m = n/2`` and
    ``inf`` past the double range (use :func:`log2_mls_count_lower_bound` there).
    """
    e = log2_mls_count_lower_bound(n, m)
    if e == -math.inf:
        return 0.0
    return 2.0 ** e if e < 1024 else math.inf


def verify_generator_structure(rec: LocalSetRecord) -> bool:
    """An MLS has one generator, or three of the form D0, D1, D0^D1 on a set of even size."""
    gens = rec.generators
    if len(gens) == 1:
        return True
    if len(gens) != 3 or len(set(gens)) != 3 or 0 in gens:
        return False
    return gens[0] ^ gens[1] ^ gens[2] == 0 and rec.size % 2 == 0
