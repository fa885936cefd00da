"""Constructing a minimal-local-set cover from a connectivity oracle.

For a target vertex ``a`` the search runs in two stages:

1. grow a full set ``A`` avoiding ``a`` until ``A | {a}`` stops being full.
   Each growth step starts from the complement ``B = V - (A | {a})``, which
   has ``mu(B) = |A| + 1`` by symmetry, and peels vertices off ``B`` while
   keeping ``mu(B) >= |A| + 1`` until ``|B| = |A| + 1``;
2. shrink ``A`` in one ascending pass, dropping ``b`` whenever
   ``(A - {b}) | {a}`` is still not full. ``A | {a}`` is then an MLS.

Only the oracle is consulted, so anything symmetric, linearly bounded and
submodular works (graph cut-rank, q-multigraph cut-rank, matroid
connectivity). Ties are broken by lowest vertex index throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import OracleAxiomError, UsageError
from .graph import Graph, MultiGraph, VertexSet, members, universe
from .rank import ConnectivityOracle, CutRankOracle


@dataclass
class TargetTrace:
    target: int
    grown: VertexSet = 0
    growth_sets: list[VertexSet] = field(default_factory=list)
    shrink_removed: list[int] = field(default_factory=list)
    mls: VertexSet = 0
    queries: list[tuple[VertexSet, int]] = field(default_factory=list)

    @property
    def evaluations(self) -> int:
        return len(self.queries)


@dataclass
class CoverTrace:
    targets: list[TargetTrace] = field(default_factory=list)

    @property
    def evaluations(self) -> int:
        return sum(t.evaluations for t in self.targets)

    def replay(self, oracle: ConnectivityOracle) -> bool:
        """True iff ``oracle`` reproduces every recorded value."""
        return all(oracle(a) == v for t in self.targets for a, v in t.queries)


@dataclass
class MlsCover:
    n: int
    sets: list[VertexSet]
    trace: CoverTrace | None = None
    queries: int = 0

    @property
    def covered(self) -> VertexSet:
        out = 0
        for s in self.sets:
            out |= s
        return out

    @property
    def evaluations(self) -> int:
        return self.queries if self.trace is None else self.trace.evaluations

    def as_lists(self) -> list[list[int]]:
        return [members(s) for s in self.sets]


class _Recorder:
    """Wraps an oracle and logs every query into a :class:`TargetTrace`."""

    __slots__ = ("oracle", "queries")

    def __init__(self, oracle, queries):
        self.oracle = oracle
        self.queries = queries

    def __call__(self, a):
        v = self.oracle(a)
        self.queries.append((a, v))
        return v


def _check_target(oracle: ConnectivityOracle, a: int) -> None:
    if not 0 <= a < oracle.n:
        raise UsageError(f"vertex {a} out of range for a universe of size {oracle.n}")


def _grow(mu, n: int, a: int, trace: TargetTrace | None) -> VertexSet:
    full = universe(n)
    abit = 1 << a
    grown, size = 0, 0
    while mu(grown | abit) == size + 1:
        target = size + 1
        b_set = full & ~(grown | abit)
        b_size = n - size - 1
        if b_size < target:
            raise OracleAxiomError(
                f"full set of size {target} has a complement of size {b_size}")
        while b_size > target:
            x = b_set
            while x:
                low = x & -x
                if mu(b_set ^ low) >= target:
                    break
                x ^= low
            else:
                raise OracleAxiomError(
                    f"no removable vertex in {members(b_set)} keeps the value >= {target}")
            b_set ^= low
            b_size -= 1
        grown, size = b_set, target
        if trace is not None:
            trace.growth_sets.append(grown)
    return grown


def _shrink(mu, a: int, big: VertexSet, trace: TargetTrace | None) -> VertexSet:
    abit = 1 << a
    cur, size = big, big.bit_count()
    for b in members(big):
        cand = cur & ~(1 << b)
        # |cand | {a}| == size, so "not full" means the value is below size
        if mu(cand | abit) < size:
            cur, size = cand, size - 1
            if trace is not None:
                trace.shrink_removed.append(b)
    return cur | abit


def grow_full_avoiding(oracle: ConnectivityOracle, a: int,
                       trace: TargetTrace | None = None) -> VertexSet:
    """A full set ``A`` with ``a`` not in ``A`` and ``A | {a}`` not full."""
    _check_target(oracle, a)
    mu = oracle if trace is None else _Recorder(oracle, trace.queries)
    grown = _grow(mu, oracle.n, a, trace)
    if trace is not None:
        trace.grown = grown
    return grown


def shrink_to_mls(oracle: ConnectivityOracle, a: int, big: VertexSet,
                  trace: TargetTrace | None = None, check: bool = True) -> VertexSet:
    """Minimal local set ``C | {a}`` with ``C`` a subset of ``big``.

    Requires ``big`` full, ``a`` not in ``big`` and ``big | {a}`` not full.
    """
    _check_target(oracle, a)
    if check:
        s = big.bit_count()
        if big >> a & 1 or oracle(big) != s or oracle(big | 1 << a) >= s + 1:
            raise UsageError("shrink_to_mls needs a full set avoiding the target "
                             "whose union with the target is not full")
    mu = oracle if trace is None else _Recorder(oracle, trace.queries)
    mls = _shrink(mu, a, big, trace)
    if trace is not None:
        trace.mls = mls
    return mls


def find_mls_containing(oracle: ConnectivityOracle, a: int,
                        trace: TargetTrace | None = None) -> VertexSet:
    """A minimal local set (relative to ``oracle``) that contains ``a``."""
    big = grow_full_avoiding(oracle, a, trace)
    return shrink_to_mls(oracle, a, big, trace, check=False)


def mls_cover(oracle: ConnectivityOracle, trace: bool = False) -> MlsCover:
    """Greedy cover: process uncovered vertices in ascending order.

    At most ``n`` sets. The total query count is always kept (read off the
    oracle's counter, so do not share the oracle with other threads meanwhile);
    ``trace=True`` also records every query per target.
    """
    n = oracle.n
    before = oracle.evaluations
    cover_trace = CoverTrace() if trace else None
    sets: list[VertexSet] = []
    covered = 0
    for a in range(n):
        if covered >> a & 1:
            continue
        t = None
        if cover_trace is not None:
            t = TargetTrace(a)
            cover_trace.targets.append(t)
        s = find_mls_containing(oracle, a, t)
        sets.append(s)
        covered |= s
    return MlsCover(n, sets, cover_trace, oracle.evaluations - before)


def graph_cover(g: Graph | MultiGraph, trace: bool = False) -> MlsCover:
    return mls_cover(CutRankOracle(g), trace)


def mls_cover_multigraph(mg: MultiGraph, trace: bool = False) -> MlsCover:
    return mls_cover(CutRankOracle(mg), trace)


def intersection_graph(cover: MlsCover) -> Graph:
    """One vertex per cover set; edges join intersecting sets."""
    k = len(cover.sets)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)
             if cover.sets[i] & cover.sets[j]]
    return Graph.from_edges(k, edges)


# Per-target query bound: at most n/2 growth rounds, each with fewer than n
# removals scanning fewer than n candidates, plus n shrink queries.
EVALUATION_CONSTANT = 2


def evaluation_budget(n: int, per_target: bool = False) -> int:
    """``c n^3`` per target, ``c n^4`` per cover, with ``c = EVALUATION_CONSTANT``."""
    return EVALUATION_CONSTANT * max(n, 1) ** (3 if per_target else 4)
