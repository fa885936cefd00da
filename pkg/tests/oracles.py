"""Independent reference implementations used only by the tests.

Everything here works straight from definitions (sets of edges, counting
spans) and shares no code path with the package beyond the Graph container.
"""

from itertools import combinations, product
import math

from hypothesis import strategies as st

from mlscover.graph import Graph, MultiGraph


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


def subsets(vertices):
    vertices = list(vertices)
    for k in range(len(vertices) + 1):
        for c in combinations(vertices, k):
            yield frozenset(c)


def to_mask(s):
    return sum(1 << v for v in s)


def odd_by_definition(g, d):
    """{v : |N(v) & D| odd}, neighborhoods read off the edge set."""
    es = edge_set(g)
    return frozenset(v for v in range(g.n)
                     if sum(frozenset((v, u)) in es for u in d) % 2 == 1)


def local_complement_by_edges(g, u):
    es = edge_set(g)
    nb = [v for v in range(g.n) if frozenset((u, v)) in es]
    es ^= {frozenset(p) for p in combinations(nb, 2)}
    return Graph.from_edges(g.n, (tuple(e) for e in es))


def span_rank(rows, q=2):
    """Rank as log_q of the number of distinct linear combinations of ``rows``."""
    if not rows:
        return 0
    seen = set()
    for coeffs in product(range(q), repeat=len(rows)):
        seen.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q
                       for j in range(len(rows[0]))))
    return round(math.log(len(seen), q))


def cut_rows(g, a):
    m = g.to_numpy()
    comp = [v for v in range(g.n) if v not in a]
    return [[int(m[u, c]) for c in comp] for u in sorted(a)]


def cutrank_by_span(g, a):
    q = g.q if isinstance(g, MultiGraph) else 2
    return span_rank(cut_rows(g, a), q)


def generators_by_definition(g, a):
    return sorted(to_mask(d) for d in subsets(a) if d | odd_by_definition(g, d) == a and a)


def local_sets_by_definition(g):
    return {s for s in subsets(range(g.n)) if s and generators_by_definition(g, s)}


def mls_by_definition(g):
    ls = local_sets_by_definition(g)
    return {s for s in ls if not any(t < s for t in ls)}


def q_mls_by_rank(mg, a):
    """MLS test over F_q straight from the definition: all proper subsets full, a not full."""
    if not a:
        return False
    if cutrank_by_span(mg, a) > len(a) - 1:
        return False
    return all(cutrank_by_span(mg, b) == len(b) for b in subsets(a) if b != a)


@st.composite
def graphs(draw, min_n=0, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (p for p, b in zip(pairs, bits) if b))


@st.composite
def graph_and_set(draw, min_n=0, max_n=12):
    g = draw(graphs(min_n, max_n))
    a = draw(st.integers(0, (1 << g.n) - 1)) if g.n else 0
    return g, a
