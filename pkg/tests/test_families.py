import pytest

from mlscover.errors import UsageError
from mlscover.families import (FAMILIES, FamilySpec, bipartite_matching_witnesses,
                               bipartite_minus_matching, bound_tight, complete, complete_bipartite,
                               cycle, edgeless, fig2_counterexample, path, path_mls_witness,
                               random_graph, random_multigraph)
from mlscover.graph import Graph, closed_neighborhood, members, vset
from mlscover.local_sets import (is_minimal_local_set, is_minimal_local_set_by_definition,
                                 max_mls_size_bound, mls_family)
from mlscover.rank import CutRankOracle


def test_basic_families():
    assert cycle(4) == Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert path(3).num_edges() == 2
    assert complete(5).num_edges() == 10
    assert edgeless(3).num_edges() == 0
    kb = complete_bipartite(2, 3)
    assert kb.num_edges() == 6 and not kb.has_edge(0, 1) and kb.has_edge(1, 4)
    g = bipartite_minus_matching(3)
    assert g.num_edges() == 6 and not g.has_edge(0, 3) and g.has_edge(0, 4)


@pytest.mark.parametrize("bad", [lambda: cycle(2), lambda: path(0), lambda: complete_bipartite(0, 2),
                                 lambda: bipartite_minus_matching(1), lambda: bound_tight(0),
                                 lambda: random_graph(3, 1.5, 0), lambda: random_multigraph(3, 4, 0),
                                 lambda: path_mls_witness(6, 2)])
def test_invalid_parameters(bad):
    with pytest.raises(UsageError):
        bad()


@pytest.mark.parametrize("n,size", [(7, 4), (6, 4), (8, 4)])
def test_bound_tight_witness_sizes(n, size):
    g, w = bound_tight(n)
    assert g.n == n and w.bit_count() == size
    assert is_minimal_local_set(CutRankOracle(g), w)
    assert is_minimal_local_set_by_definition(g, w)


def test_bound_tight_all_orders():
    for n in range(1, 25):
        g, w = bound_tight(n)
        assert w.bit_count() == max_mls_size_bound(n)
        assert is_minimal_local_set(CutRankOracle(g), w)
        assert w == closed_neighborhood(g, 0)


def test_counterexample_structure():
    g = fig2_counterexample()
    fam = mls_family(g)
    assert g.n == 15
    n0, n1 = closed_neighborhood(g, 0), closed_neighborhood(g, 1)
    assert sorted(s for s in fam if s & ~n0 == 0) == sorted(vset(p) for p in [(3, 4), (5, 6), (7, 8)])
    assert {s for s in fam if s & ~n1 == 0} == {vset((v, v + 1)) for v in range(3, 15, 2)}
    assert vset([0, 1, 2]) in fam
    for s in fam:
        if s & 0b111:
            assert all(s & ~closed_neighborhood(g, u) for u in range(15))


def test_path_witnesses():
    for n in range(3, 13):
        o = CutRankOracle(path(n))
        sizes = set()
        for k in range((n + 1) // 2 - 1):
            w = path_mls_witness(n, k)
            assert is_minimal_local_set(o, w)
            sizes.add(w.bit_count())
        assert sizes == set(range(2, (n + 1) // 2 + 1))


def test_bipartite_matching_witnesses_distinct():
    for k in range(2, 6):
        ws = bipartite_matching_witnesses(k)
        assert len(set(ws)) == len(ws) == 2 ** (k - 1)
        assert all(w.bit_count() == k for w in ws)
    assert bipartite_matching_witnesses(2) == [vset([0, 3]), vset([1, 2])]


def test_random_graph_deterministic_and_extremes():
    assert random_graph(10, 0.3, 4) == random_graph(10, 0.3, 4)
    assert random_graph(10, 0.0, 1).num_edges() == 0
    assert random_graph(10, 1.0, 1) == complete(10)
    assert random_graph(0, 0.5, 0).n == 0
    mg = random_multigraph(6, 5, 3)
    assert mg == random_multigraph(6, 5, 3) and mg.q == 5
    assert list(random_multigraph(6, 3, 3, edge_probability=0.0).edges()) == []


def test_family_spec_registry():
    for name, (_, arity, _) in FAMILIES.items():
        assert arity
    g, w = FamilySpec("bound-tight", (8,)).build()
    assert w.bit_count() == 4
    g, w = FamilySpec("cycle", (4,)).build()
    assert w is None and g == cycle(4)
    assert FamilySpec("fig2").build()[0] == fig2_counterexample()
    g, w = FamilySpec("path-witness", (7, 2)).build()
    assert members(w) == [0, 2, 4, 5]
    with pytest.raises(UsageError):
        FamilySpec("nope").build()
    with pytest.raises(UsageError):
        FamilySpec("cycle", (4, 5)).build()
