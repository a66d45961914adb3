"""MWIS solvers: exact oracle, bipartite min-cut route, OCT route, max flow."""

import random

import pytest

from oracles import brute_mwis

from widthlab.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    mask_of,
    path_graph,
    random_graph,
)
from widthlab.invariants import SubsetAlpha, is_bipartite
from widthlab.modulators import vertex_cover_number
from widthlab.mwis import (
    FlowNetwork,
    MwisResult,
    WeightedGraph,
    find_oct_with_bounded_alpha,
    max_flow,
    mwis_bipartite,
    mwis_exact,
    mwis_via_oct,
)


def _assert_independent(g: Graph, vertices):
    picked = mask_of(vertices)
    for v in vertices:
        assert not g.adj[v] & picked


def test_flow_network_basics():
    net = FlowNetwork(3, 0, 2)
    net.add_arc(0, 1, 3)
    net.add_arc(1, 2, 3)
    value, side = max_flow(net)
    assert value == 3
    assert 0 in side and 2 not in side

    net = FlowNetwork(4, 0, 3)
    net.add_arc(0, 1, 1)
    net.add_arc(1, 3, 1)
    net.add_arc(0, 2, 1)
    net.add_arc(2, 3, 1)
    assert net.max_flow() == 2


def test_flow_network_validation():
    net = FlowNetwork(3, 0, 2)
    with pytest.raises(ValueError):
        net.add_arc(1, 0, 1)  # into the source
    with pytest.raises(ValueError):
        net.add_arc(2, 1, 1)  # out of the sink
    with pytest.raises(ValueError):
        net.add_arc(0, 1, -2)
    with pytest.raises(ValueError):
        FlowNetwork(2, 0, 0)


def test_mwis_exact_known():
    wg = WeightedGraph(path_graph(3), (2, 1, 2))
    result = mwis_exact(wg)
    assert result == MwisResult(4, (0, 2))
    assert mwis_exact(WeightedGraph(complete_graph(4), (5, 1, 1, 1))).weight == 5
    assert mwis_exact(WeightedGraph(Graph(3, (0, 0, 0)), (1, 2, 3))).weight == 6


def test_mwis_exact_against_bruteforce(small_graphs):
    rng = random.Random(7)
    for g in small_graphs:
        weights = tuple(rng.randint(0, 20) for _ in range(g.n))
        wg = WeightedGraph(g, weights)
        result = mwis_exact(wg)
        assert result.weight == brute_mwis(g, weights)
        _assert_independent(g, result.vertices)
        assert sum(weights[v] for v in result.vertices) == result.weight
        assert all(weights[v] > 0 for v in result.vertices)


def test_mwis_bipartite_known():
    wg = WeightedGraph(complete_bipartite(3, 3), (1, 1, 1, 2, 2, 2))
    assert mwis_bipartite(wg) == MwisResult(6, (3, 4, 5))
    wg = WeightedGraph(cycle_graph(4), (1, 1, 1, 1))
    assert mwis_bipartite(wg).weight == 2
    wg = WeightedGraph(complete_graph(2), (7, 7))
    assert mwis_bipartite(wg) == MwisResult(7, (0,))
    with pytest.raises(ValueError):
        mwis_bipartite(WeightedGraph(cycle_graph(5), (1,) * 5))


def test_mwis_bipartite_against_exact_random():
    count = 0
    for seed in range(300):
        rng = random.Random(seed)
        n = rng.randint(2, 12)
        left = rng.randint(1, n - 1)
        edges = [
            (u, v)
            for u in range(left)
            for v in range(left, n)
            if rng.random() < 0.5
        ]
        g = Graph.from_edges(n, edges)
        weights = tuple(rng.randint(0, 50) for _ in range(n))
        wg = WeightedGraph(g, weights)
        got = mwis_bipartite(wg)
        assert got.weight == mwis_exact(wg).weight
        _assert_independent(g, got.vertices)
        count += 1
    assert count == 300


def test_koenig_duality_unit_weights():
    # On bipartite unit-weight inputs: MWIS size + min vertex cover = n.
    for seed in range(60):
        rng = random.Random(1000 + seed)
        n = rng.randint(2, 10)
        left = rng.randint(1, n - 1)
        edges = [
            (u, v)
            for u in range(left)
            for v in range(left, n)
            if rng.random() < 0.5
        ]
        g = Graph.from_edges(n, edges)
        wg = WeightedGraph(g, (1,) * n)
        assert mwis_bipartite(wg).weight + vertex_cover_number(g)[0] == n


def test_find_oct_known():
    assert find_oct_with_bounded_alpha(cycle_graph(5), 1) == (0,)
    assert find_oct_with_bounded_alpha(complete_bipartite(3, 3), 0) == ()
    # K5 needs 3 deletions; they form a clique, so alpha(S) = 1 <= 1.
    s = find_oct_with_bounded_alpha(complete_graph(5), 1)
    assert s is not None and len(s) == 3
    alpha = SubsetAlpha(complete_graph(5))
    assert alpha(mask_of(s)) == 1
    assert find_oct_with_bounded_alpha(cycle_graph(5), -1) is None


def test_find_oct_attains_minimum_alpha(small_graphs):
    # With an unconstrained bound, the search returns a transversal whose
    # independence number equals the alpha-variant of the OCT modulator
    # number (the minimum is attained on an inclusion-minimal transversal).
    from widthlab.decomp import CostKind
    from widthlab.modulators import ModulatorSpec, modulator_number

    for g in small_graphs[:40]:
        s = find_oct_with_bounded_alpha(g, g.n)
        alpha = SubsetAlpha(g)
        expected = modulator_number(g, ModulatorSpec("chi", 2), CostKind.INDEPENDENCE)[0]
        assert alpha(mask_of(s)) == expected


def test_mwis_network_cut_value():
    # Total weight 9 minus the K_{3,3} MWIS weight 6 leaves a cut of 3.
    g = complete_bipartite(3, 3)
    weights = (1, 1, 1, 2, 2, 2)
    net = FlowNetwork(8, 6, 7)
    for v in range(3):
        net.add_arc(6, v, weights[v])
    for v in range(3, 6):
        net.add_arc(v, 7, weights[v])
    for u, v in g.edges():
        net.add_arc(u, v, sum(weights) + 1)
    assert net.max_flow() == 3


def test_find_oct_respects_alpha_bound(small_graphs):
    for g in small_graphs[:40]:
        alpha = SubsetAlpha(g)
        s = find_oct_with_bounded_alpha(g, 1)
        if s is None:
            continue
        rest, _ = g.induced(g.full_mask & ~mask_of(s))
        assert is_bipartite(rest)[0]
        assert alpha(mask_of(s)) <= 1


def test_mwis_via_oct_known():
    wg = WeightedGraph(cycle_graph(5), (1,) * 5)
    assert mwis_via_oct(wg, 1).weight == 2
    wg = WeightedGraph(complete_graph(4), (5, 1, 1, 1))
    assert mwis_via_oct(wg, 1).weight == 5
    with pytest.raises(ValueError):
        mwis_via_oct(WeightedGraph(complete_graph(5), (1,) * 5), 0)


def test_mwis_via_oct_with_k0_matches_bipartite():
    wg = WeightedGraph(complete_bipartite(2, 3), (3, 1, 2, 2, 2))
    assert mwis_via_oct(wg, 0).weight == mwis_bipartite(wg).weight


def test_mwis_via_oct_equals_exact_all_small(small_graphs):
    rng = random.Random(11)
    for g in small_graphs:
        weights = tuple(rng.randint(0, 30) for _ in range(g.n))
        wg = WeightedGraph(g, weights)
        k = 0
        while find_oct_with_bounded_alpha(g, k) is None:
            k += 1
        result = mwis_via_oct(wg, k)
        assert result.weight == mwis_exact(wg).weight
        _assert_independent(g, result.vertices)


def test_weighted_graph_validation():
    with pytest.raises(ValueError):
        WeightedGraph(path_graph(2), (1,))
    with pytest.raises(ValueError):
        WeightedGraph(path_graph(2), (1, -1))


def test_results_deterministic():
    g = random_graph(10, 0.4, 99)
    wg = WeightedGraph(g, tuple(range(10)))
    a = mwis_exact(wg)
    b = mwis_exact(wg)
    assert a == b
    k = 0
    while find_oct_with_bounded_alpha(g, k) is None:
        k += 1
    assert mwis_via_oct(wg, k) == mwis_via_oct(wg, k)
