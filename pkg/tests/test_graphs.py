"""Graph type, named families, enumeration, and canonical forms."""

import pytest
from hypothesis import given, settings, strategies as st

from oracles import burnside_graph_count

from widthlab.graphs import (
    BudgetExceededError,
    Graph,
    are_isomorphic,
    canonical_form,
    complete_bipartite,
    complete_graph,
    copies,
    cycle_graph,
    enumerate_graphs,
    named_graph,
    path_graph,
    random_graph,
    random_permutation,
    star,
)


def test_graph_validation_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        Graph(2, (1 << 0, 0))  # self-loop at 0
    with pytest.raises(ValueError):
        Graph(2, (1 << 1, 0))  # 0->1 without 1->0
    with pytest.raises(ValueError):
        Graph(1, (1 << 3,))  # out of range
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_named_families():
    assert path_graph(3).edges() == [(0, 1), (1, 2)]
    assert cycle_graph(4).num_edges() == 4
    assert complete_graph(5).num_edges() == 10
    assert complete_bipartite(2, 3).num_edges() == 6
    assert star(5).degree(0) == 5
    assert copies(2, complete_graph(2)).edges() == [(0, 1), (2, 3)]
    assert named_graph("3K2").num_edges() == 3
    assert named_graph("K2,3").n == 5
    assert named_graph("P7").n == 7
    assert named_graph("S2").n == 7
    with pytest.raises(ValueError):
        named_graph("Q5")


def test_random_graph_deterministic():
    a = random_graph(5, 0.5, seed=1)
    b = random_graph(5, 0.5, seed=1)
    assert a == b
    assert random_graph(8, 0.0, 3).num_edges() == 0
    assert random_graph(8, 1.0, 3).num_edges() == 28


def test_delete_returns_old_to_new_map():
    g = path_graph(4)
    h, remap = g.delete([1])
    assert h.n == 3
    assert remap == {0: 0, 2: 1, 3: 2}
    assert h.edges() == [(1, 2)]  # old edge 2-3


def test_induced_subgraph():
    g = cycle_graph(5)
    sub, old = g.induced(0b01011)  # vertices 0,1,3
    assert old == (0, 1, 3)
    assert sub.edges() == [(0, 1)]


def test_components():
    g = copies(3, complete_graph(2))
    assert g.components() == [0b11, 0b1100, 0b110000]


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_enumeration_counts_match_burnside(n, count):
    assert len(list(enumerate_graphs(n))) == count
    if n <= 6:
        assert burnside_graph_count(n) == count


def test_enumeration_budget():
    with pytest.raises(BudgetExceededError):
        list(enumerate_graphs(9))


def test_enumeration_pairwise_non_isomorphic():
    graphs = list(enumerate_graphs(5))
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert not are_isomorphic(graphs[i], graphs[j])


def test_enumeration_deterministic_order():
    first = [g.adj for g in enumerate_graphs(5)]
    second = [g.adj for g in enumerate_graphs(5)]
    assert first == second


@given(st.integers(0, 6), st.integers(0, 10_000), st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_canonical_form_is_isomorphism_invariant(n, gseed, pseed):
    g = random_graph(n, 0.5, gseed)
    perm = random_permutation(n, pseed)
    assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_canonical_form_separates_non_isomorphic():
    assert canonical_form(path_graph(4)) != canonical_form(star(3))
