"""Width solvers against independently formulated oracles.

The treewidth solver minimises over elimination orderings (chordal
completions); the guard oracle branches on root bags and separated blocks
instead, and tiny instances are additionally checked against exhaustive
enumeration of decompositions.
"""

import pytest

from oracles import (
    alpha_chromatic_by_functions,
    degeneracy_maxmin_induced,
    degeneracy_maxmin_subgraphs,
    pw_by_all_decompositions,
    pw_by_orderings,
    td_by_all_forests,
    tw_by_all_decompositions,
    tw_by_separator_branching,
)

from widthlab.config import Budgets
from widthlab.decomp import CostKind, cost, validate
from widthlab.graphs import (
    BudgetExceededError,
    Graph,
    complete_graph,
    copies,
    cycle_graph,
    enumerate_graphs,
    path_graph,
    random_graph,
    star,
)
from widthlab.invariants import is_chordal
from widthlab.widths import (
    alpha_chromatic,
    degeneracy,
    lambda_pathwidth,
    lambda_pw_at_most,
    lambda_td_at_most,
    lambda_treedepth,
    lambda_treewidth,
)
from widthlab.modulators import vertex_cover_number, alpha_vertex_cover

CARD = CostKind.CARDINALITY
ALPHA = CostKind.INDEPENDENCE
BOTH = (CARD, ALPHA)


# ---------------------------------------------------------------------------
# Cross-oracle agreement


def test_treewidth_agrees_with_separator_oracle_n5(small_graphs):
    for g in small_graphs:
        for kind in BOTH:
            assert (
                lambda_treewidth(g, kind).value == tw_by_separator_branching(g, kind)
            ), g.edges()


def test_treewidth_agrees_with_separator_oracle_n6():
    for g in enumerate_graphs(6):
        for kind in BOTH:
            assert lambda_treewidth(g, kind).value == tw_by_separator_branching(g, kind)


def test_widths_agree_with_exhaustive_decompositions_n4():
    for n in range(1, 5):
        for g in enumerate_graphs(n):
            for kind in BOTH:
                assert lambda_treewidth(g, kind).value == tw_by_all_decompositions(g, kind)
                assert lambda_pathwidth(g, kind).value == pw_by_all_decompositions(g, kind)


def test_pathwidth_agrees_with_ordering_oracle(small_graphs):
    for g in small_graphs:
        for kind in BOTH:
            assert lambda_pathwidth(g, kind).value == pw_by_orderings(g, kind)


def test_treedepth_agrees_with_forest_enumeration():
    for n in range(1, 5):
        for g in enumerate_graphs(n):
            for kind in BOTH:
                assert lambda_treedepth(g, kind).value == td_by_all_forests(g, kind)


def test_treedepth_agrees_with_forest_enumeration_n5():
    for g in enumerate_graphs(5):
        for kind in BOTH:
            assert lambda_treedepth(g, kind).value == td_by_all_forests(g, kind)


def test_degeneracy_matches_maxmin_bruteforce(small_graphs):
    for g in small_graphs:
        for kind in BOTH:
            assert degeneracy(g, kind).value == degeneracy_maxmin_induced(g, kind)


def test_degeneracy_subgraph_maxmin_attained_on_induced():
    for n in range(1, 5):
        for g in enumerate_graphs(n):
            for kind in BOTH:
                assert degeneracy_maxmin_subgraphs(g, kind) == degeneracy_maxmin_induced(
                    g, kind
                )


def test_alpha_chromatic_matches_function_enumeration():
    for n in range(1, 5):
        for g in enumerate_graphs(n):
            assert alpha_chromatic(g).value == alpha_chromatic_by_functions(g)


# ---------------------------------------------------------------------------
# Known values


def test_treewidth_known(zoo):
    assert lambda_treewidth(zoo["K5"], CARD).value == 5
    assert lambda_treewidth(zoo["P4"], CARD).value == 2
    assert lambda_treewidth(zoo["C4"], ALPHA).value == 2
    assert lambda_treewidth(zoo["null"], CARD).value == 0


def test_chordal_graphs_have_alpha_treewidth_one(small_graphs):
    for g in small_graphs:
        if is_chordal(g)[0]:
            assert lambda_treewidth(g, ALPHA).value == 1


def test_classical_treewidth_plus_one_convention():
    for s in range(1, 7):
        assert lambda_treewidth(complete_graph(s), CARD).value == s
    for n in (2, 4, 7):
        assert lambda_treewidth(star(n), CARD).value == 2
        assert lambda_treewidth(path_graph(n + 1), CARD).value == 2
    for n in range(4, 9):
        assert lambda_treewidth(cycle_graph(n), CARD).value == 3


def test_pathwidth_known(zoo):
    assert lambda_pathwidth(zoo["K1"], ALPHA).value == 1
    assert lambda_pathwidth(zoo["P5"], CARD).value == 2
    from widthlab.constructions import gamma_family

    assert lambda_pathwidth(gamma_family(2), ALPHA).value == 2


def test_treedepth_known(zoo):
    assert lambda_treedepth(path_graph(7), CARD).value == 3
    for s in range(1, 7):
        assert lambda_treedepth(complete_graph(s), CARD).value == s
    from widthlab.constructions import gamma_family

    assert lambda_treedepth(gamma_family(2), ALPHA).value == 2


def test_degeneracy_known(zoo):
    assert degeneracy(zoo["C5"], CARD).value == 2
    assert degeneracy(zoo["C5"], ALPHA).value == 2
    from widthlab.constructions import gamma_family

    for idx in (2, 3):
        assert degeneracy(gamma_family(idx), ALPHA).value == 1


def test_chordal_alpha_degeneracy_one(small_graphs):
    # Peeling simplicial vertices keeps the cost at 1; edgeless graphs have
    # empty neighbourhoods and land at 0.
    for g in small_graphs:
        if g.n and is_chordal(g)[0]:
            expected = 1 if g.num_edges() else 0
            assert degeneracy(g, ALPHA).value == expected


def test_alpha_chromatic_known():
    for s in range(1, 6):
        assert alpha_chromatic(complete_graph(s)).value == 1
    assert alpha_chromatic(copies(2, complete_graph(2))).value == 2
    assert alpha_chromatic(copies(3, complete_graph(3))).value >= 3
    assert alpha_chromatic(Graph(0, ())).value == 0


# ---------------------------------------------------------------------------
# Decision procedures


def test_decision_forms_match_exact(small_graphs):
    for g in small_graphs[:40]:
        for kind in BOTH:
            pw = lambda_pathwidth(g, kind).value
            td = lambda_treedepth(g, kind).value
            for k in range(0, g.n + 2):
                assert lambda_pw_at_most(g, kind, k) == (pw <= k)
                assert lambda_td_at_most(g, kind, k) == (td <= k)


def test_decision_forms_match_exact_random_medium():
    for seed in range(40):
        import random as _random

        rng = _random.Random(seed)
        n = rng.randint(6, 9)
        g = random_graph(n, rng.uniform(0.15, 0.7), 4000 + seed)
        for kind in BOTH:
            pw = lambda_pathwidth(g, kind).value
            td = lambda_treedepth(g, kind).value
            for k in (pw - 1, pw, td - 1, td):
                assert lambda_pw_at_most(g, kind, k) == (pw <= k)
                assert lambda_td_at_most(g, kind, k) == (td <= k)


def test_budgets_are_enforced():
    big = random_graph(12, 0.3, 7)
    with pytest.raises(BudgetExceededError):
        lambda_treewidth(big, ALPHA)
    tiny_budget = Budgets(pw_exact=5)
    with pytest.raises(BudgetExceededError):
        lambda_pathwidth(random_graph(6, 0.5, 1), CARD, tiny_budget)
    with pytest.raises(BudgetExceededError):
        alpha_chromatic(random_graph(10, 0.5, 1))


# ---------------------------------------------------------------------------
# Witnesses and invariants


def test_witnesses_validate_and_match_value(small_graphs):
    for g in small_graphs:
        for kind in BOTH:
            for solver in (lambda_treewidth, lambda_pathwidth, lambda_treedepth):
                result = solver(g, kind)
                assert validate(g, result.witness) == []
                assert cost(g, result.witness, kind, check=False) == result.value


def test_chain_inequality_small(small_graphs):
    for g in small_graphs:
        for kind in BOTH:
            tw = lambda_treewidth(g, kind).value
            pw = lambda_pathwidth(g, kind).value
            td = lambda_treedepth(g, kind).value
            vc = (
                vertex_cover_number(g)[0]
                if kind is CARD
                else alpha_vertex_cover(g)
            )
            assert tw <= pw <= td <= vc + 1


def test_alpha_width_never_exceeds_cardinality_width(small_graphs):
    for g in small_graphs:
        assert lambda_treewidth(g, ALPHA).value <= lambda_treewidth(g, CARD).value
        assert lambda_pathwidth(g, ALPHA).value <= lambda_pathwidth(g, CARD).value
        assert lambda_treedepth(g, ALPHA).value <= lambda_treedepth(g, CARD).value
