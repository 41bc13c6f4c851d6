import pytest
from hypothesis import given, settings

from albertson.census import enumerate_nonisomorphic
from albertson.coloring import (
    BudgetExceeded,
    audit,
    chromatic_number,
    dsatur_greedy,
    excess,
    find_k_coloring,
    greedy_clique,
    is_k_colorable,
    is_proper_coloring,
    is_r_critical,
    optimal_coloring,
)
from albertson.graph import (
    delete_edge,
    lexicographic_product,
    make_complete,
    make_cycle,
    make_kr2_minus_c5,
)
from oracles import brute_chromatic_number, graphs


def test_k_colorable_examples():
    assert not is_k_colorable(make_complete(7), 6)
    assert not is_k_colorable(make_cycle(5), 2)
    assert is_k_colorable(make_cycle(5), 3)
    assert is_k_colorable(make_kr2_minus_c5(5), 5)
    assert not is_k_colorable(make_kr2_minus_c5(5), 4)


def test_witness_is_proper():
    g = make_kr2_minus_c5(6)
    col = find_k_coloring(g, 6)
    assert col is not None and is_proper_coloring(g, col) and max(col) < 6


@pytest.mark.parametrize("r", range(1, 10))
def test_chromatic_complete(r):
    assert chromatic_number(make_complete(r)) == r


def test_chromatic_c5_k3_is_eight():
    assert chromatic_number(lexicographic_product(make_cycle(5), make_complete(3))) == 8


def test_chromatic_k8_minus_c5_matches_bruteforce():
    g = make_kr2_minus_c5(6)
    assert chromatic_number(g) == 6 == brute_chromatic_number(g.n, g.edges())


def test_chromatic_matches_bruteforce_all_small_graphs():
    for n in range(0, 7):
        for g in enumerate_nonisomorphic(n):
            chi, col = optimal_coloring(g)
            assert chi == brute_chromatic_number(n, g.edges()), g
            assert is_proper_coloring(g, col) and len(set(col)) == chi


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_chromatic_random_against_bruteforce(g):
    assert chromatic_number(g) == brute_chromatic_number(g.n, g.edges())


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=14))
def test_clique_and_greedy_bracket_chi(g):
    chi = chromatic_number(g)
    clique = greedy_clique(g)
    assert all(g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1:])
    greedy = dsatur_greedy(g)
    assert is_proper_coloring(g, greedy)
    assert len(clique) <= chi <= (max(greedy) + 1 if g.n else 0)


def test_criticality_examples():
    k7 = make_complete(7)
    assert is_r_critical(k7, 7)
    assert not is_r_critical(delete_edge(k7, (0, 1)), 7)
    assert is_r_critical(make_kr2_minus_c5(5), 5)
    assert is_r_critical(make_cycle(5), 3)
    assert not is_r_critical(make_cycle(6), 3)
    assert not is_r_critical(make_cycle(5), 4)


def test_audit_examples():
    a = audit(make_complete(7), 7)
    assert (a.chi, a.critical, a.excess) == (7, True, 0)
    a = audit(make_cycle(5), 3)
    assert (a.chi, a.critical, a.excess) == (3, True, 0)
    a = audit(make_kr2_minus_c5(5), 5)
    assert (a.chi, a.critical, a.excess) == (5, True, 4)
    assert excess(make_kr2_minus_c5(5), 5) == 2 * 5 - 6
    d = a.to_dict()
    assert d["chi"] == 5 and len(d["witness_coloring"]) == 7


def test_budget_exhaustion_raises():
    g = lexicographic_product(make_cycle(5), make_complete(3))
    with pytest.raises(BudgetExceeded):
        find_k_coloring(g, 7, node_budget=10)
