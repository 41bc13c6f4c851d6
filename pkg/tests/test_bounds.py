from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from albertson.bounds import (
    APPLICABILITY,
    CROSSING_FORMS,
    NotApplicable,
    Rule,
    best_rules_for,
    chi_upper_from_cr,
    cr_lower_crossing_lemma,
    cr_lower_linear,
    crossing_terms,
    edge_rule_value,
    edge_rules,
    guy_f,
    known_cr_complete,
    min_edges_critical,
)

# cr(K_n) for n <= 12, the values proved exactly
KNOWN_CR = {1: 0, 2: 0, 3: 0, 4: 0, 5: 1, 6: 3, 7: 9, 8: 18, 9: 36, 10: 60, 11: 100, 12: 150}


def test_guy_formula_against_table():
    for n, c in KNOWN_CR.items():
        assert guy_f(n) == c == known_cr_complete(n)
    assert guy_f(13) == 225 and guy_f(14) == 315


def test_known_cr_out_of_range():
    with pytest.raises(ValueError):
        known_cr_complete(13)
    with pytest.raises(ValueError):
        known_cr_complete(0)


def test_edge_rule_examples():
    for n in (9, 10, 14, 20):
        assert edge_rule_value(Rule.DIRAC, 7, n).value == 3 * n + 2
    for n in (10, 11, 20, 40):
        assert edge_rule_value(Rule.KOSTOCHKA_STIEBITZ, 8, n).value == Fraction(7, 2) * n + 5
    assert edge_rule_value(Rule.GALLAI, 12, 15).value == 95
    assert edge_rule_value(Rule.GALLAI, 12, 16).value == 103
    with pytest.raises(NotApplicable):
        edge_rule_value(Rule.KOSTOCHKA_STIEBITZ, 8, 15)


def test_edge_rule_preconditions():
    with pytest.raises(ValueError):
        edge_rules(8, 9, True)
    with pytest.raises(ValueError):
        edge_rules(8, 7, True)
    with pytest.raises(ValueError):
        edge_rules(2, 5, True)


def test_min_edges_prefers_strongest():
    assert min_edges_critical(8, 10).rule == Rule.KOSTOCHKA_STIEBITZ
    assert min_edges_critical(8, 15).rule == Rule.DIRAC
    assert min_edges_critical(12, 16).rule == Rule.GALLAI
    assert min_edges_critical(8, 8, assume_not_complete=False).rule == Rule.TRIVIAL_DEGREE


def test_edge_bounds_hold_on_critical_examples():
    # K_{r+2} minus C5 is r-critical and non-complete on n = r+2 vertices
    from albertson.graph import make_kr2_minus_c5
    for r in range(4, 13):
        g = make_kr2_minus_c5(r)
        for b in edge_rules(r, r + 2, True):
            assert g.m >= b.value, (r, b)


def test_cr_lower_linear_examples():
    assert cr_lower_linear(17, 71).value == 41
    assert crossing_terms(17, 71)[Rule.PRTT_7_3] == Fraction(122, 3)
    assert cr_lower_linear(19, 89).value == 69
    assert crossing_terms(19, 89)[Rule.PRTT_3] == Fraction(206, 3)
    assert cr_lower_linear(10, 24).value == 0


def test_cr_lower_linear_rejects_bad_input():
    with pytest.raises(ValueError):
        cr_lower_linear(5, 11)
    with pytest.raises(ValueError):
        cr_lower_linear(2, 1)


def test_cr_lower_linear_is_sound_on_complete_graphs():
    for n in range(3, 13):
        # the +1 variant presumes chi >= 7
        for borodin in (False, True) if n >= 7 else (False,):
            assert cr_lower_linear(n, comb(n, 2), borodin).value <= KNOWN_CR[n]


def test_crossing_lemma_examples():
    b = cr_lower_crossing_lemma(100, 650)
    assert b.rule == Rule.CROSSING_LEMMA_31_1
    assert b.value == Fraction(274625000, 311000)
    b = cr_lower_crossing_lemma(100, 500)
    assert b.rule == Rule.CROSSING_LEMMA_64
    assert b.value == Fraction(125000000, 640000) == Fraction(3125, 16)
    with pytest.raises(NotApplicable):
        cr_lower_crossing_lemma(100, 399)


def test_chi_upper_examples():
    assert chi_upper_from_cr(0) == 1
    assert chi_upper_from_cr(16) == 9
    assert chi_upper_from_cr(150) == 15
    with pytest.raises(ValueError):
        chi_upper_from_cr(-1)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**9))
def test_chi_upper_is_least(c):
    k = chi_upper_from_cr(c)
    assert (k - 1) ** 4 >= 256 * c
    assert k == 1 or (k - 2) ** 4 < 256 * c


def test_applicability_examples():
    assert set(best_rules_for(12, 40)) == {Rule.EULER, Rule.PRTT_7_3}
    assert best_rules_for(12, 51) == [Rule.PRTT_3]


def test_applicability_ranges_are_exact():
    # ranges are where each form is the maximum as a function of m/(n-2)
    for i, (rule, lo, hi) in enumerate(APPLICABILITY):
        if hi is None:
            continue
        nxt = APPLICABILITY[i + 1][0]
        n = 50
        m = hi * (n - 2)
        assert crossing_terms(n, m)[rule] == crossing_terms(n, m)[nxt], (rule, nxt)
        assert CROSSING_FORMS[rule][0] < CROSSING_FORMS[nxt][0]


@settings(max_examples=1000, deadline=None)
@given(st.integers(3, 300).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, comb(n, 2)))))
def test_applicability_predicts_best_rule(nm):
    n, m = nm
    terms = crossing_terms(n, m)
    best = max(terms.values())
    winners = {r for r, v in terms.items() if v == best}
    predicted = set(best_rules_for(n, m))
    assert predicted <= winners
    assert cr_lower_linear(n, m).rule in winners


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 200).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, comb(n, 2) - 1))))
def test_cr_lower_monotone_in_m(nm):
    n, m = nm
    assert cr_lower_linear(n, m).value <= cr_lower_linear(n, m + 1).value
    assert cr_lower_linear(n, m).value >= 0
