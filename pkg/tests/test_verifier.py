from fractions import Fraction
from math import ceil

import pytest

from albertson.bounds import Rule, cr_lower_linear, crossing_terms, edge_rule_value, guy_f
from albertson.graph import delete_edge, make_complete, make_cycle, make_kr2_minus_c5
from albertson.verifier import (
    SubdivisionCertificate,
    audit_graph_albertson,
    build_kr_subdivision,
    check_subdivision,
    has_clique,
    subdivision_violations,
    verify_albertson,
    verify_large_n,
)

CERTIFIED = {7: 9, 8: 20, 9: 41, 10: 69, 11: 104, 12: 153}


def _case(rep, lo, kind=None):
    return next(c for c in rep.cases if c.n_condition.lo == lo and (kind is None or c.n_condition.kind == kind))


@pytest.mark.parametrize("r", sorted(CERTIFIED))
def test_certified_minimum(r):
    rep = verify_albertson(r)
    assert rep.verdict == "PASS"
    assert rep.certified_min == CERTIFIED[r]
    assert rep.certified_min >= rep.target == guy_f(r)


@pytest.mark.parametrize("r", sorted(CERTIFIED))
def test_every_evaluation_matches_direct_recomputation(r):
    # recompute each per-n value from the edge rule and the crossing inequalities alone
    rep = verify_albertson(r)
    for case in rep.cases:
        if case.n_condition.kind == "tail":
            continue
        for ev in case.evaluations:
            n = ev["n"]
            m = edge_rule_value(case.edge_rule, r, n).value
            assert Fraction(ev["edges"]) == m
            assert ev["cr"] == cr_lower_linear(n, m, enable_borodin=(r == 7)).value


def test_proof_arithmetic_values():
    rep9 = verify_albertson(9)
    # n = 2r-1 is the Dirac case
    ev = _case(rep9, 17, "equals").evaluations[0]
    assert Fraction(ev["cr_exact"]) == Fraction(122, 3) and Fraction(ev["edges"]) == 71
    rep10 = verify_albertson(10)
    ev = _case(rep10, 19, "equals").evaluations[0]
    assert Fraction(ev["cr_exact"]) == Fraction(206, 3) and Fraction(ev["edges"]) == 89
    rep12 = verify_albertson(12)
    g15, g16 = _case(rep12, 15), _case(rep12, 16)
    assert g15.edge_rule == g16.edge_rule == Rule.GALLAI
    assert (g15.edges_at_argmin, g16.edges_at_argmin) == (95, 103)
    assert (g15.min_over_case, g16.min_over_case) == (157, 172)
    assert _case(rep12, 23).min_over_case == 164
    generic = _case(rep12, 17, "range")
    assert (generic.min_over_case, generic.argmin_n) == (153, 17)
    assert "n != 23" in rep12.binding_case


def test_r11_cases():
    rep = verify_albertson(11)
    assert _case(rep, 21).exact_at_argmin == Fraction(659, 6)
    assert _case(rep, 21).min_over_case == 110
    generic = _case(rep, 13, "range")
    assert generic.exact_at_argmin == Fraction(619, 6) and generic.min_over_case == 104


@pytest.mark.parametrize("r", sorted(CERTIFIED))
def test_tail_certificate_extends(r):
    rep = verify_albertson(r)
    tail = next(c for c in rep.cases if c.n_condition.kind == "tail")
    cert = tail.tail_certificate
    assert Fraction(cert["slope"]) >= 0
    form = tail.bound_as_linear
    start = cert["start"]
    for n in (start, start + 1, start + 17, start + 1000):
        assert ceil(form(n)) >= rep.target
        # the composed form is itself a valid bound at n
        m = edge_rule_value(Rule.KOSTOCHKA_STIEBITZ, r, n).value
        assert cr_lower_linear(n, m, r == 7).value >= ceil(form(n))


@pytest.mark.parametrize("r", sorted(CERTIFIED))
def test_window_insensitive(r):
    assert verify_albertson(r).certified_min == verify_albertson(r, window=20 * r).certified_min


def test_window_too_small():
    with pytest.raises(ValueError):
        verify_albertson(9, window=10)
    with pytest.raises(ValueError):
        verify_albertson(13)


def test_report_serializes():
    import json
    d = verify_albertson(12).to_dict()
    text = json.dumps(d, sort_keys=True)
    assert '"certified_min": 153' in text


def test_large_n_examples():
    r13 = verify_large_n(13)
    assert r13.passed and r13.exact_at_argmin == Fraction(41, 6) * 52 + Fraction(103, 3)
    assert r13.min_over_case == 390 and r13.chain["target"] == 225
    r14 = verify_large_n(14)
    assert r14.passed and r14.argmin_n == 56
    chain = [Fraction(r14.chain[k]) for k in ("crossing_lemma", "linear_in_n", "cubic_in_r")]
    assert chain[0] >= chain[1] >= chain[2] >= r14.chain["target"] == guy_f(14)
    with pytest.raises(ValueError):
        verify_large_n(12)


@pytest.mark.parametrize("r", range(13, 101))
def test_large_n_range(r):
    assert verify_large_n(r).passed


@pytest.mark.parametrize("r", range(5, 13))
def test_subdivision_valid(r):
    g = make_kr2_minus_c5(r)
    cert = build_kr_subdivision(r)
    assert check_subdivision(g, cert)
    long_paths = [p for p in cert.paths.values() if len(p) > 2]
    assert len(long_paths) == 1 and len(long_paths[0]) == 4
    assert len(cert.paths) - 1 == r * (r - 1) // 2 - 1
    assert SubdivisionCertificate.from_dict(cert.to_dict()).paths == cert.paths


def test_subdivision_r5_shape():
    cert = build_kr_subdivision(5)
    assert sum(1 for p in cert.paths.values() if len(p) == 2) == 9


@pytest.mark.parametrize("r", range(5, 13))
def test_subdivision_mutations_fail(r):
    g = make_kr2_minus_c5(r)
    cert = build_kr_subdivision(r)
    key = next(k for k, p in cert.paths.items() if len(p) == 4)
    long_path = cert.paths[key]

    # direct edge replaced by a non-edge
    bad = dict(cert.paths)
    bad[key] = [long_path[0], long_path[-1]]
    assert not check_subdivision(g, SubdivisionCertificate(cert.branch_vertices, bad))

    # a second path reuses an internal vertex
    other = next(k for k, p in cert.paths.items() if len(p) == 2 and
                 g.has_edge(p[0], long_path[1]) and g.has_edge(long_path[1], p[1]))
    bad = dict(cert.paths)
    p = cert.paths[other]
    bad[other] = [p[0], long_path[1], p[1]]
    v = subdivision_violations(g, SubdivisionCertificate(cert.branch_vertices, bad))
    assert any(x.startswith("INTERNAL_SHARED") for x in v)

    # a path loses its last vertex
    bad = dict(cert.paths)
    bad[key] = long_path[:-1]
    assert not check_subdivision(g, SubdivisionCertificate(cert.branch_vertices, bad))

    # a path goes missing
    bad = dict(cert.paths)
    del bad[key]
    assert not check_subdivision(g, SubdivisionCertificate(cert.branch_vertices, bad))

    # the certificate is not valid in the graph with a used edge deleted
    e = (long_path[1], long_path[2])
    assert not check_subdivision(delete_edge(g, e), cert)


def test_has_clique():
    assert has_clique(make_complete(6), 6)
    assert not has_clique(make_kr2_minus_c5(6), 7)
    assert not has_clique(make_cycle(5), 3)


def test_audit_graph_examples():
    a = audit_graph_albertson(make_complete(9))
    assert (a["chi"], a["target"], a["status"]) == (9, 36, "certified")
    a = audit_graph_albertson(make_kr2_minus_c5(7))
    assert (a["chi"], a["n"], a["m"]) == (7, 9, 31)
    assert crossing_terms(9, 31, True)[Rule.BORODIN_PLUS1] == 11
    # the 7/3 inequality does better here: (217 - 225 + 50)/3 = 14
    assert a["lower_bound"]["value"] == "14/1" and a["status"] == "certified"
    a = audit_graph_albertson(make_cycle(5))
    assert (a["chi"], a["target"], a["status"]) == (3, 0, "certified")
