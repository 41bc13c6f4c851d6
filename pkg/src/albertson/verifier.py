"""Case-analysis certificates for cr(G) >= cr(K_r) on r-critical graphs.

For 7 <= r <= 12 the vertex count n of a hypothetical counterexample is
split into cases.  In each case a lower bound m >= a*n + b on the edge
count is composed with every linear crossing inequality
cr >= alpha*m - beta*n + gamma, giving linear forms in n.  Finite cases
are checked at every n; the unbounded case gets a tail certificate, a
composed form of nonnegative slope that already clears the target at the
start of the tail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Optional

from .bounds import (
    CROSSING_FORMS,
    CROSSING_LEMMA_31_1_CONSTANT,
    CROSSING_LEMMA_31_1_THRESHOLD,
    LinearForm,
    Rule,
    cr_lower_crossing_lemma,
    cr_lower_linear,
    frac_str,
    guy_f,
    known_cr_complete,
    min_edges_critical,
)
from .coloring import DEFAULT_NODE_BUDGET, optimal_coloring
from .graph import Graph, make_kr2_minus_c5

PASS = "PASS"
FAIL = "FAIL"


@dataclass(frozen=True)
class NCondition:
    kind: str  # "equals", "range" or "tail"
    lo: int
    hi: Optional[int] = None
    excluded: tuple[int, ...] = ()

    def values(self) -> list[int]:
        if self.kind == "tail":
            raise ValueError("a tail condition has no finite value list")
        hi = self.lo if self.kind == "equals" else self.hi
        return [n for n in range(self.lo, hi + 1) if n not in self.excluded]

    def describe(self) -> str:
        if self.kind == "equals":
            return f"n = {self.lo}"
        excl = "".join(f", n != {k}" for k in self.excluded)
        if self.kind == "range":
            return f"{self.lo} <= n <= {self.hi}{excl}"
        return f"n >= {self.lo}{excl}"

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "lo": self.lo, "excluded": list(self.excluded)}
        if self.hi is not None:
            d["hi"] = self.hi
        return d


@dataclass
class CaseRecord:
    n_condition: NCondition
    edge_rule: Rule
    edge_form: LinearForm
    forms: dict[Rule, LinearForm]
    cr_rule: Rule
    bound_as_linear: LinearForm
    min_over_case: int
    argmin_n: int
    edges_at_argmin: Fraction
    exact_at_argmin: Fraction
    strengthened_min: Optional[int] = None
    proof_cr_rules: tuple[Rule, ...] = ()
    evaluations: list[dict] = field(default_factory=list)
    tail_certificate: Optional[dict] = None
    chain: Optional[dict] = None
    passed: bool = True
    diagnostics: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {
            "n_condition": self.n_condition.to_dict(),
            "description": self.n_condition.describe(),
            "edge_rule": self.edge_rule.value,
            "edge_form": self.edge_form.to_dict(),
            "forms": {k.value: v.to_dict() for k, v in self.forms.items()},
            "cr_rule": self.cr_rule.value,
            "bound_as_linear": self.bound_as_linear.to_dict(),
            "min_over_case": self.min_over_case,
            "argmin_n": self.argmin_n,
            "edges_at_argmin": frac_str(self.edges_at_argmin),
            "exact_at_argmin": frac_str(self.exact_at_argmin),
            "strengthened_min": self.strengthened_min,
            "proof_cr_rules": [r.value for r in self.proof_cr_rules],
            "evaluations": self.evaluations,
            "tail_certificate": self.tail_certificate,
            "passed": self.passed,
            "diagnostics": list(self.diagnostics),
        }
        if self.chain is not None:
            d["chain"] = self.chain
        return d


@dataclass
class AlbertsonReport:
    r: int
    hypotheses: list[str]
    target: int
    cases: list[CaseRecord]
    certified_min: int
    binding_case: str
    verdict: str
    window: int

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "hypotheses": list(self.hypotheses),
            "target": self.target,
            "window": self.window,
            "cases": [c.to_dict() for c in self.cases],
            "certified_min": self.certified_min,
            "binding_case": self.binding_case,
            "verdict": self.verdict,
        }


def edge_form(rule: Rule, r: int, n: Optional[int] = None) -> LinearForm:
    """m >= slope*n + intercept for the given edge rule (Gallai needs n)."""
    half = Fraction(r - 1, 2)
    if rule == Rule.TRIVIAL_DEGREE:
        return LinearForm(half, 0)
    if rule == Rule.DIRAC:
        return LinearForm(half, Fraction(r - 3, 2))
    if rule == Rule.KOSTOCHKA_STIEBITZ:
        return LinearForm(half, r - 3)
    if rule == Rule.GALLAI:
        if n is None:
            raise ValueError("Gallai's bound depends on p = n - r")
        p = n - r
        return LinearForm(half, Fraction(p * r - p * p - 2, 2))
    raise ValueError(f"{rule} is not an edge rule")


def compose(edge: LinearForm, cr_rule: Rule) -> LinearForm:
    """Substitute m >= a*n + b into cr >= alpha*m - beta*n + gamma."""
    alpha, beta, gamma = CROSSING_FORMS[cr_rule]
    return LinearForm(alpha * edge.slope - beta, alpha * edge.intercept + gamma)


def _cr_rules(enable_borodin: bool) -> list[Rule]:
    return [k for k in CROSSING_FORMS if enable_borodin or k != Rule.BORODIN_PLUS1]


def _best_at(forms: dict[Rule, LinearForm], n: int) -> tuple[Rule, Fraction]:
    rule = max(forms, key=lambda k: forms[k](n))
    return rule, forms[rule](n)


def _evaluate_case(r, cond, rule, enable_borodin, proof_rules, target) -> CaseRecord:
    ns = cond.values()
    if rule == Rule.GALLAI and len(ns) != 1:
        raise ValueError("a Gallai case must fix n")
    edge = edge_form(rule, r, ns[0] if rule == Rule.GALLAI else None)
    forms = {k: compose(edge, k) for k in _cr_rules(enable_borodin)}
    best = None
    strengthened = None
    evaluations = []
    for n in ns:
        cr_rule, exact = _best_at(forms, n)
        value = max(0, ceil(exact))
        strong = cr_lower_linear(n, min_edges_critical(r, n).value, enable_borodin).value
        strengthened = int(strong) if strengthened is None else min(strengthened, int(strong))
        evaluations.append({
            "n": n,
            "edges": frac_str(edge(n)),
            "cr_rule": cr_rule.value,
            "cr_exact": frac_str(exact),
            "cr": value,
        })
        if best is None or value < best[0]:
            best = (value, n, cr_rule, exact)
    value, n, cr_rule, exact = best
    return CaseRecord(
        n_condition=cond,
        edge_rule=rule,
        edge_form=edge,
        forms=forms,
        cr_rule=cr_rule,
        bound_as_linear=forms[cr_rule],
        min_over_case=value,
        argmin_n=n,
        edges_at_argmin=edge(n),
        exact_at_argmin=exact,
        strengthened_min=strengthened,
        proof_cr_rules=proof_rules,
        evaluations=evaluations,
        passed=value >= target,
    )


def _tail_case(r, start, excluded, enable_borodin, proof_rules, target) -> CaseRecord:
    edge = edge_form(Rule.KOSTOCHKA_STIEBITZ, r)
    forms = {k: compose(edge, k) for k in _cr_rules(enable_borodin)}
    candidates = {k: f for k, f in forms.items() if f.slope >= 0}
    cond = NCondition("tail", start, None, tuple(e for e in excluded if e >= start))
    if not candidates:
        return CaseRecord(
            n_condition=cond, edge_rule=Rule.KOSTOCHKA_STIEBITZ, edge_form=edge, forms=forms,
            cr_rule=Rule.EULER, bound_as_linear=forms[Rule.EULER], min_over_case=0,
            argmin_n=start, edges_at_argmin=edge(start), exact_at_argmin=Fraction(0),
            proof_cr_rules=proof_rules, passed=False,
            diagnostics=["no composed bound has nonnegative slope"],
        )
    rule, exact = _best_at(candidates, start)
    value = max(0, ceil(exact))
    form = candidates[rule]
    diagnostics = []
    if value < target:
        diagnostics.append(f"best nonnegative-slope bound is {frac_str(exact)} < {target} at n = {start}")
    return CaseRecord(
        n_condition=cond,
        edge_rule=Rule.KOSTOCHKA_STIEBITZ,
        edge_form=edge,
        forms=forms,
        cr_rule=rule,
        bound_as_linear=form,
        min_over_case=value,
        argmin_n=start,
        edges_at_argmin=edge(start),
        exact_at_argmin=exact,
        proof_cr_rules=proof_rules,
        tail_certificate={
            "rule": rule.value,
            "slope": frac_str(form.slope),
            "slope_nonnegative": True,
            "start": start,
            "value_at_start": frac_str(exact),
        },
        passed=value >= target,
        diagnostics=diagnostics,
    )


# crossing inequalities the written proofs use in each case
_PROOF_RULES = {
    7: {"dirac": (Rule.BORODIN_PLUS1,), "generic": (Rule.BORODIN_PLUS1,)},
    8: {"dirac": (Rule.PRTT_7_3,), "generic": (Rule.EULER, Rule.PRTT_7_3)},
    9: {"dirac": (Rule.PRTT_7_3,), "generic": (Rule.PRTT_7_3,)},
    10: {"dirac": (Rule.PRTT_3,), "generic": (Rule.PRTT_4,)},
    11: {"dirac": (Rule.PRTT_4,), "generic": (Rule.PRTT_4,)},
    12: {"dirac": (Rule.PRTT_4,), "generic": (Rule.PRTT_4,), "gallai": (Rule.PRTT_4,)},
}


def hypotheses_for(r: int) -> list[str]:
    hyp = [
        f"chi(G) = {r}; by subgraph monotonicity of cr it suffices to treat {r}-critical G",
        f"G is {r}-critical",
    ]
    if r in (7, 12):
        hyp.append(f"G != K_{r}")
    else:
        hyp.append(f"G does not contain K_{r}")
    hyp.append(f"n != {r + 1}: no {r}-critical graph has {r + 1} vertices")
    if r == 12:
        hyp.append(
            f"n >= {r + 3}: the only non-complete {r}-critical graph on <= {r + 2} vertices is "
            f"K_{r + 2}\\C5, which contains a subdivision of K_{r} with one subdivided edge"
        )
    else:
        hyp.append(f"n >= {r + 2}: the only {r}-critical graph on <= {r} vertices is K_{r}")
    if r == 7:
        hyp.append("chi(G) >= 7 rules out a drawing where every edge crosses at most one other edge (Borodin +1)")
    return hyp


def verify_albertson(r: int, window: Optional[int] = None) -> AlbertsonReport:
    if not 7 <= r <= 12:
        raise ValueError("verify_albertson covers 7 <= r <= 12")
    if window is None:
        window = 10 * r
    n_min = r + 3 if r == 12 else r + 2
    dirac_n = 2 * r - 1
    if window < dirac_n + 1:
        raise ValueError(f"window must be at least {dirac_n + 1}")
    target = known_cr_complete(r)
    borodin = r == 7
    rules = _PROOF_RULES[r]

    cases = [_evaluate_case(r, NCondition("equals", dirac_n), Rule.DIRAC, borodin, rules["dirac"], target)]
    generic_lo = n_min
    if r == 12:
        for n in (15, 16):
            cases.append(_evaluate_case(r, NCondition("equals", n), Rule.GALLAI, borodin, rules["gallai"], target))
        generic_lo = 17
    cases.append(_evaluate_case(
        r, NCondition("range", generic_lo, window, (dirac_n,)), Rule.KOSTOCHKA_STIEBITZ,
        borodin, rules["generic"], target,
    ))
    cases.append(_tail_case(r, window + 1, (dirac_n,), borodin, rules["generic"], target))
    cases.sort(key=lambda c: (c.n_condition.lo, c.n_condition.kind))

    binding = min(cases, key=lambda c: (c.min_over_case, c.n_condition.lo))
    certified_min = binding.min_over_case
    ok = certified_min >= target and all(c.passed for c in cases)
    return AlbertsonReport(
        r=r,
        hypotheses=hypotheses_for(r),
        target=target,
        cases=cases,
        certified_min=certified_min,
        binding_case=binding.n_condition.describe(),
        verdict=PASS if ok else FAIL,
        window=window,
    )


def verify_large_n(r: int) -> CaseRecord:
    """cr(G) >= guy_f(r) >= cr(K_r) for r-critical G with n >= 4r, r >= 13."""
    if r < 13:
        raise ValueError("verify_large_n covers r >= 13")
    target = guy_f(r)
    start = 4 * r
    edge = edge_form(Rule.TRIVIAL_DEGREE, r)
    cond = NCondition("tail", start)
    if r == 13:
        form = compose(edge, Rule.PRTT_4)
        exact = form(start)
        value = max(0, ceil(exact))
        ok = form.slope >= 0 and value >= target
        return CaseRecord(
            n_condition=cond, edge_rule=Rule.TRIVIAL_DEGREE, edge_form=edge,
            forms={Rule.PRTT_4: form}, cr_rule=Rule.PRTT_4, bound_as_linear=form,
            min_over_case=value, argmin_n=start, edges_at_argmin=edge(start), exact_at_argmin=exact,
            proof_cr_rules=(Rule.PRTT_4,),
            tail_certificate={"rule": Rule.PRTT_4.value, "slope": frac_str(form.slope),
                              "slope_nonnegative": form.slope >= 0, "start": start,
                              "value_at_start": frac_str(exact)},
            chain={"target": target},
            passed=ok,
            diagnostics=[] if ok else [f"{frac_str(exact)} < {target}"],
        )

    # chain: m^3/(31.1 n^2) >= (r-1)^3 n / (8*31.1) >= (r-1)^3 r / 64 >= guy_f(r)
    m = edge(start)
    diagnostics = []
    if m < CROSSING_LEMMA_31_1_THRESHOLD * start:
        diagnostics.append("m >= 103n/16 fails")
    lemma = cr_lower_crossing_lemma(start, m)
    step1 = lemma.value
    slope = Fraction((r - 1) ** 3) / (8 * CROSSING_LEMMA_31_1_CONSTANT)
    step2 = slope * start
    step3 = Fraction((r - 1) ** 3 * r, 64)
    steps = [step1, step2, step3, Fraction(target)]
    for a, b in zip(steps, steps[1:]):
        if a < b:
            diagnostics.append(f"chain step {frac_str(a)} >= {frac_str(b)} fails")
    # m^3/n^2 with m = (r-1)n/2 is linear in n, so the bound only grows past n = 4r
    form = LinearForm(slope, 0)
    if form.slope < 0:
        diagnostics.append("bound decreases in n")
    ok = not diagnostics and lemma.rule == Rule.CROSSING_LEMMA_31_1
    return CaseRecord(
        n_condition=cond, edge_rule=Rule.TRIVIAL_DEGREE, edge_form=edge,
        forms={Rule.CROSSING_LEMMA_31_1: form}, cr_rule=Rule.CROSSING_LEMMA_31_1, bound_as_linear=form,
        min_over_case=max(0, ceil(step1)), argmin_n=start, edges_at_argmin=m, exact_at_argmin=step1,
        proof_cr_rules=(Rule.CROSSING_LEMMA_31_1,),
        tail_certificate={"rule": Rule.CROSSING_LEMMA_31_1.value, "slope": frac_str(slope),
                          "slope_nonnegative": slope >= 0, "start": start,
                          "value_at_start": frac_str(step2)},
        chain={
            "crossing_lemma": frac_str(step1),
            "linear_in_n": frac_str(step2),
            "cubic_in_r": frac_str(step3),
            "target": target,
        },
        passed=ok,
        diagnostics=diagnostics,
    )


@dataclass
class SubdivisionCertificate:
    branch_vertices: list[int]
    paths: dict[tuple[int, int], list[int]]

    def to_dict(self) -> dict:
        return {
            "branch_vertices": list(self.branch_vertices),
            "paths": [{"edge": [i, j], "path": list(p)} for (i, j), p in sorted(self.paths.items())],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SubdivisionCertificate":
        return cls(list(d["branch_vertices"]), {tuple(e["edge"]): list(e["path"]) for e in d["paths"]})


def build_kr_subdivision(r: int) -> SubdivisionCertificate:
    """Subdivision of K_r inside K_{r+2}\\C5 with exactly one subdivided edge."""
    if r < 5:
        raise ValueError("need r >= 5")
    host = make_kr2_minus_c5(r)
    low = [v for v in range(host.n) if host.degree(v) == r - 1]
    for u in low:
        for w in low:
            if u == w or not host.has_edge(u, w):
                continue
            branch = [v for v in range(host.n) if v not in (u, w)]
            missing = [(x, y) for i, x in enumerate(branch) for y in branch[i + 1:] if not host.has_edge(x, y)]
            if len(missing) != 1:
                continue
            x, y = missing[0]
            if host.has_edge(y, u) and host.has_edge(x, w):
                x, y = y, x
            if not (host.has_edge(x, u) and host.has_edge(w, y)):
                continue
            index = {v: i for i, v in enumerate(branch)}
            paths = {}
            for i in range(r):
                for j in range(i + 1, r):
                    a, b = branch[i], branch[j]
                    if {a, b} == {x, y}:
                        paths[(i, j)] = [x, u, w, y] if a == x else [y, w, u, x]
                    else:
                        paths[(i, j)] = [a, b]
            assert index[x] != index[y]
            return SubdivisionCertificate(branch, paths)
    raise AssertionError("no subdividable pair found")


def subdivision_violations(g: Graph, cert: SubdivisionCertificate) -> list[str]:
    bad = []
    branch = cert.branch_vertices
    r = len(branch)
    if any(not 0 <= v < g.n for v in branch):
        bad.append("BRANCH_OUT_OF_RANGE")
        return bad
    if len(set(branch)) != r:
        bad.append("BRANCH_NOT_INJECTIVE")
    expected = {(i, j) for i in range(r) for j in range(i + 1, r)}
    if set(cert.paths) != expected:
        bad.append("PATH_SET_MISMATCH")
    used: dict[int, tuple[int, int]] = {}
    branch_set = set(branch)
    for (i, j), path in sorted(cert.paths.items()):
        if (i, j) not in expected:
            continue
        if len(path) < 2 or path[0] != branch[i] or path[-1] != branch[j]:
            bad.append(f"BAD_ENDPOINTS {i}-{j}")
            continue
        if len(set(path)) != len(path):
            bad.append(f"PATH_NOT_SIMPLE {i}-{j}")
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                bad.append(f"NOT_AN_EDGE {a}-{b}")
        for v in path[1:-1]:
            if v in branch_set:
                bad.append(f"INTERNAL_IS_BRANCH {v}")
            elif v in used and used[v] != (i, j):
                bad.append(f"INTERNAL_SHARED {v}")
            used[v] = (i, j)
    return bad


def check_subdivision(g: Graph, cert: SubdivisionCertificate) -> bool:
    return not subdivision_violations(g, cert)


def has_clique(g: Graph, k: int) -> bool:
    def rec(cand: int, size: int) -> bool:
        if size >= k:
            return True
        if size + cand.bit_count() < k:
            return False
        while cand:
            v = cand.bit_length() - 1
            cand ^= 1 << v
            if rec(cand & g.rows[v], size + 1):
                return True
            if size + cand.bit_count() < k:
                return False
        return False

    return k <= 0 or rec((1 << g.n) - 1, 0)


def audit_graph_albertson(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> dict:
    """Check cr(g) >= cr(K_chi) on a concrete graph using only lower bounds."""
    chi, coloring = optimal_coloring(g, node_budget)
    r = chi
    if r <= 12:
        target = known_cr_complete(r) if r >= 1 else 0
        target_status = "proved"
    else:
        target = guy_f(r)
        target_status = "conjectural (Guy's formula; cr(K_r) unknown for r >= 13)"
    lower = None
    if g.n >= 3:
        lower = cr_lower_linear(g.n, g.m, enable_borodin=r >= 7)
    if target == 0:
        status, method = "certified", "target is zero"
    elif has_clique(g, r):
        status, method = "certified", f"contains K_{r} as a subgraph"
    elif lower is not None and lower.value >= target:
        status, method = "certified", f"lower bound {lower.rule.value}"
    else:
        status, method = "inconclusive", "lower bounds fall short of the target"
    return {
        "n": g.n,
        "m": g.m,
        "chi": chi,
        "witness_coloring": coloring,
        "target": target,
        "target_status": target_status,
        "lower_bound": lower.to_dict() if lower else None,
        "status": status,
        "method": method,
    }
