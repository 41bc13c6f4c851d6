"""Exact-arithmetic checks of crossing-number lower bounds for color-critical graphs."""

from .bounds import Rule, chi_upper_from_cr, cr_lower_linear, guy_f, min_edges_critical
from .census import audit_excess_bounds, census_critical, enumerate_nonisomorphic, verify_lemma1
from .coloring import BudgetExceeded, chromatic_number, is_r_critical, optimal_coloring
from .drawings import count_crossings, cylindrical_count, cylindrical_drawing, validate_drawing
from .graph import Graph, GraphError, parse_graph6, to_graph6
from .verifier import build_kr_subdivision, check_subdivision, verify_albertson, verify_large_n

__all__ = [
    "BudgetExceeded", "Graph", "GraphError", "Rule",
    "audit_excess_bounds", "build_kr_subdivision", "census_critical", "check_subdivision",
    "chi_upper_from_cr", "chromatic_number", "count_crossings", "cr_lower_linear",
    "cylindrical_count", "cylindrical_drawing", "enumerate_nonisomorphic", "guy_f",
    "is_r_critical", "min_edges_critical", "optimal_coloring", "parse_graph6", "to_graph6",
    "validate_drawing", "verify_albertson", "verify_large_n", "verify_lemma1",
]
