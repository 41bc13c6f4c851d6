"""Isomorph-free enumeration of small graphs and exhaustive critical-graph checks.

Canonical forms come from individualization-refinement: vertices are
split by an iterated degree refinement, ties are broken by trying every
vertex of the first non-singleton cell, and the canonical labeling is
the leaf whose graph6-order adjacency string is smallest.  Because the
refinement and the cell choice are isomorphism-invariant, two graphs get
the same form exactly when they are isomorphic.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, repeat
from pathlib import Path
from typing import Iterator, Optional

from .coloring import DEFAULT_NODE_BUDGET, excess, is_r_critical
from .graph import Graph, GraphError, make_complete, make_kr2_minus_c5, parse_graph6, to_graph6

log = logging.getLogger(__name__)

ENUMERATION_CAP = 8
CACHE_ENV = "ALBERTSON_CACHE_DIR"


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: int

    def graph(self) -> Graph:
        edges = []
        idx = self.n * (self.n - 1) // 2 - 1
        for j in range(1, self.n):
            for i in range(j):
                if (self.bits >> idx) & 1:
                    edges.append((i, j))
                idx -= 1
        return Graph.from_edges(self.n, edges)


def _bits_for_order(g: Graph, order: list[int]) -> int:
    rows = g.rows
    bits = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            bits = (bits << 1) | ((rj >> order[i]) & 1)
    return bits


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            masks.append(mask)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & mk).bit_count() for mk in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _orbit_reps(cell: list[int], fixed: tuple[int, ...], autos: list[tuple[int, ...]], done: set[int]) -> int | None:
    """First vertex of ``cell`` not in the orbit of an explored one, under automorphisms fixing ``fixed``."""
    parent = {v: v for v in cell}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in autos:
        if all(a[x] == x for x in fixed):
            for v in cell:
                w = a[v]
                if w in parent:
                    parent[find(v)] = find(w)
    seen_roots = {find(v) for v in done}
    for v in cell:
        if v not in done and find(v) not in seen_roots:
            return v
    return None


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Smallest leaf string and the vertex order producing it.

    Two leaves with the same string differ by an automorphism; those are
    collected and used to skip children equivalent to an explored one.
    """
    if g.n == 0:
        return 0, []
    best: list = [None, None]
    autos: list[tuple[int, ...]] = []

    def search(cells, fixed):
        cells = _refine(g.rows, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            bits = _bits_for_order(g, order)
            if best[0] is None or bits < best[0]:
                best[0], best[1] = bits, order
            elif bits == best[0]:
                perm = [0] * g.n
                for a, b in zip(best[1], order):
                    perm[a] = b
                autos.append(tuple(perm))
            return
        cell = cells[target]
        done: set[int] = set()
        while True:
            v = _orbit_reps(cell, fixed, autos, done)
            if v is None:
                return
            done.add(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:], fixed + (v,))

    search([list(range(g.n))], ())
    return best[0], best[1]


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.n, canonical_labeling(g)[0])


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g)[1])


def canonical_form_bruteforce(g: Graph) -> CanonicalForm:
    """Minimum over all n! labelings; only for small n, used to cross-check."""
    if g.n == 0:
        return CanonicalForm(0, 0)
    return CanonicalForm(g.n, min(_bits_for_order(g, list(p)) for p in permutations(range(g.n))))


def automorphism_count(g: Graph) -> int:
    """|Aut(g)| by checking every permutation."""
    edges = list(g.edges())
    return sum(1 for p in permutations(range(g.n)) if all(g.has_edge(p[u], p[v]) for u, v in edges))


def _extensions(parent: Graph) -> Iterator[Graph]:
    n = parent.n + 1
    new = n - 1
    for nbrs in range(1 << (n - 1)):
        rows = [row | (((nbrs >> i) & 1) << new) for i, row in enumerate(parent.rows)]
        rows.append(nbrs)
        yield Graph(n, rows)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[CanonicalForm, ...]:
    if n == 0:
        return (CanonicalForm(0, 0),)
    seen: set[CanonicalForm] = set()
    for parent_form in _classes(n - 1):
        for child in _extensions(parent_form.graph()):
            seen.add(canonical_form(child))
    log.debug("n=%d: %d classes", n, len(seen))
    return tuple(sorted(seen))


def _cache_dir(cache_dir) -> Optional[Path]:
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV)
    return Path(cache_dir) if cache_dir else None


def enumerate_nonisomorphic(n: int, cap: int = ENUMERATION_CAP, cache_dir=None) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class, in canonical order."""
    if n < 0 or n > cap:
        raise GraphError(f"enumeration supports 0 <= n <= {cap}")
    cache = _cache_dir(cache_dir)
    path = cache / f"graphs{n}.g6" if cache else None
    if path is not None and path.exists():
        with open(path) as fh:
            for line in fh:
                if line.strip():
                    yield parse_graph6(line)
        return
    forms = _classes(n)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as fh:
            for f in forms:
                fh.write(to_graph6(f.graph()) + "\n")
    for f in forms:
        yield f.graph()


def census_critical(n: int, r: int, cap: int = ENUMERATION_CAP, cache_dir=None,
                    node_budget: int = DEFAULT_NODE_BUDGET, workers: int = 1) -> list[Graph]:
    # critical graphs have minimum degree >= r-1
    cands = [g for g in enumerate_nonisomorphic(n, cap, cache_dir) if g.min_degree() >= r - 1]
    if workers > 1 and len(cands) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flags = list(pool.map(is_r_critical, cands, repeat(r), repeat(node_budget), chunksize=64))
    else:
        flags = [is_r_critical(g, r, node_budget) for g in cands]
    return [g for g, ok in zip(cands, flags) if ok]


@dataclass
class CensusReport:
    r: int
    n_max: int
    found: dict[int, list[Graph]]
    expected: dict[int, list[Graph]]
    verdict: str

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "n_max": self.n_max,
            "found": {str(n): [to_graph6(g) for g in gs] for n, gs in sorted(self.found.items())},
            "expected": {str(n): [to_graph6(g) for g in gs] for n, gs in sorted(self.expected.items())},
            "verdict": self.verdict,
        }


def verify_lemma1(r: int, cap: int = ENUMERATION_CAP, cache_dir=None, workers: int = 1) -> CensusReport:
    """All r-critical graphs on <= r+2 vertices are K_r and K_{r+2}\\C5."""
    if r < 3 or r + 2 > cap:
        raise ValueError(f"r must satisfy 3 <= r <= {cap - 2}")
    found = {n: census_critical(n, r, cap, cache_dir, workers=workers) for n in range(1, r + 3)}
    expected = {r: [canonical_graph(make_complete(r))], r + 2: [canonical_graph(make_kr2_minus_c5(r))]}
    ok = all(
        sorted(canonical_form(g) for g in found[n]) == sorted(canonical_form(g) for g in expected.get(n, []))
        for n in found
    )
    found = {n: gs for n, gs in found.items() if gs}
    return CensusReport(r, r + 2, found, expected, "PASS" if ok else "FAIL")


@dataclass
class ExcessAudit:
    r: int
    n_max: int
    rows: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    dirac_extremal_bad_order: list[str] = field(default_factory=list)
    critical_count: int = 0

    @property
    def verdict(self) -> str:
        return "PASS" if not self.violations and not self.dirac_extremal_bad_order else "FAIL"

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "n_max": self.n_max,
            "critical_noncomplete": self.critical_count,
            "checks": self.rows,
            "violations": self.violations,
            "dirac_extremal_bad_order": self.dirac_extremal_bad_order,
            "verdict": self.verdict,
        }


def excess_rules(r: int, n: int) -> dict[str, int]:
    """Lower bounds on the excess of a non-complete r-critical graph on n vertices."""
    rules = {"DIRAC": r - 3}
    p = n - r
    if 2 <= p <= r - 2:
        rules["GALLAI"] = p * r - p * p - 2
    if n >= r + 2 and n != 2 * r - 1:
        rules["KOSTOCHKA_STIEBITZ"] = 2 * r - 6
    return rules


def audit_excess_bounds(r: int, n_max: int = ENUMERATION_CAP, cache_dir=None, workers: int = 1) -> ExcessAudit:
    if r < 3 or n_max > ENUMERATION_CAP:
        raise ValueError("need r >= 3 and n_max within the enumeration cap")
    rep = ExcessAudit(r, n_max)
    for n in range(r + 1, n_max + 1):
        for g in census_critical(n, r, cache_dir=cache_dir, workers=workers):
            rep.critical_count += 1
            eps = excess(g, r)
            code = to_graph6(g)
            for rule, bound in excess_rules(r, n).items():
                row = {"graph6": code, "n": n, "rule": rule, "excess": eps, "bound": bound, "slack": eps - bound}
                rep.rows.append(row)
                if eps < bound:
                    rep.violations.append(row)
            if r >= 4 and eps == r - 3 and n != 2 * r - 1:
                rep.dirac_extremal_bad_order.append(code)
    return rep


def write_census(out_dir, n: int, r: int, cache_dir=None, workers: int = 1) -> dict:
    """Write the r-critical classes on n vertices as graph6 plus a JSON summary."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    graphs = census_critical(n, r, cache_dir=cache_dir, workers=workers)
    g6 = out_dir / f"critical_n{n}_r{r}.g6"
    with open(g6, "w") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
    summary = {"n": n, "r": r, "count": len(graphs), "graph6": [to_graph6(g) for g in graphs],
               "file": str(g6)}
    with open(out_dir / f"critical_n{n}_r{r}.json", "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
    return summary
