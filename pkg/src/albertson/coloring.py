"""Exact chromatic number, r-criticality and the excess function.

The search is a DSATUR branch and bound: vertices are picked by
saturation degree (ties by degree among uncolored vertices, then lowest
label) and a new color is only ever opened once per node, which removes
color-permutation symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, delete_edge, delete_vertex, iter_bits

DEFAULT_NODE_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The search hit its node budget; no answer was produced."""


@dataclass
class _Budget:
    limit: int
    used: int = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(f"coloring search exceeded {self.limit} nodes")


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily from every start vertex; the largest is kept."""
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        cand = g.rows[start]
        while cand:
            v = max(iter_bits(cand), key=lambda u: ((g.rows[u] & cand).bit_count(), -u))
            clique.append(v)
            cand &= g.rows[v]
        if len(clique) > len(best):
            best = clique
    return best


def dsatur_greedy(g: Graph) -> list[int]:
    """Plain DSATUR heuristic; used only as the initial upper bound."""
    colors = [-1] * g.n
    for _ in range(g.n):
        v = _pick_vertex(g, colors, None)
        taken = {colors[u] for u in iter_bits(g.rows[v])}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def _pick_vertex(g: Graph, colors: list[int], classes: list[int] | None) -> int:
    uncolored = 0
    for v in range(g.n):
        if colors[v] < 0:
            uncolored |= 1 << v
    best_v, best_key = -1, None
    for v in iter_bits(uncolored):
        row = g.rows[v]
        if classes is None:
            sat = len({colors[u] for u in iter_bits(row) if colors[u] >= 0})
        else:
            sat = sum(1 for cls in classes if row & cls)
        key = (sat, (row & uncolored).bit_count())
        if best_key is None or key > best_key:
            best_v, best_key = v, key
    return best_v


def find_k_coloring(g: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> list[int] | None:
    """A proper coloring with colors ``0..k-1``, or None if none exists."""
    return _search(g, k, _Budget(node_budget))


def is_k_colorable(g: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    return find_k_coloring(g, k, node_budget) is not None


def _search(g: Graph, k: int, budget: _Budget, seed: list[int] | None = None) -> list[int] | None:
    if g.n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * g.n
    classes: list[int] = []
    if seed:
        # pre-color a clique; each clique vertex gets its own color
        if len(seed) > k:
            return None
        for c, v in enumerate(seed):
            colors[v] = c
            classes.append(1 << v)

    def rec(remaining: int) -> bool:
        budget.tick()
        if remaining == 0:
            return True
        v = _pick_vertex(g, colors, classes)
        row = g.rows[v]
        for c in range(len(classes)):
            if not row & classes[c]:
                colors[v] = c
                classes[c] |= 1 << v
                if rec(remaining - 1):
                    return True
                classes[c] ^= 1 << v
        if len(classes) < k:
            colors[v] = len(classes)
            classes.append(1 << v)
            if rec(remaining - 1):
                return True
            classes.pop()
        colors[v] = -1
        return False

    if rec(g.n - len(classes)):
        return colors
    return None


def optimal_coloring(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, list[int]]:
    """Chromatic number and a coloring attaining it."""
    if g.n == 0:
        return 0, []
    budget = _Budget(node_budget)
    clique = greedy_clique(g)
    best = dsatur_greedy(g)
    upper = max(best) + 1
    k = upper - 1
    # walk down from the heuristic bound; each failure proves optimality
    while k >= len(clique):
        col = _search(g, k, budget, seed=clique)
        if col is None:
            break
        best = col
        k = max(col)
    return max(best) + 1, best


def chromatic_number(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    return optimal_coloring(g, node_budget)[0]


def is_proper_coloring(g: Graph, colors: list[int]) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges())


def is_r_critical(g: Graph, r: int, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """χ(g) = r and deleting any vertex or any edge lowers χ to r-1.

    Vertex deletions are checked as well as edge deletions: K_r plus an
    isolated vertex survives every edge-deletion test.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if g.n < r or g.min_degree() < r - 1:
        return False
    # deleting a vertex or an edge lowers χ by at most one, so each test is a
    # single (r-1)-colorability question
    if is_k_colorable(g, r - 1, node_budget):
        return False
    if not is_k_colorable(g, r, node_budget):
        return False
    for v in range(g.n):
        if not is_k_colorable(delete_vertex(g, v), r - 1, node_budget):
            return False
    for e in g.edges():
        if not is_k_colorable(delete_edge(g, e), r - 1, node_budget):
            return False
    return True


def excess(g: Graph, r: int) -> int:
    """2m - (r-1)n, the summed surplus of degrees over r-1."""
    return 2 * g.m - (r - 1) * g.n


@dataclass
class GraphAudit:
    chi: int
    r: int
    critical: bool
    excess: int
    witness_coloring: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "chi": self.chi,
            "r": self.r,
            "critical": self.critical,
            "excess": self.excess,
            "witness_coloring": list(self.witness_coloring),
        }


def audit(g: Graph, r: int | None = None, node_budget: int = DEFAULT_NODE_BUDGET) -> GraphAudit:
    """Chromatic number, criticality at level ``r`` (default χ) and excess."""
    chi, coloring = optimal_coloring(g, node_budget)
    if r is None:
        r = chi
    critical = chi == r and r >= 1 and is_r_critical(g, r, node_budget)
    return GraphAudit(chi=chi, r=r, critical=critical, excess=excess(g, r), witness_coloring=coloring)
