"""Simple undirected graphs on at most 64 vertices, with graph6 I/O.

Adjacency is stored as one integer bitmask per vertex: bit ``j`` of
``rows[i]`` is set when ``i`` and ``j`` are adjacent.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
GRAPH6_MAX = 62


class GraphError(ValueError):
    pass


class Graph:
    """Immutable labeled simple graph with vertices ``0..n-1``."""

    __slots__ = ("n", "rows", "m")

    def __init__(self, n: int, rows: Sequence[int] | None = None):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = tuple(rows) if rows is not None else (0,) * n
        if len(rows) != n:
            raise GraphError("row count does not match vertex count")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full or (row >> i) & 1:
                raise GraphError(f"row {i} has out-of-range bits or a loop")
            for j in iter_bits(row):
                if not (rows[j] >> i) & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "m", sum(r.bit_count() for r in rows) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.rows))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, graph6={to_graph6(self)!r})" if self.n <= GRAPH6_MAX else f"Graph(n={self.n}, m={self.m})"

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self.rows[u] >> (u + 1)):
                yield u, u + 1 + v

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        if sorted(order) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation")
        pos = {old: new for new, old in enumerate(order)}
        return Graph.from_edges(self.n, ((pos[u], pos[v]) for u, v in self.edges()))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def make_empty(n: int) -> Graph:
    return Graph(n)


def make_complete(n: int) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << i) for i in range(n)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [(~row & full) ^ (1 << i) for i, row in enumerate(g.rows)])


def make_kr2_minus_c5(r: int) -> Graph:
    """K_{r+2} with the edges of the 5-cycle 0-1-2-3-4-0 removed.

    Vertices 0..4 have degree r-1, the others degree r+1.
    """
    if r < 3:
        raise GraphError("K_{r+2} minus C5 needs r >= 3")
    g = make_complete(r + 2)
    for i in range(5):
        g = delete_edge(g, (i, (i + 1) % 5))
    return g


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """G[H]: vertex (u, x) is labeled ``u * h.n + x``."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise GraphError(f"product has {n} vertices, cap is {MAX_VERTICES}")
    edges = []
    for u in range(g.n):
        for x, y in h.edges():
            edges.append((u * h.n + x, u * h.n + y))
    for u, v in g.edges():
        for x in range(h.n):
            for y in range(h.n):
                edges.append((u * h.n + x, v * h.n + y))
    return Graph.from_edges(n, edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; labels above ``v`` shift down by one."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph")
    low = (1 << v) - 1
    rows = []
    for i, row in enumerate(g.rows):
        if i == v:
            continue
        rows.append((row & low) | ((row >> (v + 1)) << v))
    return Graph(g.n - 1, rows)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not in graph")
    rows = list(g.rows)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    return Graph(g.n, rows)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    pos = {v: i for i, v in enumerate(vertices)}
    return Graph.from_edges(
        len(vertices),
        ((pos[u], pos[v]) for u, v in combinations(vertices, 2) if g.has_edge(u, v)),
    )


# graph6: header byte n+63, then the upper triangle in column order
# (0,1),(0,2),(1,2),(0,3),... packed 6 bits per byte, each byte + 63.

def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX:
        raise GraphError(f"graph6 encoding supports n <= {GRAPH6_MAX}")
    bits = [(g.rows[i] >> j) & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.strip("\r\n")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise GraphError("empty graph6 line")
    codes = [ord(c) - 63 for c in line]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphError("graph6 byte outside 63..126")
    n = codes[0]
    if n > GRAPH6_MAX:
        raise GraphError(f"graph6 header for n > {GRAPH6_MAX} is not supported")
    nbits = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != -(-nbits // 6):
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {-(-nbits // 6)}")
    bits = [(c >> (5 - k)) & 1 for c in body for k in range(6)]
    if any(bits[nbits:]):
        raise GraphError("graph6 padding bits are not zero")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
