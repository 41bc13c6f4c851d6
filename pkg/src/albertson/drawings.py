"""Polyline drawings with exact crossing counts, and the two-circle drawing of K_n.

Coordinates are rationals.  For counting, every coordinate is scaled to a
common denominator so all predicates are integer orientation tests; they
run vectorized in int64 whenever the magnitudes leave headroom for the
products, and in Python integers otherwise.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

import numpy as np

from .graph import Graph, make_complete

Point = tuple[Fraction, Fraction]

INT64_SAFE = 1 << 29  # coordinate differences below 2^30 keep cross products under 2^61


class DrawingError(ValueError):
    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = violations or []


@dataclass(frozen=True)
class Violation:
    kind: str
    routes: tuple
    where: Optional[Point] = None
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "routes": [list(r) if isinstance(r, tuple) else r for r in self.routes],
             "detail": self.detail}
        if self.where is not None:
            d["where"] = [_q(self.where[0]), _q(self.where[1])]
        return d


@dataclass
class Drawing:
    host: Graph
    points: dict[int, Point]
    routes: dict[tuple[int, int], list[Point]]

    def to_dict(self) -> dict:
        return {
            "n": self.host.n,
            "points": {str(v): [_q(p[0]), _q(p[1])] for v, p in sorted(self.points.items())},
            "routes": [
                {"edge": [u, v], "points": [[_q(x), _q(y)] for x, y in pts]}
                for (u, v), pts in sorted(self.routes.items())
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Drawing":
        points = {int(v): (Fraction(p[0]), Fraction(p[1])) for v, p in d["points"].items()}
        routes = {}
        for item in d["routes"]:
            u, v = item["edge"]
            routes[(min(u, v), max(u, v))] = [(Fraction(x), Fraction(y)) for x, y in item["points"]]
        host = Graph.from_edges(int(d["n"]), routes.keys())
        return cls(host, points, routes)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def transformed(self, fn) -> "Drawing":
        """Apply a point map ``fn`` to every coordinate."""
        return Drawing(
            self.host,
            {v: fn(p) for v, p in self.points.items()},
            {e: [fn(p) for p in pts] for e, pts in self.routes.items()},
        )


@dataclass
class CrossingCount:
    total: int
    pairs: dict[tuple[tuple[int, int], tuple[int, int]], int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "pairs": [{"edges": [list(a), list(b)], "count": c} for (a, b), c in sorted(self.pairs.items())],
        }


def _q(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def straight_line_drawing(g: Graph, points: dict[int, Point]) -> Drawing:
    pts = {v: (Fraction(p[0]), Fraction(p[1])) for v, p in points.items()}
    return Drawing(g, pts, {(u, v): [pts[u], pts[v]] for u, v in g.edges()})


# ---------------------------------------------------------------------------
# exact scan

def _integerize(d: Drawing):
    den = 1
    for p in list(d.points.values()) + [q for pts in d.routes.values() for q in pts]:
        den = math.lcm(den, Fraction(p[0]).denominator, Fraction(p[1]).denominator)
    def conv(p):
        return (int(Fraction(p[0]) * den), int(Fraction(p[1]) * den))
    points = {v: conv(p) for v, p in d.points.items()}
    routes = {e: [conv(p) for p in pts] for e, pts in d.routes.items()}
    return den, points, routes


def _orient(a, b, c) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(p, a, b) -> bool:
    return (_orient(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _contact(a, b, c, d):
    """Intersection of closed segments ab and cd: None, ("point", P) or ("overlap", None).

    P is an exact point in grid units.
    """
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    if o1 == o2 == o3 == o4 == 0:
        # collinear: project on the dominant axis
        axis = 0 if abs(b[0] - a[0]) + abs(d[0] - c[0]) >= abs(b[1] - a[1]) + abs(d[1] - c[1]) else 1
        lo = max(min(a[axis], b[axis]), min(c[axis], d[axis]))
        hi = min(max(a[axis], b[axis]), max(c[axis], d[axis]))
        if lo > hi:
            return None
        if lo < hi:
            return ("overlap", None)
        for p in (a, b):
            if p[axis] == lo and _on_segment(p, c, d):
                return ("point", (Fraction(p[0]), Fraction(p[1])))
        return None
    if ((o1 > 0 and o2 > 0) or (o1 < 0 and o2 < 0) or (o3 > 0 and o4 > 0) or (o3 < 0 and o4 < 0)):
        return None
    den = (b[0] - a[0]) * (d[1] - c[1]) - (b[1] - a[1]) * (d[0] - c[0])
    if den == 0:
        return None
    t = Fraction((c[0] - a[0]) * (d[1] - c[1]) - (c[1] - a[1]) * (d[0] - c[0]), den)
    if not 0 <= t <= 1:
        return None
    p = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
    u_num = (c[0] - a[0]) * (b[1] - a[1]) - (c[1] - a[1]) * (b[0] - a[0])
    u = Fraction(u_num, den)
    if not 0 <= u <= 1:
        return None
    return ("point", p)


def _proper(a, b, c, d) -> bool:
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def _candidate_pairs(ra: np.ndarray, rb: np.ndarray):
    """Indices (i, j) of segment pairs that touch at all, split into proper and other."""
    A, B = ra[:-1, None, :], ra[1:, None, :]
    C, D = rb[None, :-1, :], rb[None, 1:, :]

    def orient(p, q, s):
        return (q[..., 0] - p[..., 0]) * (s[..., 1] - p[..., 1]) - (q[..., 1] - p[..., 1]) * (s[..., 0] - p[..., 0])

    s1 = np.sign(orient(A, B, C))
    s2 = np.sign(orient(A, B, D))
    s3 = np.sign(orient(C, D, A))
    s4 = np.sign(orient(C, D, B))
    proper = (s1 * s2 < 0) & (s3 * s4 < 0)
    # bounding boxes must meet for any contact
    bx = (np.maximum(A[..., 0], B[..., 0]) >= np.minimum(C[..., 0], D[..., 0])) & \
         (np.maximum(C[..., 0], D[..., 0]) >= np.minimum(A[..., 0], B[..., 0])) & \
         (np.maximum(A[..., 1], B[..., 1]) >= np.minimum(C[..., 1], D[..., 1])) & \
         (np.maximum(C[..., 1], D[..., 1]) >= np.minimum(A[..., 1], B[..., 1]))
    maybe = bx & ~proper & (s1 * s2 <= 0) & (s3 * s4 <= 0) & ((s1 == 0) | (s2 == 0) | (s3 == 0) | (s4 == 0))
    return np.argwhere(proper), np.argwhere(maybe)


def _py_candidate_pairs(ra, rb):
    proper, maybe = [], []
    for i in range(len(ra) - 1):
        for j in range(len(rb) - 1):
            a, b, c, d = ra[i], ra[i + 1], rb[j], rb[j + 1]
            if _proper(a, b, c, d):
                proper.append((i, j))
            elif _contact(a, b, c, d) is not None:
                maybe.append((i, j))
    return proper, maybe


def _bbox(pts):
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs), min(ys), max(xs), max(ys)


def _scan(d: Drawing):
    """Exact pass over the drawing: crossing points per route pair, and violations."""
    violations: list[Violation] = []
    den, points, routes = _integerize(d)

    def back(p):
        return (Fraction(p[0]) / den, Fraction(p[1]) / den)

    for v in range(d.host.n):
        if v not in points:
            violations.append(Violation("MISSING_POINT", (v,)))
    for e in d.host.edges():
        if e not in routes:
            violations.append(Violation("MISSING_ROUTE", (e,)))
    for e in routes:
        if not d.host.has_edge(*e):
            violations.append(Violation("NOT_AN_EDGE", (e,)))
    if violations:
        return {}, violations
    seen_pts: dict = {}
    for v, p in points.items():
        if p in seen_pts:
            violations.append(Violation("COINCIDENT_VERTICES", (seen_pts[p], v), back(p)))
        seen_pts[p] = v

    for e, pts in routes.items():
        u, v = e
        ends = {pts[0], pts[-1]}
        if len(pts) < 2 or ends != {points[u], points[v]}:
            violations.append(Violation("BAD_ENDPOINTS", (e,)))
            continue
        for a, b in zip(pts, pts[1:]):
            if a == b:
                violations.append(Violation("DEGENERATE_SEGMENT", (e,), back(a)))
        # simple curve: non-consecutive segments disjoint, consecutive ones meet only at the joint
        for i in range(len(pts) - 1):
            for j in range(i + 1, len(pts) - 1):
                c = _contact(pts[i], pts[i + 1], pts[j], pts[j + 1])
                if c is None:
                    continue
                if j == i + 1 and c[0] == "point" and c[1] == (Fraction(pts[j][0]), Fraction(pts[j][1])):
                    continue
                violations.append(Violation("SELF_INTERSECTION", (e,), back(c[1]) if c[1] else None))

    # vertices lying on routes of other edges
    for e, pts in routes.items():
        box = _bbox(pts)
        for w, p in points.items():
            if w in e or not (box[0] <= p[0] <= box[2] and box[1] <= p[1] <= box[3]):
                continue
            for a, b in zip(pts, pts[1:]):
                if _on_segment(p, a, b):
                    violations.append(Violation("VERTEX_ON_EDGE", (e, w), back(p)))
                    break

    maxabs = max(max(abs(c) for p in pts for c in p) for pts in routes.values()) if routes else 0
    use_np = 2 * maxabs < INT64_SAFE * 2
    arrays = {e: np.array(pts, dtype=np.int64) for e, pts in routes.items()} if use_np else None
    boxes = {e: _bbox(pts) for e, pts in routes.items()}

    crossings: dict = {}
    owners: dict = {}
    edges = sorted(routes)
    for e, f in combinations(edges, 2):
        be, bf = boxes[e], boxes[f]
        if be[2] < bf[0] or bf[2] < be[0] or be[3] < bf[1] or bf[3] < be[1]:
            continue
        re_, rf = routes[e], routes[f]
        if use_np:
            prop, maybe = _candidate_pairs(arrays[e], arrays[f])
            prop = [tuple(x) for x in prop.tolist()]
            maybe = [tuple(x) for x in maybe.tolist()]
        else:
            prop, maybe = _py_candidate_pairs(re_, rf)
        shared = set(e) & set(f)
        shared_pt = points[next(iter(shared))] if shared else None
        for i, j in maybe:
            c = _contact(re_[i], re_[i + 1], rf[j], rf[j + 1])
            if c is None:
                continue
            if c[0] == "overlap":
                violations.append(Violation("OVERLAP", (e, f)))
                continue
            p = c[1]
            if shared_pt is not None and p == (Fraction(shared_pt[0]), Fraction(shared_pt[1])):
                continue
            violations.append(Violation("TOUCH", (e, f), back(p), "non-transversal contact or crossing at a bend"))
        if not prop:
            continue
        if shared:
            violations.append(Violation("ADJACENT_CROSSING", (e, f), None, f"{len(prop)} crossing(s)"))
            continue
        crossings[(e, f)] = len(prop)
        for i, j in prop:
            c = _contact(re_[i], re_[i + 1], rf[j], rf[j + 1])
            p = c[1]
            owners.setdefault(p, set()).update((e, f))
    for p, who in owners.items():
        if len(who) > 2:
            violations.append(Violation("TRIPLE_POINT", tuple(sorted(who)), back(p)))
    return crossings, violations


def validate_drawing(d: Drawing) -> list[Violation]:
    """Every good-drawing violation found; an empty list means the drawing is valid."""
    return _scan(d)[1]


def count_crossings(d: Drawing) -> CrossingCount:
    crossings, violations = _scan(d)
    if violations:
        raise DrawingError(f"invalid drawing: {len(violations)} violation(s), first {violations[0].kind}",
                           violations)
    return CrossingCount(sum(crossings.values()), crossings)


# ---------------------------------------------------------------------------
# two-circle drawing of K_n

INNER_RADIUS = 1.0
OUTER_RADIUS = 2.0
OUTER_GAP = 0.25
JITTER = 1 / 2000  # turns


def _turn_point(radius: float, turns: float, scale: int) -> Point:
    ang = 2 * math.pi * turns
    return (Fraction(round(radius * math.cos(ang) * scale), scale),
            Fraction(round(radius * math.sin(ang) * scale), scale))


def _jitter(v: int) -> float:
    # deterministic and non-linear in v, so no three jittered vertices keep a symmetric pattern
    return JITTER * ((v * v * 37 + v * 11) % 101) / 101


def wrap_turns(x: Fraction) -> Fraction:
    """Reduce to (-1/2, 1/2]; a half turn goes the positive way."""
    x = x - math.floor(x)
    return x - 1 if x > Fraction(1, 2) else x


@dataclass(frozen=True)
class CylindricalLayout:
    n: int
    outer: tuple[int, ...]
    inner: tuple[int, ...]

    def angle(self, v: int) -> Fraction:
        """Exact angle of v in turns."""
        if v in self.outer:
            return Fraction(self.outer.index(v), len(self.outer))
        i = self.inner.index(v)
        return Fraction(2 * i + 1, 2 * len(self.inner))


def cylindrical_layout(n: int) -> CylindricalLayout:
    b = (n + 1) // 2
    return CylindricalLayout(n, tuple(range(b)), tuple(range(b, n)))


def _outer_arc(lay: CylindricalLayout, u: int, v: int) -> tuple[int, int, Fraction]:
    """(start, end, span) of the outer arc for edge uv, sweeping counterclockwise."""
    b = len(lay.outer)
    gap = Fraction((lay.outer.index(v) - lay.outer.index(u)) % b, b)
    if gap < Fraction(1, 2) or (gap == Fraction(1, 2) and u < v):
        return u, v, gap
    return v, u, 1 - gap


def cylindrical_drawing(n: int, segments: int = 64, grid_bits: int = 20, retries: int = 2) -> Drawing:
    """K_n with vertices equally spaced on two concentric circles.

    Inner-inner edges are straight chords, outer-outer edges run outside the
    outer circle on nested arcs, and inner-outer edges follow the shorter
    helix of the annulus viewed as a cylinder.
    """
    if not 3 <= n <= 14:
        raise ValueError("cylindrical_drawing supports 3 <= n <= 14")
    last = None
    for attempt in range(retries + 1):
        d = _build_cylindrical(n, segments << attempt, grid_bits + 4 * attempt)
        last = validate_drawing(d)
        if not last:
            return d
    raise DrawingError(f"two-circle drawing of K_{n} failed validation", last)


def _build_cylindrical(n: int, segments: int, grid_bits: int) -> Drawing:
    lay = cylindrical_layout(n)
    scale = 1 << grid_bits
    g = make_complete(n)
    turns = {v: float(lay.angle(v)) + _jitter(v) for v in range(n)}
    radius = {v: (OUTER_RADIUS if v in lay.outer else INNER_RADIUS) for v in range(n)}
    points = {v: _turn_point(radius[v], turns[v], scale) for v in range(n)}
    routes: dict[tuple[int, int], list[Point]] = {}

    for u, v in combinations(lay.inner, 2):
        routes[(u, v)] = [points[u], points[v]]

    b = len(lay.outer)
    arcs = [(_outer_arc(lay, u, v), (u, v)) for u, v in combinations(lay.outer, 2)]
    arcs.sort(key=lambda item: (item[0][2], item[1]))
    slant = 1 / (32 * b)
    for rank, ((s, t, span), e) in enumerate(arcs):
        rad = OUTER_RADIUS + OUTER_GAP * (rank + 1)
        a0 = turns[s] + slant
        a1 = float(lay.angle(s) + span) + _jitter(t) - slant
        steps = int(span * b) * 4
        pts = [points[s], _turn_point(rad, a0, scale)]
        for k in range(steps):
            pts.append(_turn_point(rad, a0 + (a1 - a0) * (k + 0.5) / steps, scale))
        pts += [_turn_point(rad, a1, scale), points[t]]
        routes[e] = pts if s == e[0] else pts[::-1]

    for i in lay.inner:
        for o in lay.outer:
            disp = float(wrap_turns(lay.angle(o) - lay.angle(i))) + _jitter(o) - _jitter(i)
            pts = [points[i]]
            for k in range(1, segments):
                t = k / segments
                pts.append(_turn_point(INNER_RADIUS + (OUTER_RADIUS - INNER_RADIUS) * t, turns[i] + disp * t, scale))
            pts.append(points[o])
            routes[(o, i)] = pts[::-1]
    return Drawing(g, points, routes)


def _interleaved(a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> bool:
    """Chords ab and cd of a circle, given by angles in [0, 1), cross."""
    lo, hi = min(a, b), max(a, b)
    return (lo < c < hi) != (lo < d < hi)


def cylindrical_count_breakdown(n: int) -> dict[str, int]:
    """Crossings of the two-circle drawing, counted without any geometry."""
    if n < 3:
        raise ValueError("n must be at least 3")
    lay = cylindrical_layout(n)
    ang = {v: lay.angle(v) for v in range(n)}

    def disk(vs):
        count = 0
        for (p, q), (r, s) in combinations(combinations(vs, 2), 2):
            if len({p, q, r, s}) == 4 and _interleaved(ang[p], ang[q], ang[r], ang[s]):
                count += 1
        return count

    # annulus edges lifted to the universal cover of the cylinder:
    # theta(h) = start + h * disp for h in [0, 1]; crossings are the
    # multiples of a full turn strictly inside the range of the angle difference
    helices = [(i, o, ang[i], wrap_turns(ang[o] - ang[i])) for i in lay.inner for o in lay.outer]
    annulus = 0
    for (i1, o1, s1, d1), (i2, o2, s2, d2) in combinations(helices, 2):
        if i1 == i2 or o1 == o2:
            continue
        lo, hi = sorted((s1 - s2, s1 - s2 + d1 - d2))
        annulus += max(0, math.ceil(hi) - math.floor(lo) - 1)
    return {"inner": disk(lay.inner), "outer": disk(lay.outer), "annulus": annulus}


def cylindrical_count(n: int) -> int:
    return sum(cylindrical_count_breakdown(n).values())


def to_svg(d: Drawing, size: int = 600) -> str:
    xs = [float(p[0]) for pts in d.routes.values() for p in pts] + [float(p[0]) for p in d.points.values()]
    ys = [float(p[1]) for pts in d.routes.values() for p in pts] + [float(p[1]) for p in d.points.values()]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y) or 1.0
    pad = 10

    def tx(p):
        return (pad + (float(p[0]) - lo_x) / span * (size - 2 * pad),
                pad + (hi_y - float(p[1])) / span * (size - 2 * pad))

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">']
    for (u, v), pts in sorted(d.routes.items()):
        coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(tx, pts))
        out.append(f'<polyline points="{coords}" fill="none" stroke="black" stroke-width="0.6"/>')
    for v, p in sorted(d.points.items()):
        x, y = tx(p)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="red"><title>{v}</title></circle>')
    out.append("</svg>")
    return "\n".join(out)
