"""Lower bounds on edges of critical graphs and on crossing numbers.

Every value is an exact ``Fraction``; 31.1 is carried as 311/10.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, isqrt


class Rule(str, enum.Enum):
    TRIVIAL_DEGREE = "TRIVIAL_DEGREE"
    DIRAC = "DIRAC"
    GALLAI = "GALLAI"
    KOSTOCHKA_STIEBITZ = "KOSTOCHKA_STIEBITZ"
    EULER = "EULER"
    PRTT_7_3 = "PRTT_7_3"
    PRTT_3 = "PRTT_3"
    PRTT_4 = "PRTT_4"
    BORODIN_PLUS1 = "BORODIN_PLUS1"
    CROSSING_LEMMA_64 = "CROSSING_LEMMA_64"
    CROSSING_LEMMA_31_1 = "CROSSING_LEMMA_31_1"


class NotApplicable(ValueError):
    pass


@dataclass(frozen=True)
class LinearForm:
    """``slope * n + intercept`` over the rationals."""

    slope: Fraction
    intercept: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "intercept", Fraction(self.intercept))

    def __call__(self, n) -> Fraction:
        return self.slope * n + self.intercept

    def to_dict(self) -> dict:
        return {"slope": frac_str(self.slope), "intercept": frac_str(self.intercept)}


@dataclass(frozen=True)
class BoundValue:
    value: Fraction
    rule: Rule
    assumptions: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {"value": frac_str(self.value), "rule": self.rule.value, "assumptions": list(self.assumptions)}


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# Crossing inequalities as cr >= alpha*m - beta*n + gamma.
CROSSING_FORMS: dict[Rule, tuple[Fraction, Fraction, Fraction]] = {
    Rule.EULER: (Fraction(1), Fraction(3), Fraction(6)),
    Rule.PRTT_7_3: (Fraction(7, 3), Fraction(25, 3), Fraction(50, 3)),
    Rule.PRTT_3: (Fraction(3), Fraction(35, 3), Fraction(70, 3)),
    Rule.PRTT_4: (Fraction(4), Fraction(103, 6), Fraction(103, 3)),
    Rule.BORODIN_PLUS1: (Fraction(1), Fraction(3), Fraction(7)),
}

CROSSING_LEMMA_64_THRESHOLD = Fraction(4)
CROSSING_LEMMA_31_1_THRESHOLD = Fraction(103, 16)
CROSSING_LEMMA_31_1_CONSTANT = Fraction(311, 10)


def guy_f(n: int) -> int:
    """(1/4) floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 3:
        return 0
    prod = (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2)
    # two of the four consecutive floors are even
    assert prod % 4 == 0
    return prod // 4


def known_cr_complete(n: int) -> int:
    """cr(K_n) for the range where Guy's formula has been proved (n <= 12)."""
    if not 1 <= n <= 12:
        raise ValueError(f"cr(K_{n}) is not known exactly; only n <= 12 is proved")
    return guy_f(n)


def edge_rules(r: int, n: int, assume_not_complete: bool) -> list[BoundValue]:
    """Every edge lower bound on an r-critical graph with n vertices that applies."""
    if r < 3:
        raise ValueError("edge bounds need r >= 3")
    if n < r:
        raise ValueError(f"an {r}-critical graph has at least {r} vertices")
    if n == r + 1:
        raise ValueError(f"no {r}-critical graph has {r + 1} vertices")
    base = Fraction((r - 1) * n, 2)
    out = [BoundValue(base, Rule.TRIVIAL_DEGREE, ("minimum degree >= r-1",))]
    if assume_not_complete:
        out.append(BoundValue(base + Fraction(r - 3, 2), Rule.DIRAC, ("not complete", "r >= 3")))
    if n >= r + 2 and n != 2 * r - 1:
        out.append(BoundValue(base + r - 3, Rule.KOSTOCHKA_STIEBITZ, ("n >= r+2", "n != 2r-1")))
    p = n - r
    if assume_not_complete and 2 <= p <= r - 2:
        out.append(BoundValue(
            base + Fraction(p * r - p * p - 2, 2), Rule.GALLAI,
            ("not complete", f"n = r + p with p = {p} in [2, r-2]"),
        ))
    return out


def min_edges_critical(r: int, n: int, assume_not_complete: bool = True) -> BoundValue:
    """The strongest applicable lower bound on m; earlier rules win ties."""
    best = None
    for b in edge_rules(r, n, assume_not_complete):
        if best is None or b.value > best.value:
            best = b
    return best


def edge_rule_value(rule: Rule, r: int, n: int) -> BoundValue:
    for b in edge_rules(r, n, assume_not_complete=True):
        if b.rule == rule:
            return b
    raise NotApplicable(f"{rule.value} does not apply at r={r}, n={n}")


def crossing_terms(n: int, m, enable_borodin: bool = False) -> dict[Rule, Fraction]:
    terms = {}
    for rule, (alpha, beta, gamma) in CROSSING_FORMS.items():
        if rule == Rule.BORODIN_PLUS1 and not enable_borodin:
            continue
        terms[rule] = alpha * m - beta * n + gamma
    return terms


def cr_lower_linear(n: int, m, enable_borodin: bool = False) -> BoundValue:
    """Integer crossing lower bound: ceiling of the best linear inequality, at least 0.

    ``m`` may be a rational lower bound on the edge count; every
    inequality is increasing in m, so substituting a lower bound is sound.
    The Borodin +1 variant assumes χ(G) >= 7.
    """
    if n < 3:
        raise ValueError("crossing inequalities need n >= 3")
    m = Fraction(m)
    if m < 0 or m > comb(n, 2):
        raise ValueError(f"m={m} outside [0, C({n},2)]")
    terms = crossing_terms(n, m, enable_borodin)
    rule = max(terms, key=lambda k: terms[k])
    assumptions = ("chi(G) >= 7",) if enable_borodin else ()
    return BoundValue(Fraction(max(0, ceil(terms[rule]))), rule, assumptions)


def cr_lower_crossing_lemma(n: int, m) -> BoundValue:
    m = Fraction(m)
    if n <= 0:
        raise NotApplicable("crossing lemma needs n > 0")
    if m >= CROSSING_LEMMA_31_1_THRESHOLD * n:
        return BoundValue(m**3 / (CROSSING_LEMMA_31_1_CONSTANT * n * n), Rule.CROSSING_LEMMA_31_1,
                          ("m >= 103n/16",))
    if m >= CROSSING_LEMMA_64_THRESHOLD * n:
        return BoundValue(m**3 / (64 * n * n), Rule.CROSSING_LEMMA_64, ("m >= 4n",))
    raise NotApplicable(f"m={m} below 4n={4 * n}")


CHI_UPPER_ASSUMPTIONS = ("derived from cr(G) >= (chi-1)^4/256, stated for chi(G) >= 14",)


def chi_upper_from_cr(c: int) -> Fraction:
    """Least integer k with (k-1)^4 >= 256c, i.e. ceil(1 + 4 c^(1/4))."""
    if c < 0:
        raise ValueError("crossing count must be nonnegative")
    k = 1 + isqrt(isqrt(256 * c))
    while (k - 1) ** 4 < 256 * c:
        k += 1
    return Fraction(k)


# Intervals of m/(n-2) on which each inequality is the strongest.
APPLICABILITY = (
    (Rule.EULER, None, Fraction(4)),
    (Rule.PRTT_7_3, Fraction(4), Fraction(5)),
    (Rule.PRTT_3, Fraction(5), Fraction(11, 2)),
    (Rule.PRTT_4, Fraction(11, 2), None),
)


def best_applicability_ranges() -> list[tuple[Rule, Fraction | None, Fraction | None]]:
    return list(APPLICABILITY)


def best_rules_for(n: int, m) -> list[Rule]:
    """Rules whose range contains m/(n-2); both are returned on a boundary."""
    if n < 3:
        raise ValueError("n must be at least 3")
    x = Fraction(m) / (n - 2)
    return [rule for rule, lo, hi in APPLICABILITY
            if (lo is None or x >= lo) and (hi is None or x <= hi)]
