"""Quantitative layer: growth tables, entropy and dimension estimates from
word counts, the two-vertex subshift witnesses for positive dimension, the
closed-form point family of the small-base classification, and the
rearranged Thue-Morse series identity used as a residual check at the
critical base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import admissibility, bases, geometry, words
from .admissibility import GrowthRow, SizeLimit
from .bases import Interval
from .words import EventuallyPeriodic


class InsufficientData(ValueError):
    """Too few usable rows for a growth-rate fit."""


class PreconditionFailed(ValueError):
    pass


# ---------------------------------------------------------------------------
# growth tables and fits


def growth_counts(beta: bases.RealBase, m_max: int, horizon: int,
                  cap: int = 5_000_000) -> List[GrowthRow]:
    """Extendable-word counts per length, the raw data behind the entropy
    and dimension estimates."""
    return admissibility.growth_scan(beta, m_max, horizon, cap=cap)


def table_to_csv(rows: Sequence[GrowthRow]) -> str:
    out = ["m,admissible,extendable"]
    out.extend("%d,%d,%d" % (r.m, r.admissible, r.extendable) for r in rows)
    return "\n".join(out) + "\n"


@dataclass
class EntropyEstimate:
    slope: float            # nats per symbol
    stderr: float
    fit_lengths: Tuple[int, int]
    points: int

    def to_json(self) -> dict:
        return {"slope_nats": self.slope, "stderr": self.stderr,
                "fit_from": self.fit_lengths[0], "fit_to": self.fit_lengths[1],
                "points": self.points}


def entropy_estimate(rows: Sequence[GrowthRow],
                     fit_count: Optional[int] = None) -> EntropyEstimate:
    """Least-squares slope of log(extendable count) against length over the
    largest lengths (top half by default, at least four rows)."""
    usable = [r for r in rows if r.extendable > 0]
    if len(usable) < 4:
        raise InsufficientData("need at least 4 rows with positive counts")
    k = fit_count if fit_count is not None else max(4, len(usable) // 2)
    window = usable[-k:]
    xs = [r.m for r in window]
    ys = [math.log(r.extendable) for r in window]
    n = len(xs)
    xbar = sum(xs) / n
    ybar = sum(ys) / n
    sxx = sum((x - xbar) ** 2 for x in xs)
    if sxx == 0:
        raise InsufficientData("degenerate fit window")
    slope = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / sxx
    residuals = [y - (ybar + slope * (x - xbar)) for x, y in zip(xs, ys)]
    if n > 2:
        stderr = math.sqrt(sum(r * r for r in residuals) / (n - 2) / sxx)
    else:
        stderr = 0.0
    return EntropyEstimate(slope, stderr, (xs[0], xs[-1]), n)


@dataclass
class DimensionReport:
    value: float
    slope: float
    stderr: float
    log_beta: float
    beta: str
    beta_enclosure: Tuple[str, str]
    fit_lengths: Tuple[int, int]

    def to_json(self) -> dict:
        return {"dimension": self.value, "slope_nats": self.slope,
                "stderr": self.stderr, "log_beta": self.log_beta,
                "beta": self.beta,
                "beta_enclosure": list(self.beta_enclosure),
                "fit_from": self.fit_lengths[0], "fit_to": self.fit_lengths[1]}


def dimension_estimate(beta: bases.RealBase, rows: Sequence[GrowthRow],
                       fit_count: Optional[int] = None) -> DimensionReport:
    """Growth slope divided by log(base); carries the enclosure used."""
    est = entropy_estimate(rows, fit_count)
    enc = beta.enclosure(Fraction(1, 10**12))
    log_beta = math.log(float(enc.mid))
    return DimensionReport(
        value=est.slope / log_beta,
        slope=est.slope,
        stderr=est.stderr,
        log_beta=log_beta,
        beta=beta.describe(),
        beta_enclosure=(str(enc.lo), str(enc.hi)),
        fit_lengths=est.fit_lengths,
    )


# ---------------------------------------------------------------------------
# the two-vertex subshift


@dataclass(frozen=True)
class XnGraph:
    """Two vertices with two out-edges each; every edge label is one of the
    four level-n type-A blocks, all of length 3 * 2^(n-1)."""

    n: int

    @property
    def block_length(self) -> int:
        return 3 * 2 ** (self.n - 1)

    @property
    def edges(self) -> dict:
        u = words.type_word("A", self.n)
        ub = words.type_word("A", self.n, replace_last=True)
        return {
            ("L", "L"): words.phi("A", u),
            ("L", "R"): words.phi("A", ub),
            ("R", "R"): u,
            ("R", "L"): ub,
        }

    def entropy_printed_form(self) -> float:
        """log 2 / log(block length), the closed form printed alongside."""
        return math.log(2) / math.log(self.block_length)

    def entropy_per_symbol(self) -> float:
        """log 2 / block length, the per-symbol rate from path counting."""
        return math.log(2) / self.block_length


def xn_words(n: int, k: int, cap: int = 200_000) -> List[str]:
    """Label words of all k-edge paths from both vertices: 2^(k+1) distinct
    words of length k times the block length."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    graph = XnGraph(n)
    total = k * graph.block_length
    if total * 2 ** (k + 1) > cap * 8:
        raise SizeLimit("xn_words(%d, %d) would emit %d symbols"
                        % (n, k, total * 2 ** (k + 1)))
    edges = graph.edges
    out = []
    for start in ("L", "R"):
        frontier = [(start, "")]
        for _ in range(k):
            nxt = []
            for vertex, word in frontier:
                for (a, b), label in edges.items():
                    if a == vertex:
                        nxt.append((b, word + label))
            frontier = nxt
        out.extend(word for _, word in frontier)
    return sorted(out)


def xn_growth_table(n: int, k_max: int) -> List[GrowthRow]:
    """Counts of distinct k-edge label words, at lengths k * block length."""
    graph = XnGraph(n)
    rows = []
    for k in range(1, k_max + 1):
        count = 2 ** (k + 1)
        rows.append(GrowthRow(k * graph.block_length, count, count))
    return rows


# ---------------------------------------------------------------------------
# series identity residual


@dataclass
class MahlerReport:
    n_terms: int
    residual: Interval
    residual_sup: Fraction
    tail_bound: Fraction
    slack: Fraction
    within_bound: bool
    beta: str

    def to_json(self) -> dict:
        return {"N": self.n_terms,
                "residual_sup": float(self.residual_sup),
                "tail_bound": float(self.tail_bound),
                "slack": float(self.slack),
                "within_bound": self.within_bound,
                "beta": self.beta}


def mahler_residual(beta: bases.RealBase, n_terms: int = 60) -> MahlerReport:
    """Distance between the partial sums of sum(tau_n x^-3n) and its closed
    rational form x(x^3-x^2-1)/((x-1)(x^3-1)); at the critical base the true
    value is the series tail, so the residual must stay inside the geometric
    tail bound (plus the width of the interval data)."""
    if n_terms < 8:
        raise ValueError("need at least 8 terms")
    bits = int(3 * n_terms * 0.64) + 40
    if beta.kind == "rational":
        enc = Interval.point(beta.fraction)
    else:
        enc = beta.enclosure(Fraction(1, 2 ** bits))
    b = enc if enc.width > 0 else enc.lo
    bi = b if isinstance(b, Interval) else Interval.point(b)
    inv3 = (Interval.point(1) / bi).pow_int(3)
    total = Interval.point(0)
    power = Interval.point(1)
    for n in range(1, n_terms + 1):
        power = power * inv3
        if bin(n).count("1") & 1:
            total = total + power
    closed = (bi * (bi.pow_int(3) - bi.pow_int(2) - Interval.point(1))
              / ((bi - Interval.point(1)) * (bi.pow_int(3) - Interval.point(1))))
    residual = total - closed
    lo = enc.lo if isinstance(enc, Interval) else enc
    tail_bound = lo ** (-3 * n_terms) / (1 - lo ** -3)
    slack = residual.width
    sup = residual.abs_sup()
    return MahlerReport(n_terms, residual, sup, tail_bound, slack,
                        sup <= tail_bound + slack, beta.describe())


# ---------------------------------------------------------------------------
# the closed-form point family below 3/2


ORBITS = ("BAC", "CAB", "CBA", "ABC", "ACB", "BCA")

# coordinates of the periodic-orbit numerator Q, as powers of the base:
# entry (i, j) means Q = (beta^i, beta^j)
_ORBIT_Q_POWERS = {
    "BAC": (2, 0), "CAB": (0, 2),
    "CBA": (1, 2), "ABC": (1, 0),
    "ACB": (0, 1), "BCA": (2, 1),
}


@dataclass
class TheoremAEntry:
    coding: EventuallyPeriodic
    n: int
    prefix_digit: Optional[str]
    closed_form: Tuple[Fraction, Fraction]
    evaluated: Tuple[Fraction, Fraction]
    matches: bool

    def to_json(self) -> dict:
        return {"coding": str(self.coding), "n": self.n,
                "prefix_digit": self.prefix_digit,
                "closed_form": [str(c) for c in self.closed_form],
                "matches": self.matches}


def theorem_a_points(beta: bases.RealBase, n_max: int) -> List[TheoremAEntry]:
    """Every coding of the form d^n followed by a period-3 orbit, paired with
    its closed form P + Q/(beta^n(beta^3-1)), plus the three fixed vertices.
    The closed form comes from the symbolic Q table; the evaluation is the
    independent geometric series, and both must agree exactly for rational
    bases."""
    if beta.kind != "rational":
        raise PreconditionFailed("closed-form audit needs a rational base")
    b = beta.fraction
    bg_hi = bases.beta_ladder(1).enclosure(Fraction(1, 10**8)).hi
    if not (bg_hi < b <= Fraction(3, 2)):
        raise PreconditionFailed(
            "base %s outside the classification window (branch point, 3/2]" % b)
    if n_max > 8:
        raise ValueError("n_max capped at 8")
    entries: List[TheoremAEntry] = []
    denom3 = b**3 - 1
    for vertex, point in (("A", (Fraction(0), Fraction(0))),
                          ("B", (1 / (b - 1), Fraction(0))),
                          ("C", (Fraction(0), 1 / (b - 1)))):
        coding = EventuallyPeriodic("", vertex)
        got = geometry.point_of(coding, beta)
        entries.append(TheoremAEntry(coding, 0, None, point,
                                     (got.x, got.y),
                                     (got.x, got.y) == point))
    for n in range(n_max + 1):
        prefixes = [("A", (Fraction(0), Fraction(0)))]
        if n >= 1:
            tail_sum = sum(b ** -i for i in range(1, n + 1))
            prefixes = [("A", (Fraction(0), Fraction(0))),
                        ("B", (tail_sum, Fraction(0))),
                        ("C", (Fraction(0), tail_sum))]
        for orbit in ORBITS:
            qi, qj = _ORBIT_Q_POWERS[orbit]
            q_vec = (b**qi if qi else Fraction(1), b**qj if qj else Fraction(1))
            for digit, p_vec in prefixes:
                coding = EventuallyPeriodic(digit * n, orbit)
                scale = b**n * denom3
                closed = (p_vec[0] + q_vec[0] / scale, p_vec[1] + q_vec[1] / scale)
                got = geometry.point_of(coding, beta)
                entries.append(TheoremAEntry(
                    coding, n, digit if n else None, closed,
                    (got.x, got.y), (got.x, got.y) == closed))
    return entries
