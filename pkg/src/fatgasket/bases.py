"""Real-base arithmetic on (1, 2]: quasi-greedy expansions of 1, the Parry
shift-domination test, the inverse map from eventually periodic expansions to
bases via integer polynomials and rigorous root isolation, and the critical
ladder of bases attached to the block Thue-Morse words.

All arithmetic is exact: bases are rationals, integer-polynomial roots with
isolating intervals, or the series-defined critical base; enclosures have
Fraction endpoints and only ever shrink.  High-precision refinement runs on
scaled-integer evaluations of the digit series with one-sided rounding, so a
reported sign is always rigorous.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from . import words
from .words import EventuallyPeriodic

BITS_START = 128
BITS_CAP = 8192

DEFAULT_TOL = Fraction(1, 10**10)


class PrecisionExhausted(ArithmeticError):
    """A sign or digit decision stayed ambiguous at the precision cap."""


class NotParryAdmissible(ValueError):
    """The sequence fails the shift-domination test."""


class EndsInZeros(ValueError):
    """The sequence ends in an infinite tail of zeros."""


class InvalidBase(ValueError):
    """The base description does not define a unique base in (1, 2]."""


# ---------------------------------------------------------------------------
# intervals


@dataclass(frozen=True)
class Interval:
    """Closed interval with exact rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @staticmethod
    def point(v) -> "Interval":
        v = Fraction(v)
        return Interval(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, v) -> bool:
        return self.lo <= v <= self.hi

    def __add__(self, other) -> "Interval":
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other) -> "Interval":
        other = _as_interval(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other) -> "Interval":
        other = _as_interval(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other) -> "Interval":
        return _as_interval(other) - self

    def __truediv__(self, other) -> "Interval":
        other = _as_interval(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval denominator contains zero")
        return self * Interval(1 / other.hi, 1 / other.lo)

    def __rtruediv__(self, other) -> "Interval":
        return _as_interval(other) / self

    def pow_int(self, k: int) -> "Interval":
        if k < 0:
            return Interval.point(1) / self.pow_int(-k)
        result = Interval.point(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sign(self) -> Optional[int]:
        """-1, 0 (identically zero) or +1; None when the interval straddles 0."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def abs_sup(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))


def _as_interval(v) -> Interval:
    if isinstance(v, Interval):
        return v
    return Interval.point(v)


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (coefficients ascending)


def poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_degree(coeffs) -> int:
    return len(poly_trim(coeffs)) - 1


def poly_eval_fraction(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_sign_at(coeffs, x: Fraction) -> int:
    """Exact sign of an integer polynomial at a rational point."""
    num, den = x.numerator, x.denominator
    acc = 0
    power = 1
    for c in reversed(coeffs):
        acc = acc * num + c * power
        power *= den
    return (acc > 0) - (acc < 0)


def poly_eval_interval(coeffs, x: Interval) -> Interval:
    acc = Interval.point(0)
    for c in reversed(coeffs):
        acc = acc * x + Interval.point(c)
    return acc


def poly_derivative(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def _poly_divmod(a, b):
    a = [Fraction(c) for c in poly_trim(a)]
    b = [Fraction(c) for c in poly_trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = a[:]
    while len(r) >= len(b) and poly_trim(r):
        shift = len(r) - len(b)
        factor = r[-1] / b[-1]
        q[shift] = factor
        for i, bc in enumerate(b):
            r[shift + i] -= factor * bc
        r = poly_trim(r)
    return q, r


def poly_gcd(a, b):
    """Monic gcd over the rationals, as a Fraction coefficient list."""
    a = [Fraction(c) for c in poly_trim(a)]
    b = [Fraction(c) for c in poly_trim(b)]
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def _sturm_chain(coeffs):
    chain = [
        [Fraction(c) for c in poly_trim(coeffs)],
        [Fraction(c) for c in poly_trim(poly_derivative(coeffs))],
    ]
    while poly_trim(chain[-1]):
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not poly_trim(r):
            break
        chain.append([-c for c in r])
    return [c for c in chain if poly_trim(c)]


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = poly_eval_fraction(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(coeffs, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi] via Sturm's theorem."""
    chain = _sturm_chain(coeffs)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def format_poly(coeffs) -> str:
    """Human form of an integer polynomial, highest power first."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = "x" if mag == 1 else "%dx" % mag
        else:
            body = "x^%d" % i if mag == 1 else "%dx^%d" % (mag, i)
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += " %s %s" % (sign, body)
    return out


_TERM_RE = re.compile(
    r"([+-]?)\s*(?:(\d+)\s*\*?\s*)?(x)(?:\^(\d+))?|([+-]?)\s*(\d+)"
)


def parse_poly(text: str):
    """Parse forms like x^3-x^2-1 or 2x^2 - 3 into ascending coefficients."""
    coeffs = {}
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise InvalidBase("cannot parse polynomial %r" % text)
        if m.group(3):
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) else 1
            power = int(m.group(4)) if m.group(4) else 1
        else:
            sign = -1 if m.group(5) == "-" else 1
            coef = int(m.group(6))
            power = 0
        coeffs[power] = coeffs.get(power, 0) + sign * coef
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    if not coeffs:
        raise InvalidBase("empty polynomial")
    top = max(coeffs)
    return [coeffs.get(i, 0) for i in range(top + 1)]


# ---------------------------------------------------------------------------
# rigorous sign of sum(a_i x^-i) - 1 via scaled-integer Horner


def _series_sign_fixed(digit_at, num: int, den: int, prec: int) -> Optional[int]:
    """Sign of sum_{i>=1} a_i (num/den)^{-i} - 1 at x = num/den > 1.

    All rounding is downward, so a positive verdict uses the computed value
    alone and a negative verdict adds the accumulated error and tail bound.
    Returns None when the margin is below the working precision.
    """
    x = num / den
    if x <= 1.0:
        raise ValueError("series sign needs x > 1")
    log2x = math.log2(x)
    inv_gap = max(1.0, 1.0 / (x - 1.0))
    n_terms = int((prec + 8 + math.log2(inv_gap)) / log2x) + 2
    if n_terms > 10**7:
        raise PrecisionExhausted("series sign would need %d terms" % n_terms)
    scale = 1 << prec
    y = (scale * den) // num
    acc = 0
    for i in range(n_terms, 0, -1):
        acc = (acc * y) >> prec
        if digit_at(i):
            acc += scale
    acc = (acc * y) >> prec
    err = 5 * (n_terms + 1) + 16
    if acc > scale:
        return 1
    if acc + err + 1 < scale:
        return -1
    return None


def _bisect_series(digit_at, lo: Fraction, hi: Fraction, target: Fraction,
                   bits_cap: int = BITS_CAP) -> Interval:
    """Shrink [lo, hi] around the unique root of sum(a_i x^-i) = 1.

    Needs the sign to be + at lo and - at hi.  Probes are dyadic; working
    precision tracks the bracket width so late iterations stay cheap.
    """
    while hi - lo > target:
        mid = (lo + hi) / 2
        width_bits = max(8, -(hi - lo).numerator.bit_length()
                         + (hi - lo).denominator.bit_length())
        s = None
        prec = width_bits + 64
        while s is None and prec <= bits_cap + 64:
            s = _series_sign_fixed(digit_at, mid.numerator, mid.denominator, prec)
            if s is None:
                prec *= 2
        if s is None:
            # midpoint may sit essentially on the root; nudge the probe
            mid = lo + (hi - lo) * Fraction(5, 11)
            s = _series_sign_fixed(digit_at, mid.numerator, mid.denominator,
                                   bits_cap + 64)
            if s is None:
                raise PrecisionExhausted("root sign undecidable at bit cap")
        if s > 0:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)


def _bisect_poly_sign(coeffs, lo: Fraction, hi: Fraction, target: Fraction) -> Interval:
    """Bisection with exact integer-polynomial signs (small degrees only)."""
    s_lo = poly_sign_at(coeffs, lo)
    while hi - lo > target:
        mid = (lo + hi) / 2
        s = poly_sign_at(coeffs, mid)
        if s == 0:
            eps = (hi - lo) / 1024
            return Interval(max(lo, mid - eps), min(hi, mid + eps))
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)


def _width_to_target(width) -> Fraction:
    t = Fraction(width) if not isinstance(width, Fraction) else width
    if t <= 0:
        raise ValueError("width must be positive")
    return t


# ---------------------------------------------------------------------------
# the base type


class RealBase:
    """A base in (1, 2]: a rational, the isolated root of an integer
    polynomial, or the root of the critical digit series.

    Enclosures are cached and only ever shrink; digit prefixes of the
    quasi-greedy expansion of 1 are cached as they are extended.
    """

    def __init__(self, kind, *, fraction=None, coeffs=None, bracket=None,
                 digit_at=None, known_delta=None, name=None, validate=True):
        self.kind = kind
        self.name = name
        self.known_delta = known_delta
        self._digit_cache = ""
        if kind == "rational":
            self.fraction = Fraction(fraction)
            if not (1 < self.fraction <= 2):
                raise InvalidBase("rational base %s outside (1, 2]" % self.fraction)
            self._enc = Interval.point(self.fraction)
        elif kind == "poly":
            self.coeffs = poly_trim(coeffs)
            if poly_degree(self.coeffs) < 1:
                raise InvalidBase("constant polynomial")
            lo, hi = Fraction(bracket[0]), Fraction(bracket[1])
            if not (1 <= lo < hi <= Fraction(21, 10)):
                raise InvalidBase("isolating interval must sit inside (1, 2]")
            if validate:
                if poly_sign_at(self.coeffs, lo) == 0 or poly_sign_at(self.coeffs, hi) == 0:
                    raise InvalidBase("isolating endpoints must not be roots")
                if poly_sign_at(self.coeffs, lo) * poly_sign_at(self.coeffs, hi) >= 0:
                    raise InvalidBase("no sign change over the isolating interval")
                if count_roots(self.coeffs, lo, hi) != 1:
                    raise InvalidBase("isolating interval holds more than one root")
            self._enc = Interval(lo, hi)
        elif kind == "series":
            if digit_at is None:
                raise InvalidBase("series base needs a digit stream")
            self.digit_at = digit_at
            lo, hi = Fraction(bracket[0]), Fraction(bracket[1])
            self._enc = Interval(lo, hi)
        else:
            raise InvalidBase("unknown base kind %r" % kind)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rational(value, name=None) -> "RealBase":
        return RealBase("rational", fraction=value, name=name)

    @staticmethod
    def from_decimal(text: str, name=None) -> "RealBase":
        return RealBase("rational", fraction=Fraction(text), name=name)

    @staticmethod
    def from_poly(coeffs, lo, hi, name=None, known_delta=None,
                  validate=True) -> "RealBase":
        return RealBase("poly", coeffs=coeffs, bracket=(lo, hi), name=name,
                        known_delta=known_delta, validate=validate)

    # -- enclosure ----------------------------------------------------------

    def enclosure(self, width=DEFAULT_TOL) -> Interval:
        """An interval of at most the requested width containing the base."""
        target = _width_to_target(width)
        if self._enc.width <= target:
            return self._enc
        if self.kind == "rational":
            return self._enc
        if self.kind == "series":
            self._enc = _bisect_series(self.digit_at, self._enc.lo,
                                       self._enc.hi, target)
        elif self.known_delta is not None:
            stream = self.known_delta
            self._enc = _bisect_series(lambda i: stream.at(i - 1) == "1",
                                       self._enc.lo, self._enc.hi, target)
        else:
            self._enc = _bisect_poly_sign(self.coeffs, self._enc.lo,
                                          self._enc.hi, target)
        return self._enc

    # -- quasi-greedy digits -------------------------------------------------

    def delta_prefix(self, n: int) -> str:
        """First n digits of the quasi-greedy expansion of 1 in this base.

        Uses the attached expansion when the base was built from one (the
        inverse map guarantees the round trip); otherwise runs the digit
        iteration.
        """
        if self.known_delta is not None:
            return self.known_delta.prefix(n)
        if self.kind == "series":
            if len(self._digit_cache) < n:
                self._digit_cache = "".join(
                    "1" if self.digit_at(i) else "0" for i in range(1, n + 1)
                )
            return self._digit_cache[:n]
        if len(self._digit_cache) < n:
            self._digit_cache = quasi_greedy(self, n)
        return self._digit_cache[:n]

    def delta_reflected_prefix(self, n: int) -> str:
        return words.reflection(self.delta_prefix(n))

    # -- misc ----------------------------------------------------------------

    def describe(self) -> str:
        if self.name:
            return self.name
        if self.kind == "rational":
            return str(self.fraction)
        if self.kind == "poly":
            e = self._enc
            return "root of %s in [%s, %s]" % (
                format_poly(self.coeffs), _dec(e.lo, 6), _dec(e.hi, 6))
        return "critical series base"

    def __repr__(self):
        return "RealBase(%s)" % self.describe()

    def __reduce__(self):
        # pickling support for parallel enumeration workers
        return (_rebuild_base, (self.spec_string(),))

    def spec_string(self) -> str:
        """A parseable description of this base."""
        if self.name:
            return self.name
        if self.kind == "rational":
            return str(self.fraction)
        if self.kind == "poly":
            return "poly:%s@[%s,%s]" % (
                format_poly(self.coeffs).replace(" ", ""),
                self._enc.lo, self._enc.hi)
        return "beta_c"


def _rebuild_base(spec: str) -> RealBase:
    return parse_base(spec)


def _dec(value: Fraction, places: int) -> str:
    """Fixed-point decimal string of a rational, correctly rounded down."""
    sign = "-" if value < 0 else ""
    value = abs(value)
    scaled = value * 10**places
    whole = scaled.numerator // scaled.denominator
    digits = str(whole).rjust(places + 1, "0")
    return sign + digits[:-places] + "." + digits[-places:]


# ---------------------------------------------------------------------------
# quasi-greedy expansion


def _qg_rational(beta: Fraction, n: int) -> str:
    out = []
    x = Fraction(1)
    for _ in range(n):
        bx = beta * x
        if bx > 1:
            out.append("1")
            x = bx - 1
        else:
            out.append("0")
            x = bx
    return "".join(out)


class _AlgebraicDigits:
    """Digit iteration for a polynomial-root base with exact comparisons.

    The remainder x_n is carried as a polynomial in the root, reduced mod the
    defining polynomial; comparing beta*x with 1 reduces to the sign of an
    algebraic number, decided by a gcd-based zero test plus interval
    refinement of the isolating bracket.
    """

    def __init__(self, base: RealBase):
        self.base = base
        self.p = [Fraction(c) for c in base.coeffs]
        self.deg = len(self.p) - 1
        self.lead = self.p[-1]
        self.x = [Fraction(0)] * self.deg
        self.x[0] = Fraction(1)

    def _mul_by_root(self, vec):
        shifted = [Fraction(0)] + vec[:]
        top = shifted.pop()  # coefficient of x^deg
        if top:
            factor = top / self.lead
            shifted = [c - factor * pc for c, pc in zip(shifted, self.p[:-1])]
        return shifted

    def _sign_at_root(self, vec) -> int:
        if not poly_trim(vec):
            return 0
        g = poly_gcd(vec, self.p)
        if poly_degree(g) >= 1:
            enc = self.base._enc
            glo = poly_eval_fraction(g, enc.lo)
            ghi = poly_eval_fraction(g, enc.hi)
            if glo == 0 or ghi == 0:
                raise PrecisionExhausted("root at isolating endpoint")
            if (glo > 0) != (ghi > 0):
                return 0
        for _ in range(BITS_CAP):
            enc = self.base._enc
            val = poly_eval_interval(vec, enc)
            s = val.sign()
            if s is not None:
                return s
            self.base.enclosure(enc.width / 2)
        raise PrecisionExhausted("algebraic sign undecided")

    def digits(self, n: int) -> str:
        out = []
        for _ in range(n):
            bx = self._mul_by_root(self.x)
            r = bx[:]
            r[0] -= 1
            if self._sign_at_root(r) > 0:
                out.append("1")
                self.x = r
            else:
                out.append("0")
                self.x = bx
        return "".join(out)


def _qg_interval(base: RealBase, n: int, bits_cap: int = BITS_CAP) -> str:
    """Digit iteration with interval arithmetic and adaptive refinement."""
    bits = BITS_START
    while bits <= bits_cap:
        enc = base.enclosure(Fraction(1, 2**bits))
        b = Interval(enc.lo, enc.hi)
        x = Interval.point(1)
        out = []
        ok = True
        for _ in range(n):
            bx = b * x
            if bx.lo > 1:
                out.append("1")
                x = bx - Interval.point(1)
            elif bx.hi <= 1:
                out.append("0")
                x = bx
            else:
                ok = False
                break
        if ok:
            return "".join(out)
        bits *= 2
    raise PrecisionExhausted("digit undecided at %d bits" % bits_cap)


def quasi_greedy(beta: RealBase, n: int) -> str:
    """First n digits of the quasi-greedy expansion of 1: x starts at 1 and
    each digit is 1 exactly when beta*x exceeds 1, with x mapped to beta*x
    minus the digit.  Exact for rationals and polynomial roots; the series
    base runs the same iteration with adaptive interval refinement.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if beta.kind == "rational":
        return _qg_rational(beta.fraction, n)
    if beta.kind == "poly":
        return _AlgebraicDigits(beta).digits(n)
    return _qg_interval(beta, n)


# ---------------------------------------------------------------------------
# Parry test and the inverse map


@dataclass(frozen=True)
class ParryResult:
    ok: bool
    position: Optional[int] = None  # 1-based start of the dominating tail

    def __bool__(self):
        return self.ok


def parry_check(a) -> ParryResult:
    """Shift domination: every tail must be lexicographically <= the word.

    Finite words use witness semantics (a tail strictly greater within the
    overlap is a violation); eventually periodic input is decided exactly.
    """
    if isinstance(a, EventuallyPeriodic):
        p, q = len(a.pre), len(a.per)
        window = p + 2 * q
        whole = a.prefix(window)
        for s in range(1, p + q + 1):
            tail = a.shift(s).prefix(window)
            if tail > whole:
                return ParryResult(False, s + 1)
        return ParryResult(True)
    word = str(a)
    for s in range(1, len(word)):
        tail = word[s:]
        if tail > word[: len(tail)]:
            return ParryResult(False, s + 1)
    return ParryResult(True)


def _expansion_poly(a: EventuallyPeriodic):
    """Clear denominators of sum(a_i x^-i) = 1 into an integer polynomial.

    With preperiod p_1..p_k and period q_1..q_m the equation becomes
    x^(k+m) - x^k - sum p_i x^(k-i) (x^m - 1) - sum q_j x^(m-j) = 0.
    """
    k, m = len(a.pre), len(a.per)
    coeffs = {}

    def bump(power, amount):
        coeffs[power] = coeffs.get(power, 0) + amount

    bump(k + m, 1)
    bump(k, -1)
    for i, ch in enumerate(a.pre, start=1):
        if ch == "1":
            bump(k - i + m, -1)
            bump(k - i, 1)
    for j, ch in enumerate(a.per, start=1):
        if ch == "1":
            bump(m - j, -1)
    top = max(coeffs)
    return [coeffs.get(i, 0) for i in range(top + 1)]


def delta_inverse(a: EventuallyPeriodic, tol=DEFAULT_TOL, name=None) -> RealBase:
    """The unique base whose quasi-greedy expansion of 1 equals the given
    eventually periodic sequence, represented as an integer-polynomial root
    with an enclosure of at most the requested width."""
    if a.per == "0":
        raise EndsInZeros("expansion ends in an infinite zero tail")
    check = parry_check(a)
    if not check.ok:
        raise NotParryAdmissible(
            "tail starting at position %d dominates the sequence" % check.position)
    if a.pre == "" and a.per == "1":
        base = RealBase.from_rational(2, name=name)
        base.known_delta = a
        return base
    target = _width_to_target(tol)
    digit_at = lambda i: a.at(i - 1) == "1"
    lo = _find_positive_left_end(digit_at)
    enc = _bisect_series(digit_at, lo, Fraction(2), target)
    coeffs = _expansion_poly(a)
    base = RealBase.from_poly(coeffs, enc.lo, enc.hi, name=name,
                              known_delta=a, validate=False)
    return base


def _find_positive_left_end(digit_at) -> Fraction:
    eps = Fraction(1, 4)
    for _ in range(BITS_CAP):
        x = 1 + eps
        prec = 96
        s = None
        while s is None and prec <= 4096:
            s = _series_sign_fixed(digit_at, x.numerator, x.denominator, prec)
            prec *= 2
        if s == 1:
            return x
        eps /= 2
    raise PrecisionExhausted("no positive left endpoint found above 1")


# ---------------------------------------------------------------------------
# the named ladder


def _lambda_digit(i: int) -> bool:
    k, r = divmod(i - 1, 3)
    if r == 0:
        return bin(2 * k + 1).count("1") & 1 == 1
    if r == 1:
        return False
    return bin(2 * k + 2).count("1") & 1 == 1


@lru_cache(maxsize=None)
def _critical_singleton() -> RealBase:
    return RealBase("series", digit_at=_lambda_digit,
                    bracket=(Fraction(3, 2), Fraction(8, 5)), name="beta_c")


def critical_base(tol=DEFAULT_TOL) -> RealBase:
    """The base whose quasi-greedy expansion of 1 is the interleaved
    Thue-Morse limit word; enclosed by rigorous partial-sum bisection."""
    base = _critical_singleton()
    base.enclosure(tol)
    return base


@lru_cache(maxsize=None)
def _ladder_base(n: int) -> RealBase:
    a = EventuallyPeriodic("", words.tm_word(n))
    return delta_inverse(a, DEFAULT_TOL, name="beta_n:%d" % n)


def beta_ladder(n: int, tol=DEFAULT_TOL) -> RealBase:
    """Base with expansion (t_n)^inf; strictly increasing toward the
    critical base."""
    if n < 1:
        raise ValueError("n must be >= 1")
    base = _ladder_base(n)
    base.enclosure(tol)
    return base


@lru_cache(maxsize=None)
def _hat_base(n: int) -> RealBase:
    t = words.tm_word(n)
    a = EventuallyPeriodic(words.plus(t), words.theta(t))
    return delta_inverse(a, DEFAULT_TOL, name="beta_hat:%d" % n)


def beta_hat(n: int, tol=DEFAULT_TOL) -> RealBase:
    """Base with expansion plus(t_n) theta(t_n)^inf; strictly decreasing
    toward the critical base from above."""
    if n < 1:
        raise ValueError("n must be >= 1")
    base = _hat_base(n)
    base.enclosure(tol)
    return base


@lru_cache(maxsize=None)
def _multinacci_base(m: int) -> RealBase:
    a = EventuallyPeriodic("", "1" * m + "0")
    return delta_inverse(a, DEFAULT_TOL, name="multinacci:%d" % m)


def multinacci(m: int, tol=DEFAULT_TOL) -> RealBase:
    """Base with expansion (1^m 0)^inf; m=1 is the golden ratio."""
    if m < 1:
        raise ValueError("m must be >= 1")
    base = _multinacci_base(m)
    base.enclosure(tol)
    return base


@lru_cache(maxsize=None)
def _beta_star() -> RealBase:
    return RealBase.from_poly([-2, 2, -2, 1], Fraction(3, 2), Fraction(8, 5),
                              name="beta_star")


_NAMED_RE = re.compile(r"^(beta_n|beta_hat|multinacci):(\d+)$")
_POLY_RE = re.compile(r"^poly:(.+)@\[([^,\]]+),([^,\]]+)\]$")


def parse_base(text: str, tol=DEFAULT_TOL) -> RealBase:
    """Base grammar: decimal 1.6, rational 8/5, poly:x^3-x^2-1@[1.4,1.5],
    and the named constants beta_G, beta_star, beta_c, beta_n:K, beta_hat:K,
    multinacci:M."""
    text = text.strip()
    if text == "beta_G":
        base = beta_ladder(1, tol)
        return base
    if text == "beta_c":
        return critical_base(tol)
    if text == "beta_star":
        base = _beta_star()
        base.enclosure(tol)
        return base
    m = _NAMED_RE.match(text)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind == "beta_n":
            return beta_ladder(k, tol)
        if kind == "beta_hat":
            return beta_hat(k, tol)
        return multinacci(k, tol)
    m = _POLY_RE.match(text)
    if m:
        coeffs = parse_poly(m.group(1))
        return RealBase.from_poly(coeffs, Fraction(m.group(2)), Fraction(m.group(3)))
    if "/" in text:
        return RealBase.from_rational(Fraction(text))
    if re.match(r"^\d+\.?\d*$", text):
        return RealBase.from_decimal(text)
    raise InvalidBase("cannot parse base %r" % text)


def separating_enclosures(a: RealBase, b: RealBase, max_bits: int = BITS_CAP):
    """Refine two bases until their enclosures are disjoint, certifying the
    strict order between them; returns the pair (smaller first)."""
    bits = 16
    while bits <= max_bits:
        w = Fraction(1, 2**bits)
        ea, eb = a.enclosure(w), b.enclosure(w)
        if ea.hi < eb.lo or eb.hi < ea.lo:
            return (ea, eb)
        bits *= 2
    raise PrecisionExhausted("bases not separated at %d bits" % max_bits)
