"""Combinatorics on words: Thue-Morse block machinery over the four-block
alphabet {000, 001, 100, 101} and the three families of gasket words over
{A, B, C} together with their letter maps and coordinate projections.

Binary words are plain strings over "01"; gasket words are plain strings
over "ABC".  Both are immutable value objects with structural equality for
free.  Eventually periodic sequences get a small frozen dataclass with a
``pre(per)`` text form, e.g. ``B(ACB)`` or ``(10)``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

GASKET_ALPHABET = "ABC"

# Coordinate projections of the three digits A=(0,0), B=(1,0), C=(0,1).
P1 = {"A": "0", "B": "1", "C": "0"}
P2 = {"A": "0", "B": "0", "C": "1"}
PSUM = {"A": "0", "B": "1", "C": "1"}

_PROJ = {1: P1, 2: P2, "sum": PSUM}

THETA_TABLE = {"000": "101", "001": "100", "100": "001", "101": "000"}

# Letter involutions, each fixing exactly one letter.
_PHI_TRANS = {
    "A": str.maketrans("ABC", "ACB"),
    "B": str.maketrans("ABC", "CBA"),
    "C": str.maketrans("ABC", "BAC"),
}

# Last-letter replacement used by the type-word recursions.
_TYPE_REPLACEMENT = {"A": "B", "B": "C", "C": "A"}
_TYPE_SEED = {"A": "BAC", "B": "CBA", "C": "ACB"}

_EAGER_LIMIT = 30  # 3 * 2**29 symbols; anything longer must go through prefixes


class NonOmegaBlock(ValueError):
    """A binary word fed to the block map does not split into the four blocks."""


class VariantUndefined(ValueError):
    """The last-letter variant is undefined for the length-one seed words."""


def reflection(word: str) -> str:
    """Bitwise complement of a 0/1 word."""
    return word.translate(str.maketrans("01", "10"))


def plus(word: str) -> str:
    """Flip the final 0 of a binary word to 1."""
    if not word or word[-1] != "0":
        raise ValueError("plus() needs a word ending in 0, got %r" % word)
    return word[:-1] + "1"


def theta(word: str) -> str:
    """Blockwise image under 000<->101, 001<->100.

    The input must decompose into consecutive triples from the block
    alphabet; anything else (a triple containing 11, or 010/011/110/111)
    raises NonOmegaBlock.
    """
    if len(word) % 3 != 0:
        raise NonOmegaBlock("length %d is not a multiple of 3" % len(word))
    out = []
    for i in range(0, len(word), 3):
        block = word[i : i + 3]
        image = THETA_TABLE.get(block)
        if image is None:
            raise NonOmegaBlock("triple %r at offset %d" % (block, i))
        out.append(image)
    return "".join(out)


@lru_cache(maxsize=None)
def tm_word(n: int) -> str:
    """The n-th block Thue-Morse word: 100, then w -> plus(w) theta(plus(w))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > _EAGER_LIMIT:
        raise ValueError("refusing to materialize tm_word(%d); use lambda_prefix" % n)
    if n == 1:
        return "100"
    prev_plus = plus(tm_word(n - 1))
    return prev_plus + theta(prev_plus)


def classical_tm(length: int, start_index: int = 0) -> str:
    """Prefix of the classical Thue-Morse sequence (parity of binary weight).

    start_index 0 gives 0110...; start_index 1 drops the leading 0 and
    gives 11010011..., the shifted convention.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    if start_index not in (0, 1):
        raise ValueError("start_index must be 0 or 1")
    return "".join(
        str(bin(i).count("1") & 1) for i in range(start_index, start_index + length)
    )


def _tau(i: int) -> int:
    return bin(i).count("1") & 1


def lambda_prefix(length: int) -> str:
    """First digits of the componentwise limit of the block Thue-Morse words.

    Built in O(length) from the classical sequence: positions 3k+1, 3k+2,
    3k+3 carry tau_{2k+1}, 0, tau_{2k+2}.  Every prefix of length 3*2^(n-1)
    equals plus(tm_word(n)).
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    out = []
    for i in range(length):
        k, r = divmod(i, 3)
        if r == 0:
            out.append(str(_tau(2 * k + 1)))
        elif r == 1:
            out.append("0")
        else:
            out.append(str(_tau(2 * k + 2)))
    return "".join(out)


def gamma_prefix(length: int) -> str:
    """First digits of the componentwise limit of theta(tm_word(n)).

    Same interleaving as lambda_prefix with the complemented classical
    sequence; the middle track stays 0.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    out = []
    for i in range(length):
        k, r = divmod(i, 3)
        if r == 0:
            out.append(str(1 - _tau(2 * k + 1)))
        elif r == 1:
            out.append("0")
        else:
            out.append(str(1 - _tau(2 * k + 2)))
    return "".join(out)


def phi(kind: str, word: str) -> str:
    """Letterwise involution of a gasket word; phi(kind) fixes exactly `kind`."""
    if kind not in _PHI_TRANS:
        raise ValueError("kind must be one of A, B, C")
    return word.translate(_PHI_TRANS[kind])


@lru_cache(maxsize=None)
def type_word(kind: str, n: int, replace_last: bool = False) -> str:
    """The n-th type-A/B/C gasket Thue-Morse word, optionally with its last
    letter replaced (B for type A, C for type B, A for type C).

    Seeds: type A starts at BAC, type B at CBA, type C at ACB; each level is
    w' phi(kind, w') where w' is the previous word with the last letter
    replaced.  Level 0 is the single fixed letter and has no variant.
    """
    if kind not in _TYPE_SEED:
        raise ValueError("kind must be one of A, B, C")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > _EAGER_LIMIT:
        raise ValueError("refusing to materialize type_word at level %d" % n)
    if n == 0:
        if replace_last:
            raise VariantUndefined("level-0 word has no last-letter variant")
        return kind
    word = _TYPE_SEED[kind] if n == 1 else None
    if word is None:
        prev = type_word(kind, n - 1, replace_last=True)
        word = prev + phi(kind, prev)
    if replace_last:
        return word[:-1] + _TYPE_REPLACEMENT[kind]
    return word


def project(word: str, axis) -> str:
    """Coordinatewise bit extraction of a gasket word; axis is 1, 2 or "sum"."""
    table = _PROJ.get(axis)
    if table is None:
        raise ValueError("axis must be 1, 2 or 'sum'")
    return "".join(table[c] for c in word)


class Compare(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"            # exact equality, certified by period alignment
    EQUAL_SO_FAR = "equal-so-far"  # no difference within the budget


_EP_RE = re.compile(r"^([0-9A-Za-z]*)\(([0-9A-Za-z]+)\)$")


@dataclass(frozen=True)
class EventuallyPeriodic:
    """An eventually periodic sequence pre (per)^infinity in canonical form
    (minimal period, then minimal preperiod)."""

    pre: str
    per: str

    def __post_init__(self):
        if not self.per:
            raise ValueError("period must be nonempty")
        pre, per = _canonicalize(self.pre, self.per)
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    @staticmethod
    def parse(text: str) -> "EventuallyPeriodic":
        m = _EP_RE.match(text.strip())
        if not m:
            raise ValueError("expected pre(per) form, got %r" % text)
        return EventuallyPeriodic(m.group(1), m.group(2))

    def __str__(self) -> str:
        return "%s(%s)" % (self.pre, self.per)

    def at(self, i: int) -> str:
        """Symbol at 0-based index i."""
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, length: int) -> str:
        if length <= len(self.pre):
            return self.pre[:length]
        need = length - len(self.pre)
        reps = -(-need // len(self.per))
        return self.pre + (self.per * reps)[:need]

    def shift(self, k: int) -> "EventuallyPeriodic":
        """Drop the first k symbols."""
        if k <= len(self.pre):
            return EventuallyPeriodic(self.pre[k:], self.per)
        k -= len(self.pre)
        r = k % len(self.per)
        return EventuallyPeriodic("", self.per[r:] + self.per[:r])

    def translate(self, table) -> "EventuallyPeriodic":
        return EventuallyPeriodic(self.pre.translate(table), self.per.translate(table))

    def map_symbols(self, table: dict) -> "EventuallyPeriodic":
        return EventuallyPeriodic(
            "".join(table[c] for c in self.pre),
            "".join(table[c] for c in self.per),
        )

    def alphabet(self) -> set:
        return set(self.pre) | set(self.per)

    def is_constant(self, symbol: str) -> bool:
        return self.pre == "" and self.per == symbol


def _canonicalize(pre: str, per: str):
    # minimal period: smallest divisor block that tiles per
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and per == per[:d] * (n // d):
            per = per[:d]
            break
    # minimal preperiod: absorb trailing symbols of pre into the cycle
    while pre and pre[-1] == per[-1]:
        per = per[-1] + per[:-1]
        pre = pre[:-1]
    return pre, per


def _symbols_equal_bound(x: EventuallyPeriodic, y: EventuallyPeriodic) -> int:
    """Agreement up to this many symbols certifies x == y."""
    p = max(len(x.pre), len(y.pre))
    q = len(x.per) * len(y.per) // gcd(len(x.per), len(y.per))
    return p + q


def lex_compare(x, y, budget: int = 256) -> Compare:
    """First-difference comparison of finite or eventually periodic words.

    Finite words are compared over min(available, budget) symbols and report
    EQUAL_SO_FAR when no difference shows up.  Two eventually periodic
    sequences are compared exactly: true equality is certified by period
    alignment regardless of the budget, and a first difference beyond the
    budget still reports EQUAL_SO_FAR.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    xp = isinstance(x, EventuallyPeriodic)
    yp = isinstance(y, EventuallyPeriodic)
    if xp and yp:
        bound = _symbols_equal_bound(x, y)
        n = min(bound, budget)
        a, b = x.prefix(n), y.prefix(n)
        if a < b:
            return Compare.LESS
        if a > b:
            return Compare.GREATER
        if bound <= budget:
            return Compare.EQUAL
        a, b = x.prefix(bound), y.prefix(bound)
        return Compare.EQUAL if a == b else Compare.EQUAL_SO_FAR
    xs = x.prefix(budget) if xp else x[:budget]
    ys = y.prefix(budget) if yp else y[:budget]
    n = min(len(xs), len(ys))
    a, b = xs[:n], ys[:n]
    if a < b:
        return Compare.LESS
    if a > b:
        return Compare.GREATER
    return Compare.EQUAL_SO_FAR
