"""Membership tests for the unique-coding language of the overlapping gasket.

A sequence over {A, B, C} codes a point whose shifted orbits all avoid the
overlap region exactly when three families of lexicographic conditions hold:
after every letter whose first coordinate is 0, the first-coordinate tail
must stay strictly below the quasi-greedy expansion of 1; symmetrically for
the second coordinate; and after every letter with coordinate sum 1, the
sum tail must stay strictly above the reflected expansion.

Finite words use violation-witness semantics: a tail that agrees with the
reference prefix as far as it goes is inconclusive, never a failure, which
makes the admissible language prefix-closed and lets the enumerators prune.
Conditions are indexed from the first letter onward; the zeroth tail is
covered by the later ones.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import bases, words
from .words import P1, P2, PSUM, Compare, EventuallyPeriodic

DEFAULT_BUDGET = 256


class PreconditionFailed(ValueError):
    """The base does not satisfy the hypothesis of the requested check."""


class SizeLimit(RuntimeError):
    """Enumeration exceeded the configured node cap."""


class Status(enum.Enum):
    ADMISSIBLE = "admissible"
    VIOLATION = "violation"
    UNDECIDED = "undecided"


class Condition(enum.Enum):
    COORD1 = "coord1"
    COORD2 = "coord2"
    SUM_REFLECTED = "sumReflected"


@dataclass(frozen=True)
class Verdict:
    status: Status
    position: Optional[int] = None      # 1-based index n of the triggering letter
    condition: Optional[Condition] = None
    offset: Optional[int] = None        # 0-based index into the offending tail

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "position": self.position,
            "condition": self.condition.value if self.condition else None,
            "offset": self.offset,
        }


ADMISSIBLE = Verdict(Status.ADMISSIBLE)

# per-letter projections (coord1, coord2, sum) and which condition families a
# letter triggers for the tail that follows it
_PROJ3 = {c: (P1[c], P2[c], PSUM[c]) for c in "ABC"}
_TRIGGERS = {c: tuple(fam for fam, fires in
                      ((0, P1[c] == "0"), (1, P2[c] == "0"), (2, PSUM[c] == "1"))
                      if fires)
             for c in "ABC"}
_FAMS = (Condition.COORD1, Condition.COORD2, Condition.SUM_REFLECTED)


class PrefixChecker:
    """Incremental checker over a fixed reference-expansion prefix.

    push() either advances the word by one letter and returns None, or
    leaves the state untouched and returns a (position, family, offset)
    violation triple.  pop() undoes the last successful push, so the
    enumerators can walk the word tree.  A pending comparison is packed as
    n*4+family; its tail offset is the current depth minus n minus one.
    """

    def __init__(self, delta_prefix: str):
        self.delta = delta_prefix
        self.refl = words.reflection(delta_prefix)
        self.letters: List[str] = []
        self._pending: List[List[int]] = [[]]

    def depth(self) -> int:
        return len(self.letters)

    def push(self, letter: str) -> Optional[Tuple[int, int, int]]:
        letters = self.letters
        base = len(letters)  # tail offset of the new symbol is base - n
        active = self._pending[-1]
        if letters:
            start = (base - 1) * 4
            extra = [start + fam for fam in _TRIGGERS[letters[-1]]]
            if extra:
                active = active + extra
        proj = _PROJ3[letter]
        delta = self.delta
        refl = self.refl
        survivors = []
        worst = None
        for key in active:
            n, fam = divmod(key, 4)
            symbol = proj[fam]
            target = refl[base - n - 1] if fam == 2 else delta[base - n - 1]
            if symbol == target:
                survivors.append(key)
            elif (symbol > target) == (fam == 2):
                continue  # settled on the allowed side
            elif worst is None or key < worst:
                worst = key
        if worst is not None:
            n, fam = divmod(worst, 4)
            return (n + 1, fam, base - n - 1)
        letters.append(letter)
        self._pending.append(survivors)
        return None

    def pop(self) -> None:
        self.letters.pop()
        self._pending.pop()


def _delta_for(beta: bases.RealBase, budget: int) -> str:
    return beta.delta_prefix(budget)


def is_admissible_prefix(word: str, beta: bases.RealBase,
                         delta_budget: int = DEFAULT_BUDGET) -> Verdict:
    """Violation-witness check of a finite word; admissible means no witness."""
    if not word:
        raise ValueError("word must be nonempty")
    if any(c not in "ABC" for c in word):
        raise ValueError("word must be over ABC, got %r" % word)
    if delta_budget < len(word):
        raise ValueError("delta_budget must cover the word length")
    checker = PrefixChecker(_delta_for(beta, delta_budget))
    for ch in word:
        hit = checker.push(ch)
        if hit is not None:
            n, fam, off = hit
            return Verdict(Status.VIOLATION, position=n,
                           condition=_FAMS[fam], offset=off)
    return ADMISSIBLE


def _compare_stream(tail: EventuallyPeriodic, ref, budget: int):
    """Compare an eventually periodic 0/1 tail against a reference expansion.

    ref is either an EventuallyPeriodic (exact comparison, the budget only
    caps reported offsets) or a plain prefix string.  Returns (Compare,
    offset of first difference or None).
    """
    if isinstance(ref, EventuallyPeriodic):
        bound = max(len(tail.pre), len(ref.pre)) + _lcm(len(tail.per), len(ref.per))
        a = tail.prefix(bound)
        b = ref.prefix(bound)
        if a == b:
            return Compare.EQUAL, None
    else:
        bound = min(budget, len(ref))
        a = tail.prefix(bound)
        b = ref[:bound]
        if a == b:
            return Compare.EQUAL_SO_FAR, None
    idx = next(i for i in range(len(a)) if a[i] != b[i])
    return (Compare.LESS if a[idx] < b[idx] else Compare.GREATER), idx


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def is_admissible_periodic(coding: EventuallyPeriodic, beta: bases.RealBase,
                           budget: int = DEFAULT_BUDGET) -> Verdict:
    """Exact check of an eventually periodic coding at every distinct shift.

    When the base carries an eventually periodic expansion the comparisons
    are decided exactly; otherwise a comparison that stays equal through the
    budget yields UNDECIDED rather than a guess.
    """
    if not coding.alphabet() <= set("ABC"):
        raise ValueError("coding must be over ABC")
    if beta.known_delta is not None:
        ref1 = beta.known_delta
        ref3 = ref1.map_symbols({"0": "1", "1": "0"})
    else:
        ref1 = beta.delta_prefix(budget)
        ref3 = words.reflection(ref1)
    p, q = len(coding.pre), len(coding.per)
    undecided = None
    for n in range(1, p + q + 1):
        digit = coding.at(n - 1)
        tail = coding.shift(n)
        checks = []
        if P1[digit] == "0":
            checks.append((Condition.COORD1, tail.map_symbols(P1), ref1, Compare.LESS))
        if P2[digit] == "0":
            checks.append((Condition.COORD2, tail.map_symbols(P2), ref1, Compare.LESS))
        if PSUM[digit] == "1":
            checks.append((Condition.SUM_REFLECTED, tail.map_symbols(PSUM), ref3,
                           Compare.GREATER))
        for fam, proj, ref, wanted in checks:
            cmp_result, offset = _compare_stream(proj, ref, budget)
            if cmp_result is wanted:
                continue
            if cmp_result is Compare.EQUAL_SO_FAR:
                if undecided is None:
                    undecided = Verdict(Status.UNDECIDED, position=n, condition=fam)
                continue
            # wrong strict direction, or exact equality where strictness fails
            return Verdict(Status.VIOLATION, position=n, condition=fam, offset=offset)
    if undecided is not None:
        return undecided
    return ADMISSIBLE


# ---------------------------------------------------------------------------
# enumeration


@dataclass
class GrowthRow:
    m: int
    admissible: int
    extendable: int


@dataclass
class Enumeration:
    beta: str
    m: int
    horizon: int
    entries: List[Tuple[str, bool]]  # (word, extendable), lexicographic

    @property
    def admissible_words(self) -> List[str]:
        return [w for w, _ in self.entries]

    @property
    def extendable_words(self) -> List[str]:
        return [w for w, ok in self.entries if ok]

    def row(self) -> GrowthRow:
        return GrowthRow(self.m, len(self.entries), len(self.extendable_words))

    def to_json(self) -> dict:
        return {
            "beta": self.beta,
            "m": self.m,
            "T": self.horizon,
            "counts": [{"m": self.m, "admissible": len(self.entries),
                        "extendable": len(self.extendable_words)}],
            "words": [{"word": w, "extendable": ok} for w, ok in self.entries],
        }


class _TreeScan:
    """Single depth-first pass over the admissible word tree under a root.

    Counts admissible nodes per depth, marks a node extendable when its
    subtree reaches `horizon` levels further down, and optionally collects
    the words at one depth.
    """

    def __init__(self, delta_prefix: str, max_depth: int, horizon: int,
                 collect_depth: Optional[int], cap: int):
        self.checker = PrefixChecker(delta_prefix)
        self.max_depth = max_depth
        self.horizon = horizon
        self.collect_depth = collect_depth
        self.cap = cap
        self.adm = [0] * (max_depth + 1)
        self.ext = [0] * (max_depth + 1)
        self.collected: List[Tuple[str, bool]] = []
        self.nodes = 0
        self.total_depth = max_depth + horizon

    def run(self, root: str = "") -> None:
        for ch in root:
            if self.checker.push(ch) is not None:
                raise ValueError("root word %r is not admissible" % root)
        self._visit()
        for _ in root:
            self.checker.pop()

    def _visit(self) -> int:
        """Explore below the current node; return deepest level reached."""
        depth = self.checker.depth()
        self.nodes += 1
        if self.nodes > self.cap:
            raise SizeLimit("enumeration exceeded %d nodes" % self.cap)
        deepest = depth
        if depth >= self.total_depth:
            return deepest
        for ch in "ABC":
            if self.checker.push(ch) is None:
                reached = self._visit()
                self.checker.pop()
                if reached > deepest:
                    deepest = reached
        d = depth
        if d <= self.max_depth:
            self.adm[d] += 1
            extendable = deepest >= d + self.horizon or deepest >= self.total_depth
            if extendable:
                self.ext[d] += 1
            if self.collect_depth is not None and d == self.collect_depth:
                self.collected.append(("".join(self.checker.letters), extendable))
        return deepest


def _subtree_task(args):
    delta_prefix, root, max_depth, horizon, collect_depth, cap = args
    scan = _TreeScan(delta_prefix, max_depth, horizon, collect_depth, cap)
    scan.run(root)
    return scan.adm, scan.ext, scan.collected, scan.nodes


def enumerate_words(beta: bases.RealBase, m: int, horizon: int,
                    budget: Optional[int] = None, cap: int = 2_000_000,
                    jobs: int = 1) -> Enumeration:
    """All violation-free words of length m in lexicographic order, each
    flagged extendable when some further `horizon` letters stay violation
    free."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if horizon < 0:
        raise ValueError("horizon must be >= 0")
    budget = budget or max(DEFAULT_BUDGET, m + horizon + 1)
    delta_prefix = _delta_for(beta, budget)
    if jobs > 1:
        entries = _enumerate_parallel(delta_prefix, m, horizon, cap, jobs)
    else:
        scan = _TreeScan(delta_prefix, m, horizon, collect_depth=m, cap=cap)
        scan.run()
        entries = sorted(scan.collected)
    return Enumeration(beta.spec_string(), m, horizon, entries)


def _enumerate_parallel(delta_prefix: str, m: int, horizon: int, cap: int,
                        jobs: int) -> List[Tuple[str, bool]]:
    split = min(2, m)
    probe = _TreeScan(delta_prefix, split, 0, collect_depth=split, cap=cap)
    probe.run()
    roots = sorted(w for w, _ in probe.collected)
    tasks = [(delta_prefix, r, m, horizon, m, cap) for r in roots]
    entries: List[Tuple[str, bool]] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for _, _, collected, _ in pool.map(_subtree_task, tasks):
            entries.extend(collected)
    return sorted(entries)


def growth_scan(beta: bases.RealBase, m_max: int, horizon: int,
                budget: Optional[int] = None,
                cap: int = 5_000_000) -> List[GrowthRow]:
    """Admissible and extendable word counts for every length up to m_max."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    budget = budget or max(DEFAULT_BUDGET, m_max + horizon + 1)
    scan = _TreeScan(_delta_for(beta, budget), m_max, horizon,
                     collect_depth=None, cap=cap)
    scan.run()
    return [GrowthRow(m, scan.adm[m], scan.ext[m]) for m in range(1, m_max + 1)]


# ---------------------------------------------------------------------------
# verification reports


@dataclass
class Report:
    name: str
    claim: str
    passed: bool
    lines: List[str] = field(default_factory=list)
    counterexamples: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "claim": self.claim,
            "passed": self.passed,
            "lines": self.lines,
            "counterexamples": self.counterexamples,
        }

    def render(self) -> str:
        head = "[%s] %s -- %s" % ("PASS" if self.passed else "FAIL",
                                  self.name, self.claim)
        return "\n".join([head] + ["  " + ln for ln in self.lines])


FORBIDDEN_BLOCKS = ("BAA", "BCC", "ABB", "ACC", "CBB", "CAA")


def verify_forbidden_blocks(beta: bases.RealBase,
                            budget: int = DEFAULT_BUDGET) -> Report:
    """Each repeated-pair block cdd must be rejected standalone and inside
    every admissible two-letter context; requires the expansion to begin 10."""
    delta = _delta_for(beta, budget)
    if not delta.startswith("10"):
        raise PreconditionFailed(
            "expansion of 1 begins %s, needs 10; base %s is too large"
            % (delta[:2], beta.describe()))
    report = Report("lemma33", "repeated-pair blocks cdd are forbidden", True)
    contexts = [a + b for a in "ABC" for b in "ABC"
                if is_admissible_prefix(a + b, beta, budget).status
                is not Status.VIOLATION]
    for block in FORBIDDEN_BLOCKS:
        standalone = is_admissible_prefix(block, beta, budget)
        bad = []
        if standalone.status is not Status.VIOLATION:
            bad.append("standalone")
        for ctx in contexts:
            v = is_admissible_prefix(ctx + block, beta, budget)
            if v.status is not Status.VIOLATION:
                bad.append("context %s" % ctx)
        if bad:
            report.passed = False
            report.counterexamples.extend("%s via %s" % (block, b) for b in bad)
            report.lines.append("%s: NOT rejected (%s)" % (block, ", ".join(bad)))
        else:
            report.lines.append("%s: rejected everywhere" % block)
    return report


LEMMA34_CASES = {
    "BAB": "CAC", "CAC": "BAB",
    "ABA": "CBC", "CBC": "ABA",
    "ACA": "BCB", "BCB": "ACA",
}


def _admissible_contexts(beta, max_len, first_of_trigger, trigger, budget,
                         cap=200_000):
    """All nonempty admissible words of length <= max_len whose last letter
    differs from the trigger's first letter and which admit the trigger."""
    out = []
    checker = PrefixChecker(_delta_for(beta, budget))

    def walk():
        depth = checker.depth()
        if depth >= 1 and checker.letters[-1] != first_of_trigger:
            ok = True
            for ch in trigger:
                if checker.push(ch) is not None:
                    ok = False
                    break
            pushed = checker.depth() - depth
            for _ in range(pushed):
                checker.pop()
            if ok:
                out.append("".join(checker.letters))
        if depth >= max_len:
            return
        for ch in "ABC":
            if checker.push(ch) is None:
                walk()
                checker.pop()

    walk()
    return sorted(out)


def _live_extensions(beta, stem: str, length: int, horizon: int, budget: int):
    """Violation-free continuations of the stem, of the given length, that
    survive `horizon` further letters."""
    checker = PrefixChecker(_delta_for(beta, budget))
    for ch in stem:
        if checker.push(ch) is not None:
            return []
    live = []

    def reaches(depth_left: int) -> bool:
        if depth_left == 0:
            return True
        for ch in "ABC":
            if checker.push(ch) is None:
                ok = reaches(depth_left - 1)
                checker.pop()
                if ok:
                    return True
        return False

    def walk(ext: str):
        if len(ext) == length:
            if reaches(horizon):
                live.append(ext)
            return
        for ch in "ABC":
            if checker.push(ch) is None:
                walk(ext + ch)
                checker.pop()

    walk("")
    return live


def verify_forced_continuation(trigger: str, allowed: Sequence[str],
                               beta: bases.RealBase, context_len: int = 4,
                               horizon: int = 12,
                               budget: Optional[int] = None,
                               name: str = "forced",
                               claim: str = "") -> Report:
    """After any admissible context ending in a different letter, the trigger
    block's surviving continuations of the stated length must all lie in the
    allowed set.  Survival is judged with an extendability horizon: the bare
    continuation length is not enough to expose the losing branches, whose
    pending comparisons resolve a few letters later.
    """
    allowed = sorted(set(allowed))
    length = len(allowed[0])
    if any(len(a) != length for a in allowed):
        raise ValueError("allowed continuations must share one length")
    budget = budget or max(DEFAULT_BUDGET,
                            context_len + len(trigger) + length + horizon + 1)
    report = Report(name, claim or
                    "%s forces a continuation in {%s}" % (trigger, ", ".join(allowed)),
                    True)
    contexts = _admissible_contexts(beta, context_len, trigger[0], trigger, budget)
    if not contexts:
        report.passed = False
        report.lines.append("no admissible context admits the trigger")
        return report
    seen_live = False
    for ctx in contexts:
        live = _live_extensions(beta, ctx + trigger, length, horizon, budget)
        stray = [e for e in live if e not in allowed]
        if live:
            seen_live = True
        if stray:
            report.passed = False
            report.counterexamples.extend(
                "%s|%s -> %s" % (ctx, trigger, e) for e in stray)
            report.lines.append("context %s: stray continuations %s"
                                % (ctx, ",".join(stray)))
    report.lines.append("%d contexts checked, allowed={%s}"
                        % (len(contexts), ",".join(allowed)))
    if not seen_live:
        report.lines.append("warning: no continuation survived the horizon")
    return report


def verify_lemma34(beta: bases.RealBase, context_len: int = 4,
                   horizon: int = 12, case: Optional[str] = None) -> Report:
    """The six three-letter alternation blocks each force their partner
    block; requires the expansion to begin 101000."""
    delta = _delta_for(beta, 8)
    if not delta.startswith("101000"):
        raise PreconditionFailed(
            "expansion of 1 begins %s, needs 101000" % delta[:6])
    cases = {case: LEMMA34_CASES[case]} if case else LEMMA34_CASES
    merged = Report("lemma34", "alternation blocks force their partner", True)
    for trig, nxt in cases.items():
        sub = verify_forced_continuation(
            trig, [nxt], beta, context_len, horizon,
            name="lemma34:%s" % trig,
            claim="%s after a differing letter continues with %s" % (trig, nxt))
        merged.lines.append("%s -> %s: %s" % (trig, nxt,
                                              "ok" if sub.passed else "FAIL"))
        merged.counterexamples.extend(sub.counterexamples)
        merged.passed = merged.passed and sub.passed
    return merged


def verify_prop44(k: int, beta: bases.RealBase, context_len: int = 4,
                  horizon: Optional[int] = None) -> Report:
    """Type-A forcing at level k: the replaced-last-letter word forces one of
    its two mirror continuations, and symmetrically for the mirror."""
    if k < 1:
        raise ValueError("k must be >= 1")
    u = words.type_word("A", k)
    ub = words.type_word("A", k, replace_last=True)
    horizon = horizon if horizon is not None else 3 * 2 ** (k - 1)
    merged = Report("prop44", "type-A blocks force their mirror pair (k=%d)" % k, True)
    for trig, allowed in ((ub, [words.phi("A", ub), words.phi("A", u)]),
                          (words.phi("A", ub), [ub, u])):
        sub = verify_forced_continuation(
            trig, allowed, beta, context_len, horizon,
            name="prop44:k%d" % k,
            claim="%s forces one of {%s}" % (trig, ", ".join(sorted(allowed))))
        merged.lines.append("%s: %s" % (trig, "ok" if sub.passed else "FAIL"))
        merged.counterexamples.extend(sub.counterexamples)
        merged.passed = merged.passed and sub.passed
    return merged


def verify_prop48(k: int, beta: bases.RealBase, context_len: int = 4,
                  horizon: Optional[int] = None,
                  family: Optional[str] = None) -> Report:
    """Type-B and type-C analogues of the type-A forcing at level k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    horizon = horizon if horizon is not None else 3 * 2 ** (k - 1)
    fams = []
    if family in (None, "v", "B"):
        v = words.type_word("B", k)
        vc = words.type_word("B", k, replace_last=True)
        fams.append(("v", vc, [words.phi("B", vc), words.phi("B", v)]))
        fams.append(("v", words.phi("B", vc), [vc, v]))
    if family in (None, "w", "C"):
        w = words.type_word("C", k)
        wa = words.type_word("C", k, replace_last=True)
        fams.append(("w", wa, [words.phi("C", wa), words.phi("C", w)]))
        fams.append(("w", words.phi("C", wa), [wa, w]))
    merged = Report("prop48",
                    "type-B/type-C blocks force their mirror pair (k=%d)" % k, True)
    for fam, trig, allowed in fams:
        sub = verify_forced_continuation(
            trig, allowed, beta, context_len, horizon,
            name="prop48:%s:k%d" % (fam, k),
            claim="%s forces one of {%s}" % (trig, ", ".join(sorted(allowed))))
        merged.lines.append("%s-family %s: %s" % (fam, trig,
                                                  "ok" if sub.passed else "FAIL"))
        merged.counterexamples.extend(sub.counterexamples)
        merged.passed = merged.passed and sub.passed
    return merged


def verify_triple_distinct(beta: bases.RealBase, m: int,
                           horizon: Optional[int] = None) -> Report:
    """No extendable word may contain three pairwise distinct consecutive
    letters.  Guaranteed only up to the smallest branching base; larger bases
    run as negative controls and simply report the failure."""
    horizon = horizon if horizon is not None else m
    enum = enumerate_words(beta, m, horizon)
    in_range = _at_most_beta_g(beta)
    report = Report("lemma31",
                    "no three pairwise-distinct consecutive letters "
                    "(guaranteed for bases up to the branch point)", True)
    report.lines.append("guaranteed range: %s" % ("yes" if in_range else
                                                  "no (negative control)"))
    for word in enum.extendable_words:
        for i in range(len(word) - 2):
            if len({word[i], word[i + 1], word[i + 2]}) == 3:
                report.passed = False
                report.counterexamples.append("%s at %d" % (word, i + 1))
                break
    report.lines.append("%d extendable words of length %d checked"
                        % (len(enum.extendable_words), m))
    return report


def _at_most_beta_g(beta: bases.RealBase) -> bool:
    bg = bases.beta_ladder(1)
    w = Fraction(1, 2**40)
    return beta.enclosure(w).lo <= bg.enclosure(w).hi


def plateau_probes(n: int):
    """Two rationals strictly inside the n-th ladder gap plus the endpoint."""
    upper = bases.beta_ladder(n + 1)
    if n == 0:
        lo_val = Fraction(1)
    else:
        lower = bases.beta_ladder(n)
        e_lo, e_hi = bases.separating_enclosures(lower, upper)
        lo_val = e_lo.hi
    hi_val = upper.enclosure(Fraction(1, 10**12)).lo
    gap = hi_val - lo_val
    probes = []
    for numerator in (1, 2):
        raw = lo_val + gap * Fraction(numerator, 3)
        nice = Fraction(round(float(raw) * 10**9), 10**9)
        if not (lo_val < nice < hi_val):
            nice = raw
        probes.append(bases.RealBase.from_rational(nice))
    return probes[0], probes[1], upper


def verify_plateau(n: int, m: int = 10, horizon: int = 20) -> Report:
    """Extendable word sets must coincide at two interior rational probes of
    a ladder gap.  The right endpoint is reported alongside: at finite
    horizon its set is strictly larger, because level-(n+1) family words
    track the endpoint expansion exactly and never produce a finite witness,
    so only interior agreement is the pass condition."""
    if n < 0:
        raise ValueError("n must be >= 0")
    q1, q2, endpoint = plateau_probes(n)
    sets = []
    for base in (q1, q2, endpoint):
        sets.append(tuple(enumerate_words(base, m, horizon).extendable_words))
    report = Report("plateau",
                    "extendable sets constant inside ladder gap %d" % n, True)
    report.lines.append("probes: %s, %s, endpoint %s"
                        % (q1.describe(), q2.describe(), endpoint.describe()))
    report.lines.append("set sizes: %s" % [len(s) for s in sets])
    if sets[0] != sets[1]:
        report.passed = False
        diff = set(sets[0]) ^ set(sets[1])
        report.counterexamples.extend(sorted(diff)[:12])
    if not set(sets[0]) <= set(sets[2]):
        report.passed = False
        report.counterexamples.extend(
            sorted(set(sets[0]) - set(sets[2]))[:12])
        report.lines.append("interior set escapes the endpoint set")
    else:
        report.lines.append(
            "endpoint set adds %d boundary-tracking words"
            % (len(sets[2]) - len(sets[0])))
    return report
