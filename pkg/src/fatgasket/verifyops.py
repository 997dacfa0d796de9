"""Named verification checks behind the `verify` subcommand.

Each check states its claim in the report header and exits nonzero on any
counterexample, so the suite doubles as a regression harness for the
structural facts the rest of the package relies on.
"""

from __future__ import annotations

from . import admissibility, bases, words
from .admissibility import Report, Status
from .words import EventuallyPeriodic


def verify_l50(n_max: int = 10) -> Report:
    """Both comparison chains between the limit word, its mirror, and all of
    their aligned tails, checked exactly at every level up to n_max."""
    report = Report("l50", "tail comparison chains for the limit words", True)
    for n in range(1, n_max + 1):
        length = 3 * 2 ** (n - 1)
        lam = words.lambda_prefix(length)
        gam = words.gamma_prefix(length)
        for i in range(length):
            head = length - i
            # gamma prefix < lambda tail <= lambda prefix
            if not (gam[:head] < lam[i:] <= lam[:head]):
                report.passed = False
                report.counterexamples.append("chain1 n=%d i=%d" % (n, i))
            # gamma prefix <= gamma tail < lambda prefix
            if not (gam[:head] <= gam[i:] < lam[:head]):
                report.passed = False
                report.counterexamples.append("chain2 n=%d i=%d" % (n, i))
    report.lines.append("levels 1..%d, all aligned tails" % n_max)
    return report


def verify_interleave(k_max: int = 2048) -> Report:
    """The limit words against the classical Thue-Morse interleaving, and
    the projection identities of the three word families."""
    report = Report("interleave",
                    "limit words match the classical-sequence interleaving",
                    True)
    n = 3 * k_max
    lam = words.lambda_prefix(n)
    gam = words.gamma_prefix(n)
    tau = words.classical_tm(2 * k_max + 2, start_index=0)
    for k in range(k_max):
        ok = (lam[3 * k] == tau[2 * k + 1]
              and lam[3 * k + 1] == "0"
              and lam[3 * k + 2] == tau[2 * k + 2]
              and gam[3 * k] != tau[2 * k + 1]
              and gam[3 * k + 1] == "0"
              and gam[3 * k + 2] != tau[2 * k + 2])
        if not ok:
            report.passed = False
            report.counterexamples.append("k=%d" % k)
    report.lines.append("positions below %d checked" % k_max)
    return report


def verify_projection_identities(n_max: int = 12) -> Report:
    """Coordinate words of the three families: first/second projections give
    the block words and their mirror, sums give the expected periodic or
    reflected patterns."""
    report = Report("projections", "family coordinate identities", True)
    for n in range(1, n_max + 1):
        t = words.tm_word(n)
        th = words.theta(t)
        reps = 2 ** (n - 1)
        u = words.type_word("A", n)
        v = words.type_word("B", n)
        w = words.type_word("C", n)
        checks = [
            words.project(u, 1) == t,
            words.project(u, 2) == th,
            words.project(words.phi("A", u), 1) == th,
            words.project(words.phi("A", u), 2) == t,
            words.project(v, 1) == "010" * reps,
            words.project(v, 2) == t,
            words.project(words.phi("B", v), 1) == "010" * reps,
            words.project(words.phi("B", v), 2) == th,
            words.project(w, 1) == th,
            words.project(w, 2) == "010" * reps,
            words.project(words.phi("C", w), 1) == t,
            words.project(words.phi("C", w), 2) == "010" * reps,
            words.project(u, "sum") == "101" * reps,
            words.project(words.phi("A", u), "sum") == "101" * reps,
            words.project(v, "sum") == words.reflection(th),
            words.project(words.phi("B", v), "sum") == words.reflection(t),
            words.project(w, "sum") == words.reflection(t),
            words.project(words.phi("C", w), "sum") == words.reflection(th),
        ]
        if not all(checks):
            report.passed = False
            report.counterexamples.append(
                "n=%d failing indices %s"
                % (n, [i for i, c in enumerate(checks) if not c]))
    report.lines.append("levels 1..%d" % n_max)
    return report


def verify_periodic(k: int, beta_spec=None) -> Report:
    """The six level-k periodic family words are admissible just above the
    k-th ladder base and violate exactly at it."""
    report = Report("periodic",
                    "level-%d periodic words flip at the ladder base" % k, True)
    above = bases.parse_base(beta_spec) if beta_spec else bases.beta_ladder(k + 1)
    at = bases.beta_ladder(k)
    family = []
    for kind in "ABC":
        word = words.type_word(kind, k)
        family.append(word)
        family.append(words.phi(kind, word))
    for word in family:
        coding = EventuallyPeriodic("", word)
        v_above = admissibility.is_admissible_periodic(coding, above)
        v_at = admissibility.is_admissible_periodic(coding, at)
        ok = (v_above.status is Status.ADMISSIBLE
              and v_at.status is Status.VIOLATION)
        if not ok:
            report.passed = False
            report.counterexamples.append(
                "(%s): above=%s at=%s" % (word, v_above.status.value,
                                          v_at.status.value))
        report.lines.append("(%s)^inf: %s above, %s at the base"
                            % (word, v_above.status.value, v_at.status.value))
    return report


def dispatch(args) -> Report:
    cmd = args.cmd
    if cmd == "lemma31":
        return admissibility.verify_triple_distinct(
            bases.parse_base(args.beta), args.m)
    if cmd == "lemma33":
        return admissibility.verify_forbidden_blocks(bases.parse_base(args.beta))
    if cmd == "lemma34":
        kwargs = {}
        if args.horizon is not None:
            kwargs["horizon"] = args.horizon
        return admissibility.verify_lemma34(
            bases.parse_base(args.beta), args.context, case=args.case, **kwargs)
    if cmd == "prop44":
        return admissibility.verify_prop44(
            args.k, bases.parse_base(args.beta), args.context, args.horizon)
    if cmd == "prop48":
        return admissibility.verify_prop48(
            args.k, bases.parse_base(args.beta), args.context, args.horizon,
            family=args.family)
    if cmd == "l50":
        return verify_l50(args.nmax)
    if cmd == "interleave":
        return verify_interleave(args.kmax)
    if cmd == "plateau":
        return admissibility.verify_plateau(args.n, args.m, args.horizon or 20)
    if cmd == "periodic":
        return verify_periodic(args.k, args.beta)
    raise ValueError("unknown verify command %r" % cmd)
