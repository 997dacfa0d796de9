"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 verification counterexample or
failed precondition, 3 precision exhausted.  All configuration is by flag;
identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import admissibility, analysis, bases, geometry, words
from .admissibility import PreconditionFailed, SizeLimit
from .bases import PrecisionExhausted
from .words import EventuallyPeriodic

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_PRECISION = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(text: str, out_path=None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(report, fmt: str, out_path) -> int:
    if fmt == "json":
        _emit(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n",
              out_path)
    else:
        _emit(report.render() + "\n", out_path)
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def _base(args, tol=None) -> bases.RealBase:
    tol = tol if tol is not None else getattr(args, "tol", None) or 1e-10
    return bases.parse_base(args.beta, Fraction(str(tol)))


def _enclosure_line(base: bases.RealBase, tol) -> str:
    enc = base.enclosure(Fraction(str(tol)))
    mid = float(enc.mid)
    return "enclosure [%s, %s] ~ %.12f (width <= %s)" % (
        enc.lo, enc.hi, mid, tol)


def build_parser() -> _Parser:
    p = _Parser(prog="fatgasket", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="group", required=True)

    # -- words ---------------------------------------------------------------
    w = sub.add_parser("words", help="word combinatorics").add_subparsers(
        dest="cmd", required=True)
    q = w.add_parser("tm", help="block Thue-Morse word")
    q.add_argument("--n", type=int, required=True)
    q = w.add_parser("lambda", help="limit word prefix")
    q.add_argument("--length", type=int, required=True)
    q = w.add_parser("gamma", help="mirror limit word prefix")
    q.add_argument("--length", type=int, required=True)
    q = w.add_parser("classical", help="classical Thue-Morse prefix")
    q.add_argument("--length", type=int, required=True)
    q.add_argument("--start", type=int, choices=(0, 1), default=0)
    q = w.add_parser("type", help="type-A/B/C word")
    q.add_argument("--kind", choices=("A", "B", "C"), required=True)
    q.add_argument("--level", type=int, required=True)
    q.add_argument("--variant", choices=("plain", "replaced"), default="plain")
    q = w.add_parser("phi", help="letter involution")
    q.add_argument("--kind", choices=("A", "B", "C"), required=True)
    q.add_argument("--word", required=True)
    q = w.add_parser("project", help="coordinate projection")
    q.add_argument("--word", required=True)
    q.add_argument("--axis", choices=("1", "2", "sum"), required=True)
    q = w.add_parser("theta", help="block map image")
    q.add_argument("--word", required=True)

    # -- base ------------------------------------------------------------
    b = sub.add_parser("base", help="base arithmetic").add_subparsers(
        dest="cmd", required=True)
    q = b.add_parser("delta", help="quasi-greedy expansion prefix")
    q.add_argument("--beta", required=True)
    q.add_argument("--n", type=int, required=True)
    q = b.add_parser("invert", help="base from an eventually periodic expansion")
    q.add_argument("--seq", required=True, help="pre(per) over 01")
    q.add_argument("--tol", type=float, default=1e-10)
    q = b.add_parser("ladder", help="lower ladder base")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--tol", type=float, default=1e-10)
    q = b.add_parser("hat", help="upper ladder base")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--tol", type=float, default=1e-10)
    q = b.add_parser("critical", help="critical base enclosure")
    q.add_argument("--tol", type=float, default=1e-10)
    q = b.add_parser("multinacci", help="multinacci base")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--tol", type=float, default=1e-10)
    q = b.add_parser("parry", help="shift-domination test")
    q.add_argument("--seq", required=True)

    # -- adm ------------------------------------------------------------
    a = sub.add_parser("adm", help="admissibility").add_subparsers(
        dest="cmd", required=True)
    q = a.add_parser("check", help="finite word check")
    q.add_argument("--word", required=True)
    q.add_argument("--beta", required=True)
    q.add_argument("--budget", type=int, default=admissibility.DEFAULT_BUDGET)
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--out")
    q = a.add_parser("check-periodic", help="eventually periodic coding check")
    q.add_argument("--coding", required=True, help="pre(per) over ABC")
    q.add_argument("--beta", required=True)
    q.add_argument("--budget", type=int, default=admissibility.DEFAULT_BUDGET)
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--out")
    q = a.add_parser("enumerate", help="extendable words of a given length")
    q.add_argument("--beta", required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--horizon", type=int, default=0)
    q.add_argument("--jobs", type=int, default=1)
    q.add_argument("--cap", type=int, default=2_000_000)
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--out")

    # -- verify ------------------------------------------------------------
    v = sub.add_parser("verify", help="mechanical checks").add_subparsers(
        dest="cmd", required=True)
    for name, flags in (
        ("lemma31", ("beta", "m")),
        ("lemma33", ("beta",)),
        ("lemma34", ("beta", "case", "context", "horizon")),
        ("prop44", ("beta", "k", "context", "horizon")),
        ("prop48", ("beta", "k", "context", "horizon", "family")),
        ("l50", ("nmax",)),
        ("interleave", ("kmax",)),
        ("plateau", ("n", "m", "horizon")),
        ("periodic", ("k", "beta")),
    ):
        q = v.add_parser(name)
        if "beta" in flags:
            required = name not in ("periodic",)
            q.add_argument("--beta", required=required,
                           default=None if required else "beta_c")
        if "m" in flags:
            q.add_argument("--m", type=int, default=12)
        if "k" in flags:
            q.add_argument("--k", type=int, required=True)
        if "case" in flags:
            q.add_argument("--case", choices=sorted(admissibility.LEMMA34_CASES),
                           default=None)
        if "context" in flags:
            q.add_argument("--context", type=int, default=4)
        if "horizon" in flags:
            q.add_argument("--horizon", type=int, default=None)
        if "family" in flags:
            q.add_argument("--family", choices=("v", "w"), default=None)
        if "nmax" in flags:
            q.add_argument("--n-max", type=int, default=10, dest="nmax")
        if "kmax" in flags:
            q.add_argument("--k-max", type=int, default=2048, dest="kmax")
        if "n" in flags:
            q.add_argument("--n", type=int, required=True)
        q.add_argument("--format", choices=("text", "json"), default="text")
        q.add_argument("--out")

    # -- geom ------------------------------------------------------------
    g = sub.add_parser("geom", help="planar geometry").add_subparsers(
        dest="cmd", required=True)
    q = g.add_parser("point", help="evaluate a coding")
    q.add_argument("--coding", required=True)
    q.add_argument("--beta", required=True)
    q = g.add_parser("region", help="region tags of a coded point")
    q.add_argument("--coding", required=True)
    q.add_argument("--beta", required=True)
    q = g.add_parser("unique", help="orbit overlap oracle")
    q.add_argument("--coding", required=True)
    q.add_argument("--beta", required=True)
    q.add_argument("--format", choices=("text", "json"), default="text")
    q = g.add_parser("render", help="SVG of the depth-k generation")
    q.add_argument("--beta", required=True)
    q.add_argument("--depth", type=int, required=True)
    q.add_argument("--out", required=True)

    # -- analyze ------------------------------------------------------------
    n = sub.add_parser("analyze", help="growth and dimension").add_subparsers(
        dest="cmd", required=True)
    q = n.add_parser("growth", help="count table")
    q.add_argument("--beta", required=True)
    q.add_argument("--m-max", type=int, required=True, dest="m_max")
    q.add_argument("--horizon", type=int, default=24)
    q.add_argument("--format", choices=("csv", "text"), default="csv")
    q.add_argument("--out")
    q = n.add_parser("entropy", help="growth-rate fit")
    q.add_argument("--beta", required=True)
    q.add_argument("--m-max", type=int, required=True, dest="m_max")
    q.add_argument("--horizon", type=int, default=24)
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--out")
    q = n.add_parser("dimension", help="dimension estimate")
    q.add_argument("--beta", required=True)
    q.add_argument("--m-max", type=int, required=True, dest="m_max")
    q.add_argument("--horizon", type=int, default=24)
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--out")
    q = n.add_parser("xn", help="subshift witness words")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--beta", default=None, help="also check admissibility here")
    q.add_argument("--out")
    q = n.add_parser("mahler", help="series identity residual")
    q.add_argument("--n-terms", type=int, default=60, dest="n_terms")
    q.add_argument("--beta", default="beta_c")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--out")
    q = n.add_parser("theorem-a", help="closed-form point family audit")
    q.add_argument("--beta", required=True)
    q.add_argument("--n-max", type=int, default=5, dest="n_max")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--out")
    return p


def _run_words(args) -> int:
    if args.cmd == "tm":
        _emit(words.tm_word(args.n) + "\n")
    elif args.cmd == "lambda":
        _emit(words.lambda_prefix(args.length) + "\n")
    elif args.cmd == "gamma":
        _emit(words.gamma_prefix(args.length) + "\n")
    elif args.cmd == "classical":
        _emit(words.classical_tm(args.length, args.start) + "\n")
    elif args.cmd == "type":
        _emit(words.type_word(args.kind, args.level,
                              replace_last=args.variant == "replaced") + "\n")
    elif args.cmd == "phi":
        _emit(words.phi(args.kind, args.word) + "\n")
    elif args.cmd == "project":
        axis = args.axis if args.axis == "sum" else int(args.axis)
        _emit(words.project(args.word, axis) + "\n")
    elif args.cmd == "theta":
        _emit(words.theta(args.word) + "\n")
    return EXIT_OK


def _run_base(args) -> int:
    if args.cmd == "delta":
        base = _base(args)
        _emit(base.delta_prefix(args.n) + "\n")
    elif args.cmd == "invert":
        seq = EventuallyPeriodic.parse(args.seq)
        base = bases.delta_inverse(seq, Fraction(str(args.tol)))
        lines = ["expansion %s" % seq]
        if base.kind == "rational":
            lines.append("base = %s (exact)" % base.fraction)
        else:
            lines.append("polynomial %s" % bases.format_poly(base.coeffs))
            lines.append(_enclosure_line(base, args.tol))
        _emit("\n".join(lines) + "\n")
    elif args.cmd == "ladder":
        base = bases.beta_ladder(args.n, Fraction(str(args.tol)))
        _emit(_enclosure_line(base, args.tol) + "\n")
    elif args.cmd == "hat":
        base = bases.beta_hat(args.n, Fraction(str(args.tol)))
        _emit(_enclosure_line(base, args.tol) + "\n")
    elif args.cmd == "critical":
        base = bases.critical_base(Fraction(str(args.tol)))
        _emit(_enclosure_line(base, args.tol) + "\n")
    elif args.cmd == "multinacci":
        base = bases.multinacci(args.m, Fraction(str(args.tol)))
        _emit(_enclosure_line(base, args.tol) + "\n")
    elif args.cmd == "parry":
        seq = args.seq
        target = EventuallyPeriodic.parse(seq) if "(" in seq else seq
        res = bases.parry_check(target)
        if res.ok:
            _emit("OK\n")
        else:
            _emit("Violation at position %d\n" % res.position)
            return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _run_adm(args) -> int:
    base = _base(args)
    if args.cmd == "check":
        verdict = admissibility.is_admissible_prefix(args.word, base, args.budget)
        payload = {"beta": base.spec_string(), "word": args.word,
                   **verdict.to_json()}
    elif args.cmd == "check-periodic":
        coding = EventuallyPeriodic.parse(args.coding)
        verdict = admissibility.is_admissible_periodic(coding, base, args.budget)
        payload = {"beta": base.spec_string(), "coding": str(coding),
                   **verdict.to_json()}
    else:
        enum = admissibility.enumerate_words(base, args.m, args.horizon,
                                             cap=args.cap, jobs=args.jobs)
        if args.format == "json":
            _emit(json.dumps(enum.to_json(), indent=2, sort_keys=True) + "\n",
                  args.out)
        else:
            row = enum.row()
            lines = ["m=%d T=%d admissible=%d extendable=%d"
                     % (row.m, enum.horizon, row.admissible, row.extendable)]
            lines.extend("%s %s" % (w, "live" if ok else "dead")
                         for w, ok in enum.entries)
            _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    if args.format == "json":
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    else:
        bits = [payload["status"]]
        if payload.get("position") is not None:
            bits.append("at position %d" % payload["position"])
        if payload.get("condition"):
            bits.append("(%s)" % payload["condition"])
        _emit(" ".join(bits) + "\n", args.out)
    return EXIT_OK


def _run_verify(args) -> int:
    from . import verifyops

    report = verifyops.dispatch(args)
    return _emit_report(report, args.format, args.out)


def _run_geom(args) -> int:
    base = _base(args)
    if args.cmd == "render":
        geometry.render_svg(base, args.depth, args.out)
        _emit("wrote %s\n" % args.out)
        return EXIT_OK
    coding = EventuallyPeriodic.parse(args.coding)
    if args.cmd == "point":
        p = geometry.point_of(coding, base)
        if p.exact:
            _emit("(%s, %s)\n" % (p.x, p.y))
        else:
            _emit("x in [%s, %s]\ny in [%s, %s]\n"
                  % (p.x.lo, p.x.hi, p.y.lo, p.y.hi))
    elif args.cmd == "region":
        p = geometry.point_of(coding, base)
        tags = geometry.region_of(p, base)
        _emit(" ".join(t for t in geometry.REGION_TAGS if t in tags) + "\n")
    else:
        res = geometry.geometric_unique_check(coding, base)
        if getattr(args, "format", "text") == "json":
            _emit(json.dumps(res.to_json(), sort_keys=True) + "\n")
        elif res.kind == "TailInOverlap":
            _emit("TailInOverlap shift=%d\n" % res.shift)
        else:
            _emit(res.kind + "\n")
    return EXIT_OK


def _run_analyze(args) -> int:
    if args.cmd == "xn":
        lst = analysis.xn_words(args.n, args.k)
        lines = list(lst)
        if args.beta:
            base = bases.parse_base(args.beta)
            budget = max(admissibility.DEFAULT_BUDGET, len(lst[0]) + 1)
            bad = [w for w in lst
                   if admissibility.is_admissible_prefix(w, base, budget).status
                   is admissibility.Status.VIOLATION]
            lines.append("admissible %d/%d at %s"
                         % (len(lst) - len(bad), len(lst), base.describe()))
            _emit("\n".join(lines) + "\n", args.out)
            return EXIT_OK if not bad else EXIT_COUNTEREXAMPLE
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    if args.cmd == "mahler":
        base = bases.parse_base(args.beta)
        rep = analysis.mahler_residual(base, args.n_terms)
        if args.format == "json":
            _emit(json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n",
                  args.out)
        else:
            _emit("N=%d residual<=%.3e tail_bound=%.3e within=%s\n"
                  % (rep.n_terms, float(rep.residual_sup),
                     float(rep.tail_bound), rep.within_bound), args.out)
        return EXIT_OK if rep.within_bound else EXIT_COUNTEREXAMPLE
    if args.cmd == "theorem-a":
        base = _base(args)
        entries = analysis.theorem_a_points(base, args.n_max)
        ok = all(e.matches for e in entries)
        if args.format == "json":
            _emit(json.dumps([e.to_json() for e in entries], indent=2,
                             sort_keys=True) + "\n", args.out)
        else:
            lines = ["%s n=%d %s" % (e.coding, e.n,
                                     "ok" if e.matches else "MISMATCH")
                     for e in entries]
            lines.append("total %d, all match: %s" % (len(entries), ok))
            _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK if ok else EXIT_COUNTEREXAMPLE
    base = _base(args)
    rows = analysis.growth_counts(base, args.m_max, args.horizon)
    if args.cmd == "growth":
        if args.format == "csv":
            _emit(analysis.table_to_csv(rows), args.out)
        else:
            _emit("\n".join("m=%d adm=%d ext=%d"
                            % (r.m, r.admissible, r.extendable)
                            for r in rows) + "\n", args.out)
        return EXIT_OK
    if args.cmd == "entropy":
        est = analysis.entropy_estimate(rows)
        if args.format == "json":
            _emit(json.dumps(est.to_json(), indent=2, sort_keys=True) + "\n",
                  args.out)
        else:
            _emit("slope %.6f nats/symbol (stderr %.6f, lengths %d..%d)\n"
                  % (est.slope, est.stderr, *est.fit_lengths), args.out)
        return EXIT_OK
    rep = analysis.dimension_estimate(base, rows)
    if args.format == "json":
        _emit(json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n",
              args.out)
    else:
        _emit("dimension %.6f (slope %.6f / log beta %.6f)\n"
              % (rep.value, rep.slope, rep.log_beta), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return EXIT_USAGE
    try:
        if args.group == "words":
            return _run_words(args)
        if args.group == "base":
            return _run_base(args)
        if args.group == "adm":
            return _run_adm(args)
        if args.group == "verify":
            return _run_verify(args)
        if args.group == "geom":
            return _run_geom(args)
        if args.group == "analyze":
            return _run_analyze(args)
        return EXIT_USAGE
    except PrecisionExhausted as exc:
        sys.stderr.write("precision exhausted: %s\n" % exc)
        return EXIT_PRECISION
    except (PreconditionFailed, analysis.PreconditionFailed) as exc:
        sys.stderr.write("precondition failed: %s\n" % exc)
        return EXIT_COUNTEREXAMPLE
    except (ValueError, SizeLimit, bases.InvalidBase) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
