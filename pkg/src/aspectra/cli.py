"""``aspectra`` command line.

Exit codes: 0 success, 1 usage or input error, 2 capacity exceeded,
3 a verification check failed.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import factor as fac
from .census import MAX_CANONICAL_ORDER
from .formats import ParseError, read_graph, read_graph6_stream
from .graph import is_connected
from .spectral import (DEFAULT_TOL, ConsistencyError, ConvergenceError, a_alpha_matrix, as_alpha,
                       spectral_radius, threshold_result)
from .verify import report
from .verify.identities import identity_suite, transcription_audit
from .verify.inequalities import inequality_suite
from .verify.scans import case_scan, exception_check, exhaustive_scan, scan_graphs, shard_count, write_csv

EXIT_USAGE, EXIT_CAPACITY, EXIT_VERIFY = 1, 2, 3
THEOREM_ALPHA_BOUND = Fraction(2, 3)


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _alpha(text: str) -> Fraction:
    try:
        value = as_alpha(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"alpha must be a rational like 1/3 or 0.25, got {text!r}")
    if not 0 <= value < 1:
        raise argparse.ArgumentTypeError(f"alpha must satisfy 0 <= alpha < 1, got {value}")
    return value


def _theorem_alpha(alpha: Fraction) -> Fraction:
    if alpha >= THEOREM_ALPHA_BOUND:
        raise UsageError(f"this command needs alpha < 2/3, got {alpha}")
    return alpha


def _graph(text: str):
    try:
        return read_graph(text)
    except (ParseError, OSError) as exc:
        raise UsageError(f"cannot read graph {text!r}: {exc}")


def _emit(args, kind: str, payload, text: str, **extra):
    if args.output == "json":
        print(report.to_json(kind, payload, **extra))
    else:
        print(text)


def cmd_radius(args) -> int:
    g = _graph(args.graph)
    res = spectral_radius(a_alpha_matrix(g, args.alpha), args.tol)
    lines = [f"lambda_{args.alpha} = {res.lambda_max:.12g}  (tolerance {args.tol:g}, residual {res.residual:.3g}, "
             f"{res.method}, {res.iterations} sweeps)"]
    bracket = None
    if g.order >= 3 and is_connected(g):
        n = g.order
        # strict inequalities only count when they clear the numerical slack
        slack = max(res.residual, 1e-9)
        bracket = n - 2 + slack < res.lambda_max < n - 1 - slack
        lines.append(f"n-2 < lambda < n-1 for n={n}: {'yes' if bracket else 'no'}")
    _emit(args, "radius", res, "\n".join(lines), alpha=args.alpha, tolerance=args.tol, in_bracket=bracket)
    return 0


def cmd_threshold(args) -> int:
    res = threshold_result(args.n, args.alpha, agree_tol=args.tol)
    text = (f"threshold(n={args.n}, alpha={args.alpha}) = {res.value:.12g}\n"
            f"dense eigensolver {res.dense:.12g}, exact root bracket width {float(res.bracket_high - res.bracket_low):.3g}\n"
            f"agreement {res.agreement:.3g} (tolerance {args.tol:g}): OK\n"
            f"bracket ({args.n - 2}, {args.n - 1}): OK")
    _emit(args, "threshold", res, text, tolerance=args.tol)
    return 0


def cmd_factor(args) -> int:
    g = _graph(args.graph)
    out = fac.has_p345_factor(g)
    if out.has_factor:
        blocks = " / ".join(" ".join(map(str, b)) for b in out.certificate.blocks)
        text = f"factor: yes; blocks: {blocks}"
        if args.certificate:
            text += "\n" + out.certificate.to_text()
    else:
        text = "factor: no"
    _emit(args, "factor", out, text)
    return 0


def cmd_kano(args) -> int:
    g = _graph(args.graph)
    rep = fac.kano_condition(g)
    text = (f"holds: {'yes' if rep.holds else 'no'}\n"
            f"worst set: {set(rep.worst_set) or '{}'}  margin i(G-S) - 2|S|/3 = {rep.worst_margin}\n"
            f"non-empty sets only: holds {'yes' if rep.holds_nonempty else 'no'}, "
            f"worst {set(rep.worst_set_nonempty) or '{}'}, margin {rep.worst_margin_nonempty}\n"
            f"subsets examined: {rep.subsets_examined}")
    _emit(args, "kano", rep, text)
    return 0


def cmd_identities(args) -> int:
    audit = [] if args.only else transcription_audit()
    results = identity_suite(args.only)
    if args.only and not results:
        raise UsageError(f"no identity matches {args.only!r}")
    rows = [(r.name, r.passed, r.counterexample) for r in audit + results]
    passed_audit = sum(r.passed for r in audit)
    passed = sum(r.passed for r in results)
    text = report.table(("case", "pass", "first differing term"), rows)
    if audit:
        text += f"\n\ntranscription audit: {passed_audit}/{len(audit)} passed"
    text += f"\n{passed}/{len(results)} passed"
    payload = {"audit": [{"name": r.name, "passed": r.passed, "counterexample": r.counterexample} for r in audit],
               "identities": [{"name": r.name, "residue": r.case.residue, "passed": r.passed,
                               "counterexample": r.counterexample} for r in results]}
    _emit(args, "identities", payload, text)
    if passed != len(results) or passed_audit != len(audit):
        raise VerificationFailed("identity check failed")
    return 0


def cmd_inequalities(args) -> int:
    outcomes = inequality_suite(dense=args.dense)
    rows = []
    for o in outcomes:
        w = o.violations[0] if o.violations else None
        rows.append((o.name, o.case.claim + " 0", o.case.domain, o.points, float(o.minimum), o.passed,
                     f"s={w.s} n={w.n} alpha={w.alpha}" if w else None))
    good = sum(o.passed for o in outcomes)
    text = report.table(("case", "claim", "domain", "points", "min value", "pass", "witness"), rows)
    text += f"\n\n{good}/{len(outcomes)} sign claims hold (exact rational evaluation)"
    payload = [{"name": o.name, "claim": o.case.claim, "domain": o.case.domain, "points": o.points,
                "minimum": o.minimum, "passed": o.passed,
                "violations": [dict(s=w.s, n=w.n, alpha=w.alpha, value=w.value) for w in o.violations[:20]]}
               for o in outcomes]
    _emit(args, "inequalities", payload, text, dense=args.dense)
    if good != len(outcomes):
        raise VerificationFailed("a sign claim failed")
    return 0


def cmd_case_scan(args) -> int:
    rep = case_scan(args.n, _theorem_alpha(args.alpha))
    rows = [(r.s, r.case, r.clique2, r.independents, r.lambda_dense, r.lambda_quotient, r.discrepancy,
             r.quotient_matches, r.below_threshold if r.s > 1 else None) for r in rep.rows]
    text = report.table(("s", "case", "middle", "isolated", "lambda dense", "lambda quotient", "|diff|",
                         "quotient ok", "below threshold"), rows)
    label = "exploratory (n < 25)" if rep.exploratory else "n >= 25"
    text += (f"\n\nthreshold {rep.threshold:.12g}; cross-check tolerance {rep.tolerance:g}; {label}\n"
             f"equality at s=1: {'yes' if rep.equality_at_s1 else 'no'}; "
             f"all s >= 2 below threshold: {'yes' if rep.all_below_for_s_ge_2 else 'no'}")
    _emit(args, "case-scan", rep.rows, text, n=args.n, alpha=args.alpha, threshold=rep.threshold,
          tolerance=rep.tolerance, exploratory=rep.exploratory, equality_at_s1=rep.equality_at_s1,
          all_below_for_s_ge_2=rep.all_below_for_s_ge_2)
    return 0


def cmd_scan(args) -> int:
    alpha = _theorem_alpha(args.alpha)
    shards = shard_count(args.shards)
    if args.graph6_stream:
        try:
            graphs = [g for g in read_graph6_stream(args.graph6_stream) if args.n is None or g.order == args.n]
        except (OSError, ParseError) as exc:
            raise UsageError(str(exc))
        summary = scan_graphs(graphs, alpha, shards)
    else:
        if args.n is None:
            raise UsageError("scan needs --n or --graph6-stream")
        if args.n > MAX_CANONICAL_ORDER - 1:
            raise fac.CapacityError(f"built-in enumeration stops at n = {MAX_CANONICAL_ORDER - 1}; "
                                    "pass larger graphs with --graph6-stream")
        summary = exhaustive_scan(args.n, alpha, n_min=args.n, shards=shards)
    if args.output == "csv":
        write_csv(summary.records, sys.stdout)
        return 0
    text = (f"orders {list(summary.orders)}, alpha {alpha}, slack {1e-9:g}"
            f"{' (exploratory)' if summary.exploratory else ''}\n"
            f"cells: {summary.cells}\n"
            f"above threshold without factor: {summary.exceptions or 'none'}")
    _emit(args, "scan", {"cells": summary.cells, "exceptions": summary.exceptions,
                         "records": summary.records}, text, alpha=alpha, exploratory=summary.exploratory)
    return 0


def cmd_exception(args) -> int:
    rep = exception_check(args.n, _theorem_alpha(args.alpha))
    cert = " / ".join(" ".join(map(str, b)) for b in rep.dp.certificate.blocks) if rep.dp.has_factor else "-"
    agree = {None: "oracle not run", True: "yes", False: "NO"}[rep.engines_agree]
    text = (f"n={rep.n}, alpha={rep.alpha}\n"
            f"lambda = {rep.lambda_alpha:.12g}, threshold = {rep.threshold:.12g} (tolerance 1e-07)\n"
            f"isolated-vertex condition holds: {'yes' if rep.kano.holds else 'no'}; worst set "
            f"{set(rep.kano.worst_set) or '{}'} margin {rep.kano.worst_margin}\n"
            f"factor (subset search): {'yes' if rep.dp.has_factor else 'no'}; blocks: {cert}\n"
            f"engines agree: {agree}\n"
            f"{'FLAG: ' if rep.discrepancy else ''}{rep.message()}")
    _emit(args, "exception", rep, text, discrepancy=rep.discrepancy, engines_agree=rep.engines_agree,
          kano_fails_at_cut_vertex=rep.kano_fails_at_cut_vertex)
    if rep.engines_agree is False:
        raise VerificationFailed("factor engines disagree")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="aspectra", description="A_alpha spectral radius and path-factor checks.")
    p.add_argument("--output", choices=("text", "json", "csv"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--output", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
        return sp

    sp = add("radius", cmd_radius, "A_alpha spectral radius of a graph")
    sp.add_argument("--alpha", type=_alpha, required=True)
    sp.add_argument("--graph", required=True, help="builder expression, graph6 string or @edge-list-file")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)

    sp = add("threshold", cmd_threshold, "spectral radius of K1 v (K_{n-2} u K1)")
    sp.add_argument("--alpha", type=_alpha, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--tol", type=float, default=1e-7, help="agreement tolerance between the two routes")

    sp = add("factor", cmd_factor, "decide whether a {P3,P4,P5}-factor exists")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--certificate", action="store_true", help="also print one block per line")

    sp = add("kano", cmd_kano, "audit i(G-S) <= 2|S|/3 over all proper subsets")
    sp.add_argument("--graph", required=True)

    sp = add("identities", cmd_identities, "exact polynomial identity catalogue")
    sp.add_argument("--only", help="substring filter on case names")

    sp = add("inequalities", cmd_inequalities, "sign claims on rational grids")
    sp.add_argument("--dense", action="store_true", help="finer alpha grid and larger s, n ranges")

    sp = add("case-scan", cmd_case_scan, "lambda_alpha(G1(n, s)) for every admissible s")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", type=_alpha, required=True)

    sp = add("scan", cmd_scan, "classify every connected graph of one order")
    sp.add_argument("--n", type=int)
    sp.add_argument("--alpha", type=_alpha, required=True)
    sp.add_argument("--graph6-stream", metavar="FILE")
    sp.add_argument("--shards", type=int, help="worker processes (overrides ASPECTRA_SHARDS)")

    sp = add("exception", cmd_exception, "probe the excluded graph K1 v (K_{n-2} u K1)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", type=_alpha, required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except fac.CapacityError as exc:
        print(f"aspectra: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (VerificationFailed, ConsistencyError, ConvergenceError) as exc:
        print(f"aspectra: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (UsageError, ValueError) as exc:
        print(f"aspectra: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
