"""Acceptance criteria 1-11, one check per criterion.

Run under pytest (a summary line per criterion is printed at the end of the session) or directly
with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
import pytest

from aspectra import catalog as cat
from aspectra import graph as gr
from aspectra.algebra import MultiPoly
from aspectra.census import nonisomorphic_graphs, random_graphs
from aspectra.factor import brute_force_factor_oracle, has_p345_factor, kano_condition, p_ge3_equivalence
from aspectra.graph import FamilySpec
from aspectra.spectral import (SymmetricMatrix, a_alpha_matrix, interlace_check, quotient_matrix, spectral_radius,
                               symmetrize_quotient, threshold_result)
from aspectra.verify import case_scan, exception_check, identity_suite, inequality_suite, transcription_audit

# tolerances, one per criterion that needs one
COMPLETE_TOL = 1e-9
AGREE_TOL = 1e-7
THETA2_SLACK = 1e-8

RANDOM_SEED = 20240601
RANDOM_COUNT = 10_000


@dataclass(frozen=True)
class Verdict:
    passed: bool
    detail: str
    seconds: float = 0.0


RESULTS: dict[int, Verdict] = {}


@lru_cache(maxsize=None)
def small_connected_graphs():
    return tuple(g for k in range(3, 8) for g in nonisomorphic_graphs(k))


def complete_graph_radius() -> Verdict:
    worst = 0.0
    for k in range(2, 51):
        for alpha in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 5)):
            worst = max(worst, abs(spectral_radius(a_alpha_matrix(gr.complete(k), alpha)).lambda_max - (k - 1)))
    return Verdict(worst <= COMPLETE_TOL, f"max |lambda - (n-1)| = {worst:.2e} over 196 pairs (tol {COMPLETE_TOL:g})")


def transcription() -> Verdict:
    res = transcription_audit()
    bad = [r.name for r in res if not r.passed]
    return Verdict(not bad, f"{len(res) - len(bad)}/{len(res)} displays match exactly" + (f"; failing {bad}" if bad else ""))


def identities() -> Verdict:
    res = identity_suite()
    bad = [r.name for r in res if not r.passed]
    quoted = cat.F2_AT_25_BY_S[6] == 1125 * MultiPoly.var("a") ** 2 - 3528 * MultiPoly.var("a") + 2133
    return Verdict(not bad and quoted, f"{len(res) - len(bad)}/{len(res)} exact identities; "
                                       f"f2(25) at s=6 is 1125a^2-3528a+2133: {quoted}")


def inequalities() -> Verdict:
    out = inequality_suite()
    bad = [o.name for o in out if not o.passed]
    a = MultiPoly.var("a")
    quoted = [cat.PSI_MIN[0][1] == 9 * (95 - 105 * a), cat.PSI_MIN[1][1] == 18 * (47 - 52 * a),
              cat.PSI_MIN[2][1] == 9 * (76 - 85 * a), cat.PHI_MIN[0][1] == 9 * (75 - 84 * a),
              cat.PHI_MIN[1][1] == 9 * (74 - 83 * a), cat.PHI_MIN[2][1] == 9 * (93 - 103 * a)]
    points = sum(o.points for o in out)
    return Verdict(not bad and all(quoted),
                   f"{len(out) - len(bad)}/{len(out)} sign claims over {points} grid points; "
                   f"quoted psi/Phi minima {sum(quoted)}/6")


def threshold_consistency() -> Verdict:
    worst, inside = 0.0, True
    for n in (25, 30, 40):
        for alpha in (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(3, 5)):
            res = threshold_result(n, alpha, agree_tol=1.0)
            worst = max(worst, res.agreement)
            inside &= all(n - 2 < v < n - 1 for v in (res.value, res.dense))
    return Verdict(worst <= AGREE_TOL and inside,
                   f"max eigensolver/root gap {worst:.2e} (tol {AGREE_TOL:g}); inside (n-2, n-1): {inside}")


def case_scan_reproduction() -> Verdict:
    ok, gaps = True, []
    for alpha in (Fraction(0), Fraction(1, 3), Fraction(1, 2)):
        rep = case_scan(25, alpha)
        gaps.append(rep.max_discrepancy)
        ok &= rep.equality_at_s1 and rep.all_below_for_s_ge_2 and all(r.quotient_matches for r in rep.rows)
        ok &= [r.s for r in rep.rows] == list(range(1, 15))
        ok &= any(r.case == 2 and r.closed_form is not None for r in rep.rows)
    # the N closed form never appears at n = 25, so Case 3 is exercised one order up
    case3 = [r for r in case_scan(26, Fraction(1, 3)).rows if r.case == 3]
    ok &= bool(case3) and all(abs(r.closed_form - r.lambda_dense) <= AGREE_TOL for r in case3)
    worst = max(gaps)
    return Verdict(ok and worst <= AGREE_TOL, f"s=1 equality and s=2..14 strictly below at n=25; "
                                              f"max quotient gap {worst:.2e}; Case 3 closed form at n=26 agrees")


def oracle_equivalence() -> Verdict:
    disagree = bad_cert = 0
    graphs = small_connected_graphs()
    for g in graphs:
        a, b = has_p345_factor(g), brute_force_factor_oracle(g)
        disagree += a.has_factor != b.has_factor
        if a.has_factor:
            bad_cert += not a.certificate.validate(g)
        if b.has_factor:
            bad_cert += not b.certificate.validate(g)
    sample = random_graphs(RANDOM_COUNT, (8, 10), seed=RANDOM_SEED)
    positive = 0
    for g in sample:
        a, b = has_p345_factor(g), brute_force_factor_oracle(g)
        disagree += a.has_factor != b.has_factor
        positive += a.has_factor
        if a.has_factor:
            bad_cert += not a.certificate.validate(g)
    return Verdict(disagree == 0 and bad_cert == 0,
                   f"{len(graphs)} graphs n<=7 plus {RANDOM_COUNT} random (seed {RANDOM_SEED}, {positive} with factor): "
                   f"{disagree} disagreements, {bad_cert} invalid certificates")


def isolated_vertex_soundness() -> Verdict:
    graphs = small_connected_graphs()
    violations = sum(1 for g in graphs if kano_condition(g).holds and not has_p345_factor(g).has_factor)
    return Verdict(violations == 0, f"{violations} violations over {len(graphs)} connected graphs with n <= 7")


def pge3_equivalence() -> Verdict:
    graphs = small_connected_graphs()
    failures = sum(1 for g in graphs if not p_ge3_equivalence(g))
    return Verdict(failures == 0, f"{failures} failures over {len(graphs)} connected graphs with n <= 7")


def _family_triples(count: int, rng: np.random.Generator):
    triples = []
    while len(triples) < count:
        n = int(rng.integers(25, 61))
        s = int(rng.integers(1, 3 * (n - 3) // 5 + 1))
        if (5 * s) // 3 + 3 > n:
            continue
        triples.append((n, s, Fraction(int(rng.integers(0, 14)), 20)))
    return triples


def interlacing() -> Verdict:
    rng = np.random.default_rng(RANDOM_SEED)
    ok, worst_theta = True, -np.inf
    for n, s, alpha in _family_triples(50, rng):
        spec = FamilySpec(n, s)
        sym = symmetrize_quotient(quotient_matrix(gr.extremal_g1(spec), spec.cells, alpha))
        for size in (1, 2):
            for keep in itertools.combinations(range(3), size):
                ok &= bool(interlace_check(sym, keep))
        theta2 = spectral_radius(sym).full_spectrum[1]
        bound = n + float(alpha) * s - (5 * s) // 3 - 2
        worst_theta = max(worst_theta, theta2 - bound)
    for _ in range(1000):
        size = int(rng.integers(1, 9))
        raw = rng.normal(size=(size, size))
        keep = [i for i in range(size) if rng.random() < 0.5] or [0]
        ok &= bool(interlace_check(SymmetricMatrix(raw + raw.T), keep))
    return Verdict(ok and worst_theta <= THETA2_SLACK,
                   f"50 family triples and 1000 random matrices interlace: {ok}; "
                   f"max theta2 - bound = {worst_theta:.3g} (slack {THETA2_SLACK:g})")


def exception_probe() -> Verdict:
    ok, flagged = True, []
    for n in range(6, 13):
        rep = exception_check(n, Fraction(1, 3))
        ok &= rep.kano_fails_at_cut_vertex and rep.engines_agree is True
        if rep.discrepancy:
            flagged.append(n)
    note = f"factor found for n in {flagged} (flagged discrepancy)" if flagged else "no factor at any n"
    return Verdict(ok, f"condition fails at the cut vertex with margin 1/3 and engines agree for n=6..12; {note}")


CRITERIA = {
    1: ("complete graphs have radius n-1", complete_graph_radius),
    2: ("characteristic polynomial transcription", transcription),
    3: ("exact identity suite", identities),
    4: ("sign claims on grids", inequalities),
    5: ("threshold consistency", threshold_consistency),
    6: ("case scan at n = 25", case_scan_reproduction),
    7: ("factor engines agree", oracle_equivalence),
    8: ("isolated-vertex condition implies a factor", isolated_vertex_soundness),
    9: ("P>=3 and {P3,P4,P5} factors coincide", pge3_equivalence),
    10: ("interlacing and second-eigenvalue bound", interlacing),
    11: ("exception graph probe", exception_probe),
}


def run_criterion(number: int) -> Verdict:
    start = time.perf_counter()
    v = CRITERIA[number][1]()
    RESULTS[number] = Verdict(v.passed, v.detail, time.perf_counter() - start)
    return RESULTS[number]


def summary_lines() -> list[str]:
    return [f"criterion {k:2d} {'PASS' if v.passed else 'FAIL'}  {CRITERIA[k][0]}: {v.detail} [{v.seconds:.1f}s]"
            for k, v in sorted(RESULTS.items())]


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_acceptance(number):
    verdict = run_criterion(number)
    assert verdict.passed, verdict.detail


if __name__ == "__main__":
    for k in sorted(CRITERIA):
        run_criterion(k)
        print(summary_lines()[-1], flush=True)
    sys.exit(0 if all(v.passed for v in RESULTS.values()) else 1)
