"""Exact identity catalogue for the extremal-family argument.

Each case is checked as a polynomial identity in ``x, n, s, t, a``.  Floors are
resolved per residue of ``s`` modulo 3, either through ``s = 3t + r`` or by
writing ``floor(2s/3)`` and ``floor(5s/3)`` as linear polynomials in ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Fr

from .. import catalog as cat
from ..algebra import MultiPoly, char_poly, first_difference, floor_terms, identity_equal, n, s, t, x


class TranscriptionError(AssertionError):
    """A catalogued polynomial disagrees with the one derived from its matrix."""


def floors_in_s(r: int) -> tuple[MultiPoly, MultiPoly]:
    """``floor(2s/3)`` and ``floor(5s/3)`` as polynomials in ``s`` when ``s = r mod 3``."""
    if r == 0:
        return Fr(2, 3) * s, Fr(5, 3) * s
    if r == 1:
        return (2 * s - 2) / 3, (5 * s - 2) / 3
    if r == 2:
        return (2 * s - 1) / 3, (5 * s - 1) / 3
    raise ValueError(f"residue must be 0, 1 or 2, got {r}")


def b1_for_residue(r: int):
    s_r, fl2, fl5 = floor_terms(r)
    return cat.b1_matrix(s_r, fl2, fl5)


def build_phi_b1(r: int) -> MultiPoly:
    """Characteristic polynomial of B_1 under ``s = 3t + r``, audited against the display."""
    derived = char_poly(b1_for_residue(r))
    s_r, fl2, _ = floor_terms(r)
    displayed = cat.phi_b1_display(s_r, fl2)
    if not identity_equal(derived, displayed):
        raise TranscriptionError(
            f"phi_B1 (r={r}) differs from its display at {first_difference(derived, displayed)}"
        )
    return derived


@dataclass(frozen=True)
class IdentityCase:
    name: str
    residue: int | None
    lhs: MultiPoly
    rhs: MultiPoly
    constraints: str


@dataclass(frozen=True)
class IdentityResult:
    case: IdentityCase
    passed: bool
    counterexample: str | None

    @property
    def name(self) -> str:
        return self.case.name


def _check(case: IdentityCase) -> IdentityResult:
    diff = first_difference(case.lhs, case.rhs)
    return IdentityResult(case, diff is None, diff)


def transcription_cases() -> list[IdentityCase]:
    """Displayed characteristic polynomials against char_poly of their matrices."""
    cases = []
    for r in range(3):
        s_r, fl2, fl5 = floor_terms(r)
        derived = char_poly(cat.b1_matrix(s_r, fl2, fl5))
        cases.append(IdentityCase(
            f"phi-b1-general-r{r}", r, derived, cat.phi_b1_display(s_r, fl2),
            "s = 3t + r, n >= floor(5s/3) + 3"))
        cases.append(IdentityCase(
            f"phi-b1-subcase-r{r}", r, derived, cat.residue_form(cat.phi_b1_subcase(r), r),
            "per-residue expansion, s = 3t + r"))
    # small members of the family: s = 1, 3, 2 with integer floors
    for name, sv, disp in (("phi-bstar", 1, cat.phi_bstar()),
                           ("phi-b2", 3, cat.phi_b2()),
                           ("phi-b3", 2, cat.phi_b3())):
        m = cat.b1_matrix(MultiPoly.const(sv), MultiPoly.const(2 * sv // 3), MultiPoly.const(5 * sv // 3))
        cases.append(IdentityCase(name, sv % 3, char_poly(m), disp, f"s = {sv}"))
    for r in range(3):
        fl2, _ = floors_in_s(r)
        cases.append(IdentityCase(
            f"phi-b4-r{r}", r, char_poly(cat.b4_matrix(s, fl2)), cat.phi_b4_display(s, fl2),
            "n = floor(5s/3) + 2"))
        cases.append(IdentityCase(
            f"phi-b5-r{r}", r, char_poly(cat.b5_matrix(s, fl2)), cat.phi_b5_display(s, fl2),
            "n = floor(5s/3) + 1"))
    return cases


def transcription_audit() -> list[IdentityResult]:
    return [_check(c) for c in transcription_cases()]


class Surd:
    """``p + q * sqrt(d)`` with polynomial ``p, q`` and a fixed radicand ``d``."""

    __slots__ = ("p", "q", "d")

    def __init__(self, p, q, d: MultiPoly):
        self.p = p if isinstance(p, MultiPoly) else MultiPoly.const(p)
        self.q = q if isinstance(q, MultiPoly) else MultiPoly.const(q)
        self.d = d

    def _lift(self, other) -> "Surd":
        return other if isinstance(other, Surd) else Surd(other, 0, self.d)

    def __add__(self, other):
        o = self._lift(other)
        return Surd(self.p + o.p, self.q + o.q, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return Surd(self.p - o.p, self.q - o.q, self.d)

    def __mul__(self, other):
        o = self._lift(other)
        return Surd(self.p * o.p + self.q * o.q * self.d, self.p * o.q + self.q * o.p, self.d)

    __rmul__ = __mul__


def _eval_at_surd(poly: MultiPoly, root: Surd) -> Surd:
    """Substitute a surd for ``x`` by Horner's rule."""
    coeffs = poly.coefficients("x")
    acc = Surd(0, 0, root.d)
    for c in reversed(coeffs):
        acc = acc * root + c
    return acc


def _radical_root_cases(label: str, phi_display, constant_fn, eq: str) -> list[IdentityCase]:
    cases = []
    for r in range(3):
        fl2, _ = floors_in_s(r)
        const = constant_fn(s, fl2)
        disc = cat.closed_form_discriminant(const)
        root = Surd(cat.quadratic_linear() / 2, Fr(1, 2), disc)
        value = _eval_at_surd(phi_display(s, fl2), root)
        cases.append(IdentityCase(f"{eq}-{label}-root-rational-r{r}", r, value.p, MultiPoly(),
                                  f"phi({label}) rational part, s = {r} mod 3"))
        cases.append(IdentityCase(f"{eq}-{label}-root-radical-r{r}", r, value.q, MultiPoly(),
                                  f"phi({label}) coefficient of the square root, s = {r} mod 3"))
    return cases


def identity_cases() -> list[IdentityCase]:
    """The full catalogue, in a fixed order."""
    phi0, phi1, phi2 = build_phi_b1(0), build_phi_b1(1), build_phi_b1(2)
    ninth = Fr(1, 9)
    c: list[IdentityCase] = []

    # (a), (b): small members are specialisations of the general polynomial
    c.append(IdentityCase("a-bstar-is-b1-at-s1", 1, phi1.subs({"t": 0}), cat.phi_bstar(), "s = 1"))
    c.append(IdentityCase("b-b2-is-b1-at-s3", 0, phi0.subs({"t": 1}), cat.phi_b2(), "s = 3"))
    c.append(IdentityCase("b-b3-is-b1-at-s2", 2, phi2.subs({"t": 0}), cat.phi_b3(), "s = 2"))

    # (c)-(g): residue 0
    c.append(IdentityCase("c-eq3.6-f1-difference", 0, phi0 - cat.phi_b2(),
                          cat.residue_form(ninth * (s - 3) * cat.f1(), 0), "s = 3t"))
    c.append(IdentityCase("d-eq3.8-f1-at-n-4", None, cat.f1(n - 4), cat.f2(), "all s"))
    c.append(IdentityCase("e-eq3.9-f2-at-min", None, cat.f2(Fr(5, 3) * s + 3), cat.f2_at_min(),
                          "n = 5s/3 + 3"))
    c.append(IdentityCase("e-eq3.9-alpha-bound", None,
                          Fr(1, 3) * (Fr(4, 9) * (12 * s**2 - 9 * s - 567)
                                      + Fr(2, 3) * (-32 * s**2 + 102 * s + 864)
                                      + 20 * s**2 - 129 * s - 243),
                          cat.f2_at_min_alpha_bound(), "alpha = 2/3 endpoint"))
    c.append(IdentityCase("f-eq3.10-f2-at-25", None, cat.f2(MultiPoly.const(25)), cat.f2_at_25(), "n = 25"))
    for sv, quad in cat.F2_AT_25_BY_S.items():
        c.append(IdentityCase(f"f-eq3.10-f2-at-25-s{sv}", 0, cat.f2(MultiPoly.const(25)).subs({"s": sv}),
                              quad, f"n = 25, s = {sv}"))
    c.append(IdentityCase("g-phi-b2-at-n-2", None, cat.phi_b2().subs({"x": n - 2}),
                          cat.phi_b2_at_n_minus_2(), "x = n - 2"))
    c.append(IdentityCase("g-phi-b2-at-n-2-n25", None, cat.phi_b2_at_n_minus_2().subs({"n": 25}),
                          cat.PHI_B2_AT_23, "n = 25"))

    # (h)-(i): residue 1
    c.append(IdentityCase("h-eq3.14-g1-difference", 1, phi1 - cat.phi_bstar(),
                          cat.residue_form(ninth * (s - 1) * cat.g1(), 1), "s = 3t + 1"))
    c.append(IdentityCase("i-eq3.15-g1-at-n-2", None, cat.g1(n - 2), cat.g2(), "all s"))
    c.append(IdentityCase("i-eq3.16-g2-at-min", None, cat.g2((5 * s + 7) / 3), cat.g2_at_min(),
                          "n = (5s + 7)/3"))
    c.append(IdentityCase("i-eq3.16-alpha-bound", None,
                          Fr(1, 3) * (Fr(4, 9) * (12 * s**2 + 33 * s - 45)
                                      - Fr(2, 3) * (32 * s**2 + 62 * s - 58)
                                      + 20 * s**2 + 17 * s - 19),
                          cat.g2_at_min_alpha_bound(), "alpha = 2/3 endpoint"))

    # (j)-(l): residue 2
    c.append(IdentityCase("j-eq3.19-h1-difference", 2, phi2 - cat.phi_b3(),
                          cat.residue_form(ninth * (s - 2) * cat.h1(), 2), "s = 3t + 2"))
    c.append(IdentityCase("k-eq3.20-h1-at-n-3", None, cat.h1(n - 3), cat.h2(), "all s"))
    c.append(IdentityCase("k-eq3.21-h2-at-min", None, cat.h2((5 * s + 8) / 3), cat.h2_at_min(),
                          "n = (5s + 8)/3"))
    c.append(IdentityCase("k-eq3.21-alpha-bound", None,
                          Fr(1, 3) * (Fr(4, 9) * (12 * s**2 + 12 * s - 234)
                                      + Fr(2, 3) * (-32 * s**2 + 20 * s + 358)
                                      + 20 * s**2 - 56 * s - 112),
                          cat.h2_at_min_alpha_bound(), "alpha = 2/3 endpoint"))
    c.append(IdentityCase("k-eq3.22-h2-at-25", None, cat.h2(MultiPoly.const(25)), cat.h2_at_25(), "n = 25"))
    for sv, quad in cat.H2_AT_25_BY_S.items():
        c.append(IdentityCase(f"k-eq3.22-h2-at-25-s{sv}", 2, cat.h2(MultiPoly.const(25)).subs({"s": sv}),
                              quad, f"n = 25, s = {sv}"))
    c.append(IdentityCase("l-phi-b3-at-n-2", None, cat.phi_b3().subs({"x": n - 2}),
                          cat.phi_b3_at_n_minus_2(), "x = n - 2"))
    c.append(IdentityCase("l-phi-b3-at-n-2-n25", None, cat.phi_b3_at_n_minus_2().subs({"n": 25}),
                          cat.PHI_B3_AT_23, "n = 25"))

    # (m), (n): Cases 2 and 3
    for label, const_fn, expanded_fn, polys, mins, offset, eq in (
        ("m", cat.b4_constant, cat.case2_gap_expanded, cat.PSI, cat.PSI_MIN, 2, "eq3.27"),
        ("n", cat.b5_constant, cat.case3_gap_expanded, cat.PHI, cat.PHI_MIN, 1, "eq3.32"),
    ):
        for r in range(3):
            fl2, fl5 = floors_in_s(r)
            gap = cat.gap_square(const_fn(s, fl2))
            c.append(IdentityCase(f"{label}-{eq}-expansion-r{r}", r, gap, expanded_fn(fl2),
                                  f"s = {r} mod 3"))
            c.append(IdentityCase(f"{label}-{eq}-branch-r{r}", r, gap.subs({"n": fl5 + offset}),
                                  Fr(4, 9) * polys[r], f"n = floor(5s/3) + {offset}, s = {r} mod 3"))
            s_min, value = mins[r]
            c.append(IdentityCase(f"{label}-{eq}-minimum-r{r}", r, polys[r].subs({"s": s_min}), value,
                                  f"s = {s_min}"))

    # (o): closed forms M and N are roots of their quadratics
    c.extend(_radical_root_cases("M", cat.phi_b4_display, cat.b4_constant, "o-eq3.26"))
    c.extend(_radical_root_cases("N", cat.phi_b5_display, cat.b5_constant, "o-eq3.31"))
    return c


def identity_suite(only: str | None = None) -> list[IdentityResult]:
    cases = identity_cases()
    if only:
        cases = [c for c in cases if only in c.name]
    return [_check(c) for c in cases]
