"""Sign claims of the extremal-family argument, checked on exact rational grids.

Every case is a polynomial in ``s``, ``n`` and ``a`` (alpha) with a domain of
integer ``(s, n)`` points and a claim ``> 0`` or ``>= 0``.  Points are
evaluated exactly with Fractions over an alpha grid that stays below 2/3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Fr
from typing import Callable, Iterator

from .. import catalog as cat
from ..algebra import MultiPoly, a, n, s

ALPHA_GRID = tuple(Fr(k, 20) for k in range(14))          # 0 .. 13/20
DENSE_ALPHA_GRID = tuple(Fr(k, 60) for k in range(40))    # 0 .. 39/60

# (largest s, how far n runs above its lower bound)
DEFAULT_CAPS = (30, 27)
DENSE_CAPS = (90, 90)


@dataclass(frozen=True)
class InequalityCase:
    name: str
    expression: MultiPoly
    claim: str                      # ">" or ">="
    domain: str
    residue: int | None = None      # s mod 3, None when s is free or absent
    s_min: int | None = None
    s_values: tuple[int, ...] | None = None
    n_lower: Callable[[int], int] | None = None

    def __post_init__(self):
        if self.claim not in (">", ">="):
            raise ValueError(f"claim must be '>' or '>=', got {self.claim!r}")

    def grid(self, s_max: int, n_span: int) -> Iterator[tuple[int | None, int | None]]:
        uses_n = "n" in self.expression.variables
        if self.s_values is not None:
            s_list: list[int | None] = list(self.s_values)
        elif self.s_min is not None:
            s_list = [v for v in range(self.s_min, max(s_max, self.s_min) + 1)
                      if self.residue is None or v % 3 == self.residue]
        else:
            s_list = [None]
        for sv in s_list:
            if not uses_n:
                yield sv, None
                continue
            lo = self.n_lower(sv)
            for nv in range(lo, lo + n_span + 1):
                yield sv, nv

    def holds(self, value: Fr) -> bool:
        return value > 0 if self.claim == ">" else value >= 0


@dataclass(frozen=True)
class Witness:
    s: int | None
    n: int | None
    alpha: Fr
    value: Fr


@dataclass
class InequalityOutcome:
    case: InequalityCase
    points: int = 0
    minimum: Fr | None = None
    violations: list[Witness] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and self.points > 0

    @property
    def name(self) -> str:
        return self.case.name


def _axis_margin(linear_coeff: MultiPoly, lead: MultiPoly, point) -> MultiPoly:
    """Positive iff the vertex of ``lead*v^2 + linear_coeff*v`` lies left of ``point`` (lead > 0)."""
    return 2 * lead * point + linear_coeff


def _n_at_least(bound: Callable[[int], Fr], floor25: bool):
    def lower(sv):
        lo = bound(sv)
        if lo.denominator != 1:
            raise ValueError(f"lower bound {lo} is not an integer at s = {sv}")
        return max(int(lo), 25) if floor25 else int(lo)
    return lower


def inequality_cases() -> list[InequalityCase]:
    """Catalogue of sign claims, each with the domain under which it is asserted."""
    n_case1_r0 = _n_at_least(lambda v: Fr(5 * v, 3) + 3, False)
    n_case1_r1 = _n_at_least(lambda v: Fr(5 * v + 7, 3), False)
    n_case1_r2 = _n_at_least(lambda v: Fr(5 * v + 8, 3), False)
    n_case1_r0_25 = _n_at_least(lambda v: Fr(5 * v, 3) + 3, True)
    n_case1_r2_25 = _n_at_least(lambda v: Fr(5 * v + 8, 3), True)
    n_25 = lambda _v: 25
    six_nine = 6 - 9 * a
    six_six = 6 - 6 * a

    c: list[InequalityCase] = []
    add = c.append

    # residue 0
    add(InequalityCase("eq3.7-f1-axis", _axis_margin(9 * a**2 * n + 3 * a * n - 6 * s - 18 * a - 21, six_nine, n - 4),
                       ">", "s >= 6, s = 0 mod 3, n >= 5s/3 + 3", 0, 6, n_lower=n_case1_r0))
    add(InequalityCase("eq3.9-f2-axis", _axis_margin(12 * a**2 * s - 12 * a * s + 27 * a**2 - 3 * a - 42, six_six,
                                                    Fr(5, 3) * s + 3),
                       ">", "s >= 15, s = 0 mod 3", 0, 15))
    add(InequalityCase("eq3.9-f2", cat.f2(), ">", "s >= 15, s = 0 mod 3, n >= 5s/3 + 3", 0, 15, n_lower=n_case1_r0))
    add(InequalityCase("eq3.9-f2-at-min", cat.f2_at_min(), ">", "s >= 15, s = 0 mod 3", 0, 15))
    add(InequalityCase("eq3.9-vertex-ratio", -3 * (-32 * s**2 + 102 * s + 864) - 4 * (12 * s**2 - 9 * s - 567),
                       ">", "s >= 15, s = 0 mod 3", 0, 15))
    add(InequalityCase("eq3.9-leading", 12 * s**2 - 9 * s - 567, ">", "s >= 15, s = 0 mod 3", 0, 15))
    add(InequalityCase("eq3.9-alpha-bound", cat.f2_at_min_alpha_bound(), ">", "s >= 15, s = 0 mod 3", 0, 15))
    add(InequalityCase("eq3.10-f2-axis", _axis_margin(12 * a**2 * s - 12 * a * s + 27 * a**2 - 3 * a - 42, six_six,
                                                     MultiPoly.const(25)),
                       ">", "s in {6, 9, 12}", 0, s_values=(6, 9, 12)))
    add(InequalityCase("eq3.10-f2", cat.f2(), ">", "s in {6, 9, 12}, n >= 25", 0, s_values=(6, 9, 12), n_lower=n_25))
    for sv, quad in cat.F2_AT_25_BY_S.items():
        add(InequalityCase(f"eq3.10-f2-at-25-s{sv}", quad, ">", f"s = {sv}"))
    add(InequalityCase("f2-combined", cat.f2(), ">", "s >= 6, s = 0 mod 3, n >= max(25, 5s/3 + 3)",
                       0, 6, n_lower=n_case1_r0_25))
    add(InequalityCase("eq3.11-weak", Fr(1, 9) * (s - 3) * cat.f2(), ">=",
                       "s >= 3, s = 0 mod 3, n >= max(25, 5s/3 + 3)", 0, 3, n_lower=n_case1_r0_25))
    add(InequalityCase("eq3.13-phi-b2-at-n-2", cat.phi_b2_at_n_minus_2(), ">", "n >= 25", n_lower=n_25))
    add(InequalityCase("eq3.13-phi-b2-at-23", cat.PHI_B2_AT_23, ">", "n = 25"))
    add(InequalityCase("eq3.13-phi-b2-axis", _axis_margin(15 * a**2 - 11 * a - 6, 2 - 2 * a, MultiPoly.const(25)),
                       ">", "n = 25"))

    # residue 1
    add(InequalityCase("eq3.15-g1-axis", _axis_margin(9 * a**2 * n + 3 * a * n - 6 * s - 18 * a - 3, six_nine, n - 2),
                       ">", "s >= 4, s = 1 mod 3, n >= (5s + 7)/3", 1, 4, n_lower=n_case1_r1))
    add(InequalityCase("eq3.16-g2-axis", _axis_margin(12 * a**2 * s - 12 * a * s + 9 * a**2 + 3 * a - 18, six_six,
                                                     (5 * s + 7) / 3),
                       ">", "s >= 4, s = 1 mod 3", 1, 4))
    add(InequalityCase("eq3.16-g2", cat.g2(), ">", "s >= 4, s = 1 mod 3, n >= (5s + 7)/3", 1, 4, n_lower=n_case1_r1))
    add(InequalityCase("eq3.16-g2-at-min", cat.g2_at_min(), ">", "s >= 4, s = 1 mod 3", 1, 4))
    add(InequalityCase("eq3.16-vertex-ratio", 3 * (32 * s**2 + 62 * s - 58) - 4 * (12 * s**2 + 33 * s - 45),
                       ">", "s >= 4, s = 1 mod 3", 1, 4))
    add(InequalityCase("eq3.16-leading", 12 * s**2 + 33 * s - 45, ">", "s >= 4, s = 1 mod 3", 1, 4))
    add(InequalityCase("eq3.16-alpha-bound", cat.g2_at_min_alpha_bound(), ">", "s >= 4, s = 1 mod 3", 1, 4))
    add(InequalityCase("eq3.17-strict", Fr(1, 9) * (s - 1) * cat.g2(), ">",
                       "s >= 4, s = 1 mod 3, n >= (5s + 7)/3", 1, 4, n_lower=n_case1_r1))

    # residue 2
    add(InequalityCase("eq3.20-h1-axis", _axis_margin(9 * a**2 * n + 3 * a * n - 6 * s - 18 * a - 12, six_nine, n - 3),
                       ">", "s >= 5, s = 2 mod 3, n >= (5s + 8)/3", 2, 5, n_lower=n_case1_r2))
    add(InequalityCase("eq3.21-h2-axis", _axis_margin(12 * a**2 * s - 12 * a * s + 18 * a**2 - 30, six_six,
                                                     (5 * s + 8) / 3),
                       ">", "s >= 11, s = 2 mod 3", 2, 11))
    add(InequalityCase("eq3.21-h2", cat.h2(), ">", "s >= 11, s = 2 mod 3, n >= (5s + 8)/3", 2, 11, n_lower=n_case1_r2))
    add(InequalityCase("eq3.21-h2-at-min", cat.h2_at_min(), ">", "s >= 11, s = 2 mod 3", 2, 11))
    add(InequalityCase("eq3.21-vertex-ratio", -3 * (-32 * s**2 + 20 * s + 358) - 4 * (12 * s**2 + 12 * s - 234),
                       ">", "s >= 11, s = 2 mod 3", 2, 11))
    add(InequalityCase("eq3.21-leading", 12 * s**2 + 12 * s - 234, ">", "s >= 11, s = 2 mod 3", 2, 11))
    add(InequalityCase("eq3.21-alpha-bound", cat.h2_at_min_alpha_bound(), ">", "s >= 11, s = 2 mod 3", 2, 11))
    add(InequalityCase("eq3.22-h2-axis", _axis_margin(12 * a**2 * s - 12 * a * s + 18 * a**2 - 30, six_six,
                                                     MultiPoly.const(25)),
                       ">", "s in {5, 8}", 2, s_values=(5, 8)))
    add(InequalityCase("eq3.22-h2", cat.h2(), ">", "s in {5, 8}, n >= 25", 2, s_values=(5, 8), n_lower=n_25))
    for sv, quad in cat.H2_AT_25_BY_S.items():
        add(InequalityCase(f"eq3.22-h2-at-25-s{sv}", quad, ">", f"s = {sv}"))
    add(InequalityCase("eq3.23-weak", Fr(1, 9) * (s - 2) * cat.h2(), ">=",
                       "s >= 2, s = 2 mod 3, n >= max(25, (5s + 8)/3)", 2, 2, n_lower=n_case1_r2_25))
    add(InequalityCase("eq3.25-phi-b3-at-n-2", cat.phi_b3_at_n_minus_2(), ">", "n >= 25", n_lower=n_25))
    add(InequalityCase("eq3.25-phi-b3-at-23", cat.PHI_B3_AT_23, ">", "n = 25"))
    add(InequalityCase("eq3.25-phi-b3-axis", _axis_margin(6 * a**2 - 4 * a - 3, 1 - a, MultiPoly.const(25)),
                       ">", "n = 25"))

    # Cases 2 and 3: quadratics in s, their axes and their minima
    for family, eqs, polys, mins in (("psi", (28, 29, 30), cat.PSI, cat.PSI_MIN),
                                     ("Phi", (33, 34, 35), cat.PHI, cat.PHI_MIN)):
        for r in range(3):
            poly = polys[r]
            s_min, value = mins[r]
            label = f"eq3.{eqs[r]}-{family}{r + 1}"
            quad_coeffs = poly.coefficients("s")
            add(InequalityCase(f"{label}-axis", _axis_margin(quad_coeffs[1], quad_coeffs[2], MultiPoly.const(s_min)),
                               ">", f"s_min = {s_min}"))
            add(InequalityCase(label, poly, ">", f"s >= {s_min}, s = {r} mod 3", r, s_min))
            add(InequalityCase(f"{label}-at-{s_min}", value, ">", f"s = {s_min}"))
    return c


def _evaluate(case: InequalityCase, alphas, s_max: int, n_span: int) -> InequalityOutcome:
    out = InequalityOutcome(case)
    for sv, nv in case.grid(s_max, n_span):
        vals = {}
        if sv is not None:
            vals["s"] = sv
        if nv is not None:
            vals["n"] = nv
        coeffs = case.expression.subs(vals).coefficients("a") if vals else case.expression.coefficients("a")
        coeffs = [cf.constant_value() if isinstance(cf, MultiPoly) else Fr(cf) for cf in coeffs]
        for al in alphas:
            v = Fr(0)
            for cf in reversed(coeffs):
                v = v * al + cf
            out.points += 1
            if out.minimum is None or v < out.minimum:
                out.minimum = v
            if not case.holds(v):
                out.violations.append(Witness(sv, nv, al, v))
    return out


def inequality_suite(dense: bool = False, only: str | None = None) -> list[InequalityOutcome]:
    """Evaluate every case on its grid; violations are returned, never raised."""
    alphas = DENSE_ALPHA_GRID if dense else ALPHA_GRID
    s_max, n_span = DENSE_CAPS if dense else DEFAULT_CAPS
    cases = inequality_cases()
    if only:
        cases = [c for c in cases if only in c.name]
    return [_evaluate(c, alphas, s_max, n_span) for c in cases]
