"""Exact isolation of the largest real root of a low-degree rational polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly, Scalar, univariate_coeffs

DEFAULT_WIDTH = Fraction(1, 2**60)


class NoRealRootError(ValueError):
    pass


@dataclass(frozen=True)
class RootBracket:
    polynomial: MultiPoly
    low: Fraction
    high: Fraction
    width_bound: Fraction

    @property
    def midpoint(self) -> Fraction:
        return (self.low + self.high) / 2

    def __float__(self) -> float:
        return float(self.midpoint)

    def contains(self, value: float) -> bool:
        return float(self.low) <= value <= float(self.high)


# Coefficient lists below are constant term first.

def _horner(c: list[Fraction], v: Fraction) -> Fraction:
    acc = Fraction(0)
    for coef in reversed(c):
        acc = acc * v + coef
    return acc


def _trim(c: list[Fraction]) -> list[Fraction]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _derivative(c: list[Fraction]) -> list[Fraction]:
    return [k * c[k] for k in range(1, len(c))]


def _divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    rem = list(num)
    while len(rem) >= len(den) and rem:
        shift = len(rem) - len(den)
        f = rem[-1] / den[-1]
        quot[shift] = f
        for i, d in enumerate(den):
            rem[shift + i] -= f * d
        rem = _trim(rem)
    return quot, rem


def _gcd(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, _divmod(p, q)[1]
    return [c / p[-1] for c in p]


def squarefree_part(c: list[Fraction]) -> list[Fraction]:
    g = _gcd(c, _derivative(c))
    return _divmod(c, g)[0] if len(g) > 1 else _trim(c)


def sturm_sequence(c: list[Fraction]) -> list[list[Fraction]]:
    seq = [_trim(c), _derivative(_trim(c))]
    while seq[-1] and len(seq[-1]) > 1:
        rem = _divmod(seq[-2], seq[-1])[1]
        if not rem:
            break
        seq.append([-r for r in rem])
    return [p for p in seq if p]


def _sign_changes(seq: list[list[Fraction]], v: Fraction) -> int:
    signs = [_horner(p, v) for p in seq]
    signs = [x for x in signs if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def cauchy_bound(c: list[Fraction]) -> Fraction:
    """``1 + max |c_i / c_lead|``: every real root has absolute value below it."""
    c = _trim(c)
    lead = c[-1]
    return 1 + max((abs(ci / lead) for ci in c[:-1]), default=Fraction(0))


def largest_real_root(p: MultiPoly, width: Scalar = DEFAULT_WIDTH) -> RootBracket:
    """Bracket the largest real root of a univariate polynomial in ``x``.

    The search interval starts at the Cauchy bound (rounded up to a power of
    two so midpoints stay dyadic).  Sturm counts narrow it until exactly one
    root remains, then plain sign bisection finishes the job.
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError("bracket width must be positive")
    coeffs = _trim(univariate_coeffs(p, "x"))
    deg = len(coeffs) - 1
    if deg < 1 or deg > 3:
        raise ValueError(f"largest_real_root handles degrees 1 to 3, got {deg}")
    if deg == 2:
        c0, c1, c2 = coeffs
        if c1 * c1 - 4 * c2 * c0 < 0:
            raise NoRealRootError(f"negative discriminant: {p}")

    q = squarefree_part(coeffs)
    bound = cauchy_bound(q)
    hi = Fraction(1)
    while hi < bound:
        hi *= 2
    lo = -hi
    seq = sturm_sequence(q)
    v_hi = _sign_changes(seq, hi)

    # largest root stays in (lo, hi]
    while True:
        if _sign_changes(seq, lo) - v_hi == 1:
            break
        mid = (lo + hi) / 2
        if _sign_changes(seq, mid) - v_hi >= 1:
            lo = mid
        else:
            hi = mid
            v_hi = _sign_changes(seq, hi)
        if hi - lo <= width:
            return RootBracket(p, lo, hi, width)

    f_lo, f_hi = _horner(q, lo), _horner(q, hi)
    if f_hi == 0:
        return RootBracket(p, hi, hi, width)
    while hi - lo > width:
        mid = (lo + hi) / 2
        f_mid = _horner(q, mid)
        if f_mid == 0:
            return RootBracket(p, mid, mid, width)
        if (f_mid > 0) == (f_hi > 0):
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    return RootBracket(p, lo, hi, width)


def sign_at(p: MultiPoly, value: Scalar) -> int:
    v = _horner(univariate_coeffs(p, "x"), Fraction(value))
    return (v > 0) - (v < 0)
