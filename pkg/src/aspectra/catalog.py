"""Transcribed polynomials from the extremal-family argument.

Every function returns a :class:`MultiPoly` in ``x, n, s, a`` (and ``t`` where a
floor has been resolved).  Functions taking ``s_`` and ``fl2`` accept the cut
size and ``floor(2s/3)`` as polynomials, so the same transcription can be
instantiated for each residue of ``s`` modulo 3.

These are kept as literal transcriptions; the verification layer compares them
against quantities derived independently from the quotient matrices.
"""

from __future__ import annotations

from fractions import Fraction as Fr

from .algebra import MultiPoly, a, floor_terms, n, s, t, x

one = MultiPoly.const(1)


# -- quotient matrices (entries as displayed) --------------------------------

def b1_matrix(s_=s, fl2=None, fl5=None):
    """3x3 quotient of A_alpha(G_1) on (K_s | middle clique | independents)."""
    if fl2 is None or fl5 is None:
        raise ValueError("b1_matrix needs floor(2s/3) and floor(5s/3)")
    return [
        [a * n - a * s_ + s_ - 1, (1 - a) * (n - fl5 - 1), (1 - a) * (fl2 + 1)],
        [(1 - a) * s_, n + a * s_ - fl5 - 2, MultiPoly()],
        [(1 - a) * s_, MultiPoly(), a * s_],
    ]


def b4_matrix(s_=s, fl2=None):
    return [
        [a * n - a * s_ + s_ - 1, (1 - a) * (fl2 + 2)],
        [(1 - a) * s_, a * s_],
    ]


def b5_matrix(s_=s, fl2=None):
    return [
        [a * n - a * s_ + s_ - 1, (1 - a) * (fl2 + 1)],
        [(1 - a) * s_, a * s_],
    ]


# -- characteristic polynomials ----------------------------------------------

def phi_b1_display(s_=s, fl2=None):
    """Characteristic polynomial of B_1 with floor(2s/3) written as ``fl2``."""
    F = fl2
    c2 = a * n + n + a * s_ - F - 3
    c1 = (a * n**2 + a**2 * s_ * n + a * s_ * n - a * n * F - 2 * a * n - n
          - s_ * F - 2 * a * s_ - s_ + F + 2)
    c0 = (-a**2 * s_ * n**2 + 2 * a**2 * s_ * n * F - 2 * a * s_ * n * F + 3 * a**2 * s_ * n
          - a * s_ * n + s_ * n * F + s_ * n
          - 2 * a**2 * s_**2 * F - a**2 * s_ * F**2 + 3 * a * s_**2 * F + 2 * a * s_ * F**2
          - s_**2 * F - s_ * F**2 - 2 * a**2 * s_**2
          - 3 * a**2 * s_ * F + 3 * a * s_**2 + 5 * a * s_ * F - s_**2 - 3 * s_ * F
          - 2 * a**2 * s_ + 2 * a * s_ - 2 * s_)
    return x**3 - c2 * x**2 + c1 * x + c0


def phi_b1_subcase(r: int):
    """The per-residue expansions of phi_B1, written in ``s`` with rational coefficients."""
    q = Fr(1, 3)
    ni = Fr(1, 9)
    if r == 0:
        return (x**3 - (a * n + n + a * s - 2 * q * s - 3) * x**2
                + (a * n**2 + a**2 * s * n + q * a * s * n - 2 * a * n - n - 2 * q * s**2
                   - 2 * a * s - q * s + 2) * x
                - a**2 * s * n**2 + 4 * q * a**2 * s**2 * n - 4 * q * a * s**2 * n
                + 3 * a**2 * s * n - a * s * n + 2 * q * s**2 * n + s * n - 16 * ni * a**2 * s**3
                + 26 * ni * a * s**3 - 10 * ni * s**3 - 4 * a**2 * s**2 + 19 * q * a * s**2
                - 3 * s**2 - 2 * a**2 * s + 2 * a * s - 2 * s)
    if r == 1:
        return (x**3 - (a * n + n + a * s - 2 * q * s - 7 * q) * x**2
                + (a * n**2 + a**2 * s * n + q * a * s * n - 4 * q * a * n - n - 2 * q * s**2
                   - 2 * a * s + q * s + 4 * q) * x
                - a**2 * s * n**2 + 4 * q * a**2 * s**2 * n - 4 * q * a * s**2 * n
                + 5 * q * a**2 * s * n + q * a * s * n + 2 * q * s**2 * n + q * s * n
                - 16 * ni * a**2 * s**3 + 26 * ni * a * s**3 - 10 * ni * s**3
                - 16 * ni * a**2 * s**2 + 23 * ni * a * s**2 - 13 * ni * s**2
                - 4 * ni * a**2 * s - 4 * ni * a * s - 4 * ni * s)
    if r == 2:
        return (x**3 - (a * n + n + a * s - 2 * q * s - 8 * q) * x**2
                + (a * n**2 + a**2 * s * n + q * a * s * n - 5 * q * a * n - n - 2 * q * s**2
                   - 2 * a * s + 5 * q) * x
                - a**2 * s * n**2 + 4 * q * a**2 * s**2 * n - 4 * q * a * s**2 * n
                + 7 * q * a**2 * s * n - q * a * s * n + 2 * q * s**2 * n + 2 * q * s * n
                - 16 * ni * a**2 * s**3 + 26 * ni * a * s**3 - 10 * ni * s**3
                - 26 * ni * a**2 * s**2 + 40 * ni * a * s**2 - 20 * ni * s**2
                - 10 * ni * a**2 * s + 5 * ni * a * s - 10 * ni * s)
    raise ValueError(f"residue must be 0, 1 or 2, got {r}")


def phi_bstar():
    """Characteristic polynomial of the quotient of K_1 v (K_{n-2} u K_1)."""
    return (x**3 - (a * n + n + a - 3) * x**2 + (a * n**2 + a**2 * n - a * n - n - 2 * a + 1) * x
            - a**2 * n**2 + 3 * a**2 * n - a * n + n - 4 * a**2 + 5 * a - 3)


def phi_b2():
    """s = 3 member of the family: K_3 v (K_{n-6} u 3K_1)."""
    return (x**3 - (a * n + n + 3 * a - 5) * x**2 + (a * n**2 + 3 * a**2 * n - a * n - n - 6 * a - 5) * x
            - 3 * a**2 * n**2 + 21 * a**2 * n - 15 * a * n + 9 * n - 90 * a**2 + 141 * a - 63)


def phi_b3():
    """s = 2 member of the family: K_2 v (K_{n-4} u 2K_1)."""
    return (x**3 - (a * n + n + 2 * a - 4) * x**2 + (a * n**2 + 2 * a**2 * n - a * n - n - 4 * a - 1) * x
            - 2 * a**2 * n**2 + 10 * a**2 * n - 6 * a * n + 4 * n - 28 * a**2 + 42 * a - 20)


def b4_constant(s_=s, fl2=None):
    return (a**2 * s_ * n - a**2 * s_**2 + a * s_**2 - (1 - a)**2 * s_ * fl2
            - 2 * a**2 * s_ + 3 * a * s_ - 2 * s_)


def b5_constant(s_=s, fl2=None):
    return (a**2 * s_ * n - a**2 * s_**2 + a * s_**2 - (1 - a)**2 * s_ * fl2
            - a**2 * s_ + a * s_ - s_)


def quadratic_linear(s_=s):
    """Shared x-coefficient (negated) of phi_B4 and phi_B5."""
    return a * n + s_ - 1


def phi_b4_display(s_=s, fl2=None):
    return x**2 - quadratic_linear(s_) * x + b4_constant(s_, fl2)


def phi_b5_display(s_=s, fl2=None):
    return x**2 - quadratic_linear(s_) * x + b5_constant(s_, fl2)


def closed_form_discriminant(constant):
    """Radicand of the closed forms M and N: (an + s - 1)^2 - 4 * constant."""
    return quadratic_linear() ** 2 - 4 * constant


# -- auxiliary quadratics of Case 1 ------------------------------------------

def f1(v=x):
    return ((6 - 9 * a) * v**2 + (9 * a**2 * n + 3 * a * n - 6 * s - 18 * a - 21) * v
            - 9 * a**2 * n**2 + 3 * a**2 * n * (4 * s + 21) - 3 * a * n * (4 * s + 15) + 3 * n * (2 * s + 9)
            - 2 * a**2 * (8 * s**2 + 42 * s + 135) + a * (26 * s**2 + 135 * s + 423)
            - 10 * s**2 - 57 * s - 189)


def f2(m=n):
    return ((6 - 6 * a) * m**2 + (12 * a**2 * s - 12 * a * s + 27 * a**2 - 3 * a - 42) * m
            - 2 * a**2 * (8 * s**2 + 42 * s + 135) + a * (26 * s**2 + 135 * s + 351)
            - 10 * s**2 - 33 * s - 9)


def f2_at_min():
    """Closed form of f_2 at n = 5s/3 + 3."""
    return Fr(1, 3) * ((12 * s**2 - 9 * s - 567) * a**2 + (-32 * s**2 + 102 * s + 864) * a
                       + 20 * s**2 - 129 * s - 243)


def f2_at_min_alpha_bound():
    """Lower bound of f2_at_min after replacing alpha by its extremes."""
    return Fr(1, 9) * (12 * s**2 - 195 * s + 243)


def f2_at_25():
    return ((-16 * s**2 + 216 * s + 405) * a**2 + (26 * s**2 - 165 * s - 3474) * a
            - 10 * s**2 - 33 * s + 2691)


F2_AT_25_BY_S = {
    6: 1125 * a**2 - 3528 * a + 2133,
    9: 1053 * a**2 - 2853 * a + 1584,
    12: 693 * a**2 - 1710 * a + 855,
}


def g1(v=x):
    return ((6 - 9 * a) * v**2 + (9 * a**2 * n + 3 * a * n - 6 * s - 18 * a - 3) * v
            - 9 * a**2 * n**2 + 3 * a**2 * n * (4 * s + 9) - 3 * a * n * (4 * s + 3) + 3 * n * (2 * s + 3)
            - 4 * a**2 * (4 * s**2 + 8 * s + 9) + a * (26 * s**2 + 49 * s + 45)
            - 10 * s**2 - 23 * s - 27)


def g2(m=n):
    return ((6 - 6 * a) * m**2 + (12 * a**2 * s - 12 * a * s + 9 * a**2 + 3 * a - 18) * m
            - 4 * a**2 * (4 * s**2 + 8 * s + 9) + a * (26 * s**2 + 49 * s + 45)
            - 10 * s**2 - 11 * s + 3)


def g2_at_min():
    """Closed form of g_2 at n = (5s + 7)/3."""
    return Fr(1, 3) * ((12 * s**2 + 33 * s - 45) * a**2 - (32 * s**2 + 62 * s - 58) * a
                       + 20 * s**2 + 17 * s - 19)


def g2_at_min_alpha_bound():
    return Fr(1, 9) * (12 * s**2 - 29 * s - 1)


def h1(v=x):
    return ((6 - 9 * a) * v**2 + (9 * a**2 * n + 3 * a * n - 6 * s - 18 * a - 12) * v
            - 9 * a**2 * n**2 + 3 * a**2 * n * (4 * s + 15) - 3 * a * n * (4 * s + 9) + 6 * n * (s + 3)
            - 2 * a**2 * (8 * s**2 + 29 * s + 63) + a * (26 * s**2 + 92 * s + 189)
            - 10 * s**2 - 40 * s - 90)


def h2(m=n):
    return ((6 - 6 * a) * m**2 + (12 * a**2 * s - 12 * a * s + 18 * a**2 - 30) * m
            - 2 * a**2 * (8 * s**2 + 29 * s + 63) + a * (26 * s**2 + 92 * s + 162)
            - 10 * s**2 - 22 * s)


def h2_at_min():
    """Closed form of h_2 at n = (5s + 8)/3."""
    return Fr(1, 3) * ((12 * s**2 + 12 * s - 234) * a**2 + (-32 * s**2 + 20 * s + 358) * a
                       + 20 * s**2 - 56 * s - 112)


def h2_at_min_alpha_bound():
    return Fr(1, 9) * (12 * s**2 - 112 * s + 68)


def h2_at_25():
    return ((-16 * s**2 + 242 * s + 324) * a**2 + (26 * s**2 - 208 * s - 3588) * a
            - 10 * s**2 - 22 * s + 3000)


H2_AT_25_BY_S = {
    5: 1134 * a**2 - 3978 * a + 2640,
    8: 1236 * a**2 - 3588 * a + 2184,
}


def phi_b2_at_n_minus_2():
    return (2 - 2 * a) * n**2 + (15 * a**2 - 11 * a - 6) * n - 90 * a**2 + 141 * a - 41


PHI_B2_AT_23 = 285 * a**2 - 1384 * a + 1059


def phi_b3_at_n_minus_2():
    return (1 - a) * n**2 + (6 * a**2 - 4 * a - 3) * n - 28 * a**2 + 42 * a - 10


PHI_B3_AT_23 = 122 * a**2 - 683 * a + 540


# -- Cases 2 and 3: discriminant comparisons ---------------------------------

def gap_square(constant):
    """(2(n-2) - an - s + 1)^2 - (an + s - 1)^2 + 4 * constant."""
    return (2 * (n - 2) - a * n - s + 1) ** 2 - quadratic_linear() ** 2 + 4 * constant


def case2_gap_expanded(fl2=None):
    return ((4 - 4 * a) * n**2 + (4 * a**2 * s - 4 * s + 8 * a - 12) * n - 4 * a**2 * s**2
            + 4 * a * s**2 - 4 * (1 - a)**2 * s * fl2 - 8 * a**2 * s + 12 * a * s + 8)


def case3_gap_expanded(fl2=None):
    return ((4 - 4 * a) * n**2 + (4 * a**2 * s - 4 * s + 8 * a - 12) * n - 4 * a**2 * s**2
            + 4 * a * s**2 - 4 * (1 - a)**2 * s * fl2 - 4 * a**2 * s + 4 * a * s + 4 * s + 8)


PSI = {
    0: (4 - 4 * a) * s**2 - (3 * a + 3) * s,
    1: (4 - 4 * a) * s**2 + (5 * a - 11) * s + 8 * a - 2,
    2: (4 - 4 * a) * s**2 + (a - 7) * s + 5 * a - 2,
}

PHI = {
    0: (4 - 4 * a) * s**2 + (9 * a - 15) * s + 9 * a,
    1: (4 - 4 * a) * s**2 + (17 * a - 23) * s + 5 * a + 10,
    2: (4 - 4 * a) * s**2 + (13 * a - 19) * s + 8 * a + 4,
}

# smallest admissible s per residue and the displayed value there
PSI_MIN = {
    0: (15, 9 * (95 - 105 * a)),
    1: (16, 18 * (47 - 52 * a)),
    2: (14, 9 * (76 - 85 * a)),
}

PHI_MIN = {
    0: (15, 9 * (75 - 84 * a)),
    1: (16, 9 * (74 - 83 * a)),
    2: (17, 9 * (93 - 103 * a)),
}


def residue_form(p: MultiPoly, r: int) -> MultiPoly:
    """Rewrite ``p`` under ``s = 3t + r``."""
    s_r, _, _ = floor_terms(r)
    return p.subs({"s": s_r})


def family_order(r: int, offset: int) -> MultiPoly:
    """``floor(5s/3) + offset`` written in ``t`` for residue ``r``."""
    return floor_terms(r)[2] + offset
