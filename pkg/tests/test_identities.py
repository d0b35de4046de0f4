from fractions import Fraction

import pytest

from aspectra import catalog as cat
from aspectra.algebra import MultiPoly
from aspectra.verify.identities import (TranscriptionError, build_phi_b1, floors_in_s, identity_cases,
                                        identity_suite, transcription_audit)


def test_transcription_audit_passes():
    results = transcription_audit()
    assert len(results) == 15
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]


def test_catalogue_size_and_unique_names():
    names = [c.name for c in identity_cases()]
    assert len(names) == 56 and len(set(names)) == 56


def test_identity_suite_passes():
    failed = [(r.name, r.counterexample) for r in identity_suite() if not r.passed]
    assert failed == []


def test_only_filter():
    res = identity_suite("o-eq3.26")
    assert res and all(r.name.startswith("o-eq3.26") for r in res)
    assert identity_suite("no-such-case") == []


@pytest.mark.parametrize("r, two, five", [(0, (0, Fraction(2, 3)), (0, Fraction(5, 3))),
                                          (1, (Fraction(-2, 3), Fraction(2, 3)), (Fraction(-2, 3), Fraction(5, 3))),
                                          (2, (Fraction(-1, 3), Fraction(2, 3)), (Fraction(-1, 3), Fraction(5, 3)))])
def test_floors_as_linear_polynomials(r, two, five):
    fl2, fl5 = floors_in_s(r)
    for poly, (c0, c1) in ((fl2, two), (fl5, five)):
        coeffs = poly.coefficients("s")
        assert [x.constant_value() for x in coeffs] == [c0, c1]
    for t in range(6):
        sv = 3 * t + r
        assert fl2.evaluate({"s": sv}) == (2 * sv) // 3
        assert fl5.evaluate({"s": sv}) == (5 * sv) // 3


def test_spot_evaluation_of_f1_difference():
    """Case (c) at s = 6, n = 25, alpha = 1/3, x = 7, checked from both sides and from the numeric quotient."""
    case = next(c for c in identity_cases() if c.name == "c-eq3.6-f1-difference")
    point = {"x": 7, "n": 25, "t": 2, "a": Fraction(1, 3)}
    lhs, rhs = case.lhs.evaluate(point), case.rhs.evaluate(point)
    assert lhs == rhs
    # independent route: det(xI - B1) from the integer quotient entries
    s, fl2, fl5 = 6, 4, 10
    b1 = cat.b1_matrix(MultiPoly.const(s), MultiPoly.const(fl2), MultiPoly.const(fl5))
    m = [[e.evaluate({"n": 25, "a": Fraction(1, 3)}) for e in row] for row in b1]
    x = Fraction(7)
    xm = [[(x if i == j else 0) - m[i][j] for j in range(3)] for i in range(3)]
    det = (xm[0][0] * (xm[1][1] * xm[2][2] - xm[1][2] * xm[2][1])
           - xm[0][1] * (xm[1][0] * xm[2][2] - xm[1][2] * xm[2][0])
           + xm[0][2] * (xm[1][0] * xm[2][1] - xm[1][1] * xm[2][0]))
    b2 = cat.phi_b2().evaluate({"x": 7, "n": 25, "a": Fraction(1, 3)})
    assert det - b2 == lhs


def test_build_phi_b1_rejects_bad_residue():
    with pytest.raises((ValueError, KeyError, TranscriptionError)):
        build_phi_b1(3)
