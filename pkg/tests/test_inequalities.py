from fractions import Fraction

import pytest

from aspectra import catalog as cat
from aspectra.verify.inequalities import ALPHA_GRID, DENSE_ALPHA_GRID, inequality_cases, inequality_suite


def test_alpha_grids():
    assert ALPHA_GRID[0] == 0 and ALPHA_GRID[-1] == Fraction(13, 20)
    assert max(DENSE_ALPHA_GRID) < Fraction(2, 3) and len(DENSE_ALPHA_GRID) == 40


def test_suite_passes():
    outcomes = inequality_suite()
    assert len(outcomes) == 58
    bad = [(o.name, o.violations[:1]) for o in outcomes if not o.passed]
    assert bad == []
    assert all(o.points > 0 for o in outcomes)


def _psi(r, s, a):
    # written out by hand, one residue at a time
    return [4 * s * s * (1 - a) - 3 * s * a - 3 * s,
            4 * s * s * (1 - a) + 5 * s * a - 11 * s + 8 * a - 2,
            4 * s * s * (1 - a) + s * a - 7 * s + 5 * a - 2][r]


def _phi(r, s, a):
    return [4 * s * s * (1 - a) + 9 * s * a - 15 * s + 9 * a,
            4 * s * s * (1 - a) + 17 * s * a - 23 * s + 5 * a + 10,
            4 * s * s * (1 - a) + 13 * s * a - 19 * s + 8 * a + 4][r]


@pytest.mark.parametrize("r", range(3))
def test_quoted_minimum_values(r):
    a = Fraction(2, 7)
    for table, mins, fn in ((cat.PSI, cat.PSI_MIN, _psi), (cat.PHI, cat.PHI_MIN, _phi)):
        s_min, value = mins[r]
        assert s_min % 3 == r
        assert table[r].evaluate({"s": s_min, "a": a}) == fn(r, s_min, a) == value.evaluate({"a": a})


def test_quoted_psi_phi_constants():
    assert cat.PSI_MIN[0][1].evaluate({"a": 0}) == 855
    assert cat.PSI_MIN[1][1].evaluate({"a": 0}) == 846
    assert cat.PSI_MIN[2][1].evaluate({"a": 0}) == 684
    assert cat.PHI_MIN[0][1].evaluate({"a": 0}) == 675
    assert cat.PHI_MIN[1][1].evaluate({"a": 0}) == 666
    assert cat.PHI_MIN[2][1].evaluate({"a": 0}) == 837


def test_weak_and_strict_claims_are_labelled():
    claims = {c.name: c.claim for c in inequality_cases()}
    assert claims["eq3.11-weak"] == ">=" and claims["eq3.23-weak"] == ">="
    assert claims["eq3.17-strict"] == ">"


def test_only_filter():
    res = inequality_suite(only="psi1")
    assert res and all("psi1" in o.name for o in res)


@pytest.mark.slow
def test_dense_grid_passes():
    assert all(o.passed for o in inequality_suite(dense=True))
