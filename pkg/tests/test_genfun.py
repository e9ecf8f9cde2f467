"""Generating-function tests.

Claims covered:
- pattern_gf reproduces the transfer series exactly for every proper class
  of length up to 10, and blockless classes keep the two-term denominator
  1 -+ t^2.
- frozen closed forms: the alternating-over-all-ones class at n=6 gives
  -t^2/(1+t^2); the one-block class 101110/111111 gives
  t^2(1 - t - t^3)/((t^2+1)(t^3-1)) with a 12-periodic tail.
- cylinder_gf matches the golden reduced forms (numerator coefficients and
  cyclotomic denominators) for n = 2..12, and its series prefix equals the
  raw column series; n = 14 is covered when HARDSQUARES_EXTENDED=1.
- the built-in cross-check against a fitted recurrence runs by default;
  invalid circumferences are rejected with the documented errors.
- fitted_cylinder_gf recovers the frozen odd-circumference forms: n=3 and
  n=9 share (1-2t+t^2)/(1-t^3), n=5 and n=7 are the constant series.
- check_roots_of_unity accepts every even cylinder denominator through 12
  and rejects a denominator with a root off the unit circle.
- conjectured_denominator builds the frozen products, clears all poles for
  n in {2,6,8,10,12}, and fails for n=4, whose series has a double pole at
  -1 but the proposed product only a simple zero there.
- periodicity reports: periods 4, 12, 56 at n = 2, 6, 10 with squarefree
  denominators; no period and multiplicity exactly 2 at n = 4, 8, 12.
- the structural denominator bound derived from stone-arrangement cycle
  lengths covers every proper class of length up to 10.
"""

import os

import pytest

from hardsquares.errors import ConsistencyError, ResourceLimitError
from hardsquares.genfun import (
    check_block_count_denominator,
    check_denominator_form,
    check_roots_of_unity,
    conjectured_denominator,
    cylinder_gf,
    denominator_bound,
    fitted_cylinder_gf,
    pattern_gf,
    periodicity_report,
)
from hardsquares.graphs import column_series
from hardsquares.patterns import (
    block_count,
    canonicalize,
    enumerate_proper,
    parse_pattern,
    z_pattern_series,
)
from hardsquares.polynomials import (
    IntPoly,
    ONE,
    RationalGF,
    T,
    factor_cyclotomic,
    series_expand,
)

from helpers import load_reduced_forms

EXTENDED = os.environ.get("HARDSQUARES_EXTENDED") == "1"


def test_pattern_gf_matches_transfer_series():
    for n in (2, 4, 6, 8, 10):
        for cls in enumerate_proper(n):
            gf = pattern_gf(cls)
            upto = gf.num.degree + gf.den.degree + 8
            assert series_expand(gf, upto) == z_pattern_series(cls.canonical, upto)


def test_pattern_gf_frozen_forms():
    alternating = parse_pattern("010101 / 111111")
    assert pattern_gf(alternating) == RationalGF(IntPoly((0, 0, -1)),
                                                 IntPoly((1, 0, 1)))
    one_block = parse_pattern("101110 / 111111")
    gf = pattern_gf(one_block)
    assert gf == RationalGF(IntPoly((0, 0, 1, -1, 0, -1)),
                            IntPoly((-1, 0, -1, 1, 0, 1)))
    # denominator (t^2+1)(t^3-1) divides 1 - t^12: the tail is 12-periodic
    assert gf.den.divides(ONE - T ** 12)


def test_blockless_denominators():
    for n in (2, 4, 6, 8, 10):
        two_term = ONE - T ** 2 if (n // 2) % 2 == 0 else ONE + T ** 2
        for cls in enumerate_proper(n, mu=0):
            assert pattern_gf(cls).den.divides(two_term)


def test_cylinder_gf_matches_golden_reduced_forms():
    table = load_reduced_forms()
    sizes = (2, 4, 6, 8, 10, 12) + ((14,) if EXTENDED else ())
    for n in sizes:
        gf = cylinder_gf(n, bound=14)
        num, factors = table[n]
        assert gf.num == num, n
        got_factors, remainder = factor_cyclotomic(gf.den)
        assert got_factors == factors and remainder == ONE, n


def test_cylinder_gf_series_prefix_is_column_series():
    for n in (2, 4, 6, 8):
        assert series_expand(cylinder_gf(n), 24) == column_series(n, 24)


def test_cylinder_gf_validation():
    with pytest.raises(ValueError):
        cylinder_gf(7)
    with pytest.raises(ValueError):
        cylinder_gf(0)
    with pytest.raises(ResourceLimitError):
        cylinder_gf(14)  # default bound is 12


def test_fitted_route_odd_circumference():
    three = fitted_cylinder_gf(3)
    assert three == RationalGF(IntPoly((1, -2, 1)), IntPoly((1, 0, 0, -1)))
    assert fitted_cylinder_gf(9) == three
    constant = RationalGF(ONE, ONE - T)
    assert fitted_cylinder_gf(5) == constant
    assert fitted_cylinder_gf(7) == constant
    # the fitted and exact routes agree where both apply
    assert fitted_cylinder_gf(6) == cylinder_gf(6)


def test_roots_of_unity_checker():
    for n in (2, 4, 6, 8, 10, 12):
        assert check_roots_of_unity(cylinder_gf(n))
    assert not check_roots_of_unity(RationalGF(ONE, ONE - T * 2))


def test_conjectured_denominator_frozen_products():
    assert conjectured_denominator(2) == ONE + T ** 2
    assert conjectured_denominator(4) == ONE - T ** 2
    assert conjectured_denominator(6) == (ONE + T ** 2) * (ONE - T ** 6)
    assert conjectured_denominator(8) == (ONE - T ** 2) * (ONE - T ** 10)
    assert conjectured_denominator(10) == (
        (ONE + T ** 2) * (ONE - T ** 14) * (ONE - T ** 8))
    assert conjectured_denominator(12) == (
        (ONE - T ** 2) * (ONE - T ** 18) * (ONE - T ** 12))
    with pytest.raises(ValueError):
        conjectured_denominator(5)


def test_denominator_form_holds_except_four():
    for n in (2, 6, 8, 10, 12):
        assert check_denominator_form(n), n
    # The n=4 series has denominator Phi_1 * Phi_2^2 (a double pole at -1)
    # while the proposed product degenerates to 1 - t^2, which vanishes only
    # simply at -1, so it cannot clear the pole.
    assert not check_denominator_form(4)


def test_periodicity_reports():
    for n, period in ((2, 4), (6, 12), (10, 56)):
        report = periodicity_report(n)
        assert report.max_multiplicity == 1
        assert report.remainder_ok
        assert report.period == period
    for n in (4, 8, 12):
        report = periodicity_report(n)
        assert report.period is None
        assert report.max_multiplicity == 2
    if EXTENDED:
        assert periodicity_report(14, gf=cylinder_gf(14, bound=14)).period == 880


def test_periodic_tail_values():
    for n, period in ((2, 4), (6, 12)):
        gf = cylinder_gf(n)
        coeffs = series_expand(gf, gf.num.degree + 2 * period + 1)
        tail_start = gf.num.degree + 1
        for m in range(tail_start, tail_start + period):
            assert coeffs[m] == coeffs[m + period]


def test_block_count_denominator_bound():
    for n in (4, 6, 8, 10):
        for cls in enumerate_proper(n):
            assert check_block_count_denominator(cls), str(cls.canonical)
    # the bound itself: blockless level only contributes the two-term factor
    assert denominator_bound(6, 0) == ONE + T ** 2
