from fractions import Fraction

import pytest

from newform_whittaker.scalars import TruncSeries, poly_from_inverse_roots
from newform_whittaker.symfunc import complete_h
from newform_whittaker.zeta import lfactor_series, zeta_equals_lfactor, zeta_series

from conftest import random_alpha, random_rational

A = (Fraction(1, 2), Fraction(1, 3), Fraction(0))
half = Fraction(1, 2)


def test_zeta_series_examples():
    assert zeta_series((half, 0), 3).coeffs == (1, half, Fraction(1, 4), Fraction(1, 8))
    assert zeta_series((0, 0, 0), 2).coeffs == (1, 0, 0)
    assert zeta_series(A, 2).coeffs == (1, Fraction(5, 6), Fraction(19, 36))


def test_lfactor_series_examples():
    assert lfactor_series((half, 0), 2).coeffs == (1, half, Fraction(1, 4))
    assert lfactor_series((0, 0), 5).coeffs == (1, 0, 0, 0, 0, 0)
    assert lfactor_series(A, 2).coeffs == (1, Fraction(5, 6), Fraction(19, 36))


def test_lfactor_series_against_product_of_geometric_series(rng):
    for n in range(2, 6):
        xs = random_alpha(rng, n, ramified=False)
        expected = TruncSeries([1], 12)
        for a in xs:
            expected = expected * TruncSeries([a**k for k in range(13)], 12)
        assert lfactor_series(xs, 12) == expected


def test_zeta_equals_lfactor_examples(rng):
    assert zeta_equals_lfactor(A, 30).passed
    a = random_rational(rng, nonzero=True)
    assert zeta_equals_lfactor((a, 0), 20).passed
    report = zeta_equals_lfactor((0, 0, 0), 10)
    assert report.passed and report.zeta.coeffs == (1,) + (0,) * 10


def test_zeta_equals_lfactor_random(rng):
    for n in range(2, 6):
        for ramified in (True, False):
            xs = random_alpha(rng, n, ramified=ramified)
            report = zeta_equals_lfactor(xs, 30)
            assert report.passed, report.first_mismatch


def test_zeta_coefficients_are_complete_homogeneous(rng):
    for n in range(2, 6):
        xs = random_alpha(rng, n)
        z = zeta_series(xs, 15)
        assert list(z.coeffs) == [complete_h(k, xs) for k in range(16)]


def test_denominator_times_zeta_is_one(rng):
    for n in range(2, 6):
        xs = random_alpha(rng, n, ramified=n % 2 == 0)
        z = zeta_series(xs, 30)
        assert TruncSeries(poly_from_inverse_roots(xs), 30) * z == TruncSeries([1], 30)


def test_report_mismatch_is_reported():
    from newform_whittaker.zeta import ZetaReport

    z = TruncSeries([1, 1], 1)
    bad = ZetaReport(1, z, TruncSeries([1, 2], 1), z.first_difference(TruncSeries([1, 2], 1)))
    assert not bad.passed and bad.first_mismatch == 1


def test_order_validation():
    with pytest.raises(ValueError):
        zeta_equals_lfactor(A, 0)
    with pytest.raises(ValueError):
        zeta_series(A, -1)
