"""Certified series evaluation: enclosures, refinement, rendering, validation."""

from fractions import Fraction

import pytest

from lahbell.dobinski import (
    CertifiedDecimal,
    PrecisionNotReached,
    bell_dobinski,
    lah_bell_dobinski,
)
from lahbell.families import bell_poly, lah_bell_poly
from lahbell.triangles import bell_number, lah_bell_number

EPS20 = Fraction(1, 10**20)


def exact_value(poly, x):
    return poly.evaluate({"x": x}).as_rational()


def test_pinned_example():
    got = lah_bell_dobinski(3, Fraction(1, 2), EPS20)
    assert got.contains(Fraction(37, 8))
    assert got.error_bound <= EPS20
    assert got.decimal().startswith("4.625")
    assert got.series_terms > 0 and got.exp_terms > 0


def test_integer_argument_recovers_numbers():
    for n in range(9):
        got = lah_bell_dobinski(n, 1, Fraction(1, 10**12))
        assert got.contains(lah_bell_number(n))
        gotb = bell_dobinski(n, 1, Fraction(1, 10**12))
        assert gotb.contains(bell_number(n))


@pytest.mark.parametrize("x", [Fraction(1, 2), Fraction(1), Fraction(3)])
def test_enclosures_contain_exact_polynomial_values(x):
    for n in range(9):
        exact_lb = exact_value(lah_bell_poly(n), x)
        got = lah_bell_dobinski(n, x, Fraction(1, 10**12))
        assert got.contains(exact_lb)
        exact_b = exact_value(bell_poly(n), x)
        gotb = bell_dobinski(n, x, Fraction(1, 10**12))
        assert gotb.contains(exact_b)


def test_monotone_refinement():
    exact = exact_value(lah_bell_poly(5), Fraction(3))
    results = [
        lah_bell_dobinski(5, 3, Fraction(1, 10**k)) for k in (5, 10, 20)
    ]
    for got in results:
        assert got.contains(exact)
    assert results[0].error_bound >= results[1].error_bound >= results[2].error_bound
    for coarse, fine in zip(results, results[1:]):
        assert coarse.low <= fine.low and fine.high <= coarse.high


def test_input_validation():
    with pytest.raises(ValueError):
        lah_bell_dobinski(-1, 1, EPS20)
    with pytest.raises(ValueError):
        lah_bell_dobinski(2, 0, EPS20)
    with pytest.raises(ValueError):
        bell_dobinski(2, -1, EPS20)
    with pytest.raises(ValueError):
        bell_dobinski(2, 1, 0)


def test_certificate_invariants_enforced():
    with pytest.raises(ValueError):
        CertifiedDecimal(Fraction(1), Fraction(-1), Fraction(1), 1, 1)
    with pytest.raises(ValueError):
        CertifiedDecimal(Fraction(1), Fraction(1), Fraction(1, 2), 1, 1)


def test_decimal_rendering():
    c = CertifiedDecimal(Fraction(37, 8), Fraction(1, 10**6), Fraction(1, 10**5), 3, 4)
    assert c.guaranteed_digits() == 5
    assert c.decimal() == "4.62500"
    assert c.error_bound_decimal() == "1.00e-6"
    assert c.low == Fraction(37, 8) - Fraction(1, 10**6)
    assert c.high == Fraction(37, 8) + Fraction(1, 10**6)


def test_decimal_rendering_edge_cases():
    wide = CertifiedDecimal(Fraction(1, 3), Fraction(1, 3), Fraction(1), 1, 1)
    assert wide.guaranteed_digits() == 0
    assert wide.decimal() == "0"
    assert wide.error_bound_decimal() == "3.34e-1"
    negative = CertifiedDecimal(Fraction(-5, 4), Fraction(1, 10**3), Fraction(1, 100), 1, 1)
    assert negative.decimal() == "-1.25"
    assert str(negative) == "-1.25 (+/- 1.00e-3)"
    exact = CertifiedDecimal(Fraction(2), Fraction(0), Fraction(1, 100), 1, 1)
    assert exact.decimal() == "2.0"
    assert exact.error_bound_decimal() == "0"


def test_rounded_rendering_stays_within_digit_promise():
    got = lah_bell_dobinski(4, Fraction(1, 2), Fraction(1, 10**8))
    digits = got.guaranteed_digits()
    rendered = Fraction(got.decimal())
    exact = exact_value(lah_bell_poly(4), Fraction(1, 2))
    assert abs(rendered - exact) < Fraction(1, 10**digits)


def test_precision_not_reached_is_an_exception():
    assert issubclass(PrecisionNotReached, Exception)
