from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from e2quantum.polynomial import Poly
from e2quantum.scalars import GaussianRational
from e2quantum.series import TruncatedSeries, series_cosh, series_exp, series_sinh

from conftest import gaussians


def series(coeffs, order=5, parameter="h"):
    return TruncatedSeries(parameter, order, coeffs)


series_st = st.lists(gaussians, min_size=1, max_size=6).map(series)
nilpotent_st = st.lists(gaussians, min_size=1, max_size=5).map(lambda cs: series([GaussianRational(0)] + cs))


def test_exp_taylor_coefficients():
    x = TruncatedSeries.monomial("h", 3, Fraction(1))
    assert series_exp(x).coeffs == (1, 1, Fraction(1, 2), Fraction(1, 6))


def test_exp_of_zero():
    assert series_exp(series([GaussianRational(0)])) == series([GaussianRational(1)])


def test_exp_group_law():
    x = series([0, 2, -1, 3], order=6)
    assert series_exp(x) * series_exp(-x) == series([1], order=6)


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(series([1, 1]))


def test_polynomial_coefficients():
    P = Poly.var("P")
    x = TruncatedSeries.monomial("k", 3, P * 2)
    sh = series_sinh(x)
    assert sh[1] == P * 2 and sh[3] == P ** 3 * Fraction(8, 6)
    assert series_cosh(x)[2] == P * P * 2


def test_non_invertible():
    with pytest.raises(ZeroDivisionError):
        series([0, 1]).inverse()


def test_mismatched_parameters():
    with pytest.raises(ValueError):
        series([1], parameter="h") + series([1], parameter="k")


def test_shift_down():
    assert series([0, 0, 1, 2]).shift_down(2) == series([1, 2], order=3)
    with pytest.raises(ValueError):
        series([0, 1]).shift_down(2)


@given(series_st, series_st, series_st)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(series_st, series_st, st.integers(0, 5))
def test_truncation_is_homomorphism(x, y, m):
    assert (x * y).truncate(m) == x.truncate(m) * y.truncate(m)
    assert (x + y).truncate(m) == x.truncate(m) + y.truncate(m)


@given(series_st)
def test_inverse(x):
    if x[0]:
        assert x * x.inverse() == series([1])


@given(nilpotent_st, nilpotent_st)
def test_exp_homomorphism(x, y):
    assert series_exp(x + y) == series_exp(x) * series_exp(y)


@given(nilpotent_st)
def test_cosh_sinh_identity(x):
    assert series_cosh(x) * series_cosh(x) - series_sinh(x) * series_sinh(x) == series([1])
