from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from e2quantum.scalars import GaussianRational, I, format_scalar, parse_scalar, scalar_arith

from conftest import gaussians, nonzero_gaussians


def G(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def test_modulus_identity():
    assert scalar_arith(G(Fraction(1, 2), 1), G(Fraction(1, 2), -1), "mul") == G(Fraction(5, 4))


def test_inverse_of_i():
    assert scalar_arith(1, I, "div") == G(0, -1)


def test_rational_addition():
    assert scalar_arith(Fraction(1, 3), Fraction(1, 6), "add") == G(Fraction(1, 2))


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        scalar_arith(1, 0, "div")


def test_unknown_operation():
    with pytest.raises(ValueError):
        scalar_arith(1, 1, "pow")


def test_fractions_are_reduced():
    z = GaussianRational(Fraction(2, 4), Fraction(-6, 9))
    assert (z.re.numerator, z.re.denominator) == (1, 2)
    assert (z.im.numerator, z.im.denominator) == (-2, 3)


@pytest.mark.parametrize(
    "z, text",
    [(G(0), "0"), (G(0, 1), "i"), (G(0, -1), "-i"), (G(Fraction(1, 2)), "1/2"),
     (G(3, Fraction(-2, 5)), "3-2/5*i"), (G(-1, 1), "-1+i")],
)
def test_canonical_format(z, text):
    assert format_scalar(z) == text
    assert parse_scalar(text) == z


@pytest.mark.parametrize("bad", ["", "1/0", "i*2", "abc", "1//2", "--i", "1.5"])
def test_malformed_scalars_rejected(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


@given(gaussians)
def test_format_round_trip(z):
    assert parse_scalar(format_scalar(z)) == z


@given(gaussians, gaussians, gaussians)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == G(0)


@given(nonzero_gaussians, gaussians)
def test_inverses(x, y):
    assert x * x.inverse() == G(1)
    assert (y / x) * x == y


@given(gaussians)
def test_conjugation_is_multiplicative_norm(x):
    n = x * x.conjugate()
    assert n.is_real() and n.re >= 0


@given(gaussians, gaussians)
def test_equality_is_structural(x, y):
    assert (x == y) == ((x.re, x.im) == (y.re, y.im))
    if x == y:
        assert hash(x) == hash(y)


@given(st.integers(-5, 5), nonzero_gaussians)
def test_integer_powers(n, x):
    expected = G(1)
    for _ in range(abs(n)):
        expected = expected * x
    if n < 0:
        expected = expected.inverse()
    assert x ** n == expected
