"""Truncated power series in one deformation parameter.

Coefficients may be any ring elements that support ``+``, ``*`` and
multiplication by a :class:`~fractions.Fraction` (scalars, :class:`Poly`,
noncommutative polynomials).  The parameter itself commutes with everything.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

__all__ = ["TruncatedSeries", "series_exp", "series_sinh", "series_cosh"]


class TruncatedSeries:
    __slots__ = ("parameter", "order", "coeffs")

    def __init__(self, parameter: str, order: int, coeffs):
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = list(coeffs)[: order + 1]
        if not coeffs:
            raise ValueError("at least the constant coefficient is required")
        zero = coeffs[0] * 0
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.parameter = parameter
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, parameter: str, order: int, coeff, power: int = 1) -> "TruncatedSeries":
        """``coeff * parameter**power``."""
        zero = coeff * 0
        cs = [zero] * (order + 1)
        if power <= order:
            cs[power] = coeff
        return cls(parameter, order, cs)

    def _check(self, other: "TruncatedSeries"):
        if self.parameter != other.parameter:
            raise ValueError(f"parameter mismatch: {self.parameter} vs {other.parameter}")
        return min(self.order, other.order)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._check(other)
            return TruncatedSeries(self.parameter, n, [self[k] + other[k] for k in range(n + 1)])
        cs = list(self.coeffs)
        cs[0] = cs[0] + other
        return TruncatedSeries(self.parameter, self.order, cs)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.parameter, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._check(other)
            out = []
            for k in range(n + 1):
                acc = self[0] * other[k]
                for j in range(1, k + 1):
                    acc = acc + self[j] * other[k - j]
                out.append(acc)
            return TruncatedSeries(self.parameter, n, out)
        return TruncatedSeries(self.parameter, self.order, [c * other for c in self.coeffs])

    def __rmul__(self, other):
        if isinstance(other, TruncatedSeries):
            return other.__mul__(self)
        return TruncatedSeries(self.parameter, self.order, [other * c for c in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = TruncatedSeries(self.parameter, self.order, [self[0] * 0 + 1])
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        a0 = self[0]
        if not a0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a0
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = self[1] * out[k - 1]
            for j in range(2, k + 1):
                acc = acc + self[j] * out[k - j]
            out.append(-(inv0 * acc))
        return TruncatedSeries(self.parameter, self.order, out)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the order of a truncated series")
        return TruncatedSeries(self.parameter, order, self.coeffs[: order + 1])

    def map(self, fn) -> "TruncatedSeries":
        return TruncatedSeries(self.parameter, self.order, [fn(c) for c in self.coeffs])

    def shift_down(self, k: int = 1) -> "TruncatedSeries":
        """Divide by ``parameter**k``; the lowest ``k`` coefficients must vanish.
        The result loses ``k`` orders of precision."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by {self.parameter}^{k}")
        return TruncatedSeries(self.parameter, self.order - k, self.coeffs[k:])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.parameter, self.order, self.coeffs) == (other.parameter, other.order, other.coeffs)

    def __hash__(self):
        return hash((self.parameter, self.order, self.coeffs))

    def __repr__(self):
        terms = [f"({c})*{self.parameter}^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"TruncatedSeries[{self.order}](" + (" + ".join(terms) or "0") + ")"


def series_exp(x: TruncatedSeries) -> TruncatedSeries:
    """``sum_{k<=N} x**k / k!``; the constant term of ``x`` must vanish."""
    if x[0]:
        raise ValueError("series_exp needs a vanishing constant term")
    one = x[0] + 1
    out = TruncatedSeries(x.parameter, x.order, [one])
    power = out
    for k in range(1, x.order + 1):
        power = power * x
        out = out + power * Fraction(1, factorial(k))
    return out


def series_sinh(x: TruncatedSeries) -> TruncatedSeries:
    e, f = series_exp(x), series_exp(-x)
    return (e - f) * Fraction(1, 2)


def series_cosh(x: TruncatedSeries) -> TruncatedSeries:
    e, f = series_exp(x), series_exp(-x)
    return (e + f) * Fraction(1, 2)
