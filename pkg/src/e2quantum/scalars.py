"""Exact scalars in Q(i).

Gaussian rationals are stored as a pair of :class:`fractions.Fraction`.
The string form ``"p/q+r/s*i"`` is used by every report and input file.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = ["GaussianRational", "GR", "I", "ZERO", "ONE", "scalar_arith", "parse_scalar"]


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x)
        if isinstance(x, complex):
            raise TypeError("floating-point complex values are not exact")
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")

    # ring operations ---------------------------------------------------

    def __add__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, (int, Rational)):
                return GaussianRational(self.re + other, self.im)
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, (int, Rational)):
                return GaussianRational(self.re - other, self.im)
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, (int, Rational)):
                return GaussianRational(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational(a * c, 0)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational(self.re / other, self.im / other)
        if type(other) is not GaussianRational:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # comparisons -------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    # printing ----------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"GR({format_scalar(self)!r})"


def _fmt_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_scalar(z: GaussianRational) -> str:
    """Canonical string: ``"1/2"``, ``"-i"``, ``"3-2/5*i"``, ``"0"``."""
    re_, im_ = z.re, z.im
    if not im_:
        return _fmt_fraction(re_)
    if im_ == 1:
        ipart = "i"
    elif im_ == -1:
        ipart = "-i"
    else:
        ipart = _fmt_fraction(im_) + "*i"
    if not re_:
        return ipart
    if not ipart.startswith("-"):
        ipart = "+" + ipart
    return _fmt_fraction(re_) + ipart


_RAT = re.compile(r"[+-]?\d+(?:/\d+)?")
_URAT = re.compile(r"\d+(?:/\d+)?")


def _rat(txt: str, whole: str) -> Fraction:
    if not _RAT.fullmatch(txt):
        raise ValueError(f"malformed scalar {whole!r}")
    try:
        return Fraction(txt)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {whole!r}") from None


def parse_scalar(text: str) -> GaussianRational:
    """Inverse of :func:`format_scalar`. Raises ``ValueError`` on malformed input."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    if not s.endswith("i"):
        return GaussianRational(_rat(s, text))
    body = s[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    re_txt, im_txt = (body[:cut], body[cut:]) if cut > 0 else ("", body)
    re_ = _rat(re_txt, text) if re_txt else Fraction(0)
    sign = -1 if im_txt.startswith("-") else 1
    mag = im_txt.lstrip("+-")
    if len(im_txt) - len(mag) > 1:
        raise ValueError(f"malformed scalar {text!r}")
    if mag == "":
        im_ = Fraction(sign)
    elif mag.endswith("*") and _URAT.fullmatch(mag[:-1]):
        im_ = sign * _rat(mag[:-1], text)
    else:
        raise ValueError(f"malformed scalar {text!r}")
    return GaussianRational(re_, im_)


def scalar_arith(x, y, op: str) -> GaussianRational:
    x, y = GaussianRational.coerce(x), GaussianRational.coerce(y)
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


GR = GaussianRational.coerce
ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
