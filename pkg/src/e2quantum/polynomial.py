"""Commutative polynomials over Q(i) modulo the circle relation.

A polynomial is a sparse map from monomials to :class:`GaussianRational`.
A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable
name.  Negative exponents are allowed, which makes the same class serve as
a Laurent ring for deformation parameters such as ``q``.

Every variable whose name is ``v`` followed by a suffix is paired with the
variable ``u`` carrying the same suffix (``v``/``u``, ``v_1``/``u_1`` ...).
Products are reduced by ``v**2 -> 1 - u**2`` so the stored form always has
degree at most one in each ``v``.  That is a lex Groebner basis of the
circle ideal, hence equality of reduced forms is equality in the quotient.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping

from .scalars import GaussianRational, ONE, ZERO, format_scalar, parse_scalar

__all__ = [
    "Poly",
    "QuotientPolynomial",
    "canonical_reduce",
    "circle_partner",
    "VAR_ORDER",
]

# display/serialisation order for the group coordinates
VAR_ORDER = ("a", "b", "c", "u", "v", "s")

Monomial = tuple


def circle_partner(var: str) -> str | None:
    """Name of the ``u`` variable that ``var`` squares into, or None."""
    if var.startswith("v") and (len(var) == 1 or var[1] == "_"):
        return "u" + var[1:]
    return None


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for x, e in m2:
        n = d.get(x, 0) + e
        if n:
            d[x] = n
        else:
            del d[x]
    return tuple(sorted(d.items()))


def _needs_reduction(m: Monomial) -> bool:
    for x, e in m:
        if e >= 2 and circle_partner(x) is not None:
            return True
    return False


def _add_into(acc: dict, m: Monomial, c: GaussianRational) -> None:
    old = acc.get(m)
    if old is None:
        acc[m] = c
    else:
        new = old + c
        if new:
            acc[m] = new
        else:
            del acc[m]


def _reduce_into(acc: dict, m: Monomial, c: GaussianRational) -> None:
    """Add ``c*m`` to ``acc`` after rewriting ``v**2 -> 1 - u**2``."""
    if not _needs_reduction(m):
        _add_into(acc, m, c)
        return
    # expand v^(2k+r) = v^r (1 - u^2)^k one circle pair at a time
    for x, e in m:
        part = circle_partner(x)
        if e >= 2 and part is not None:
            k, r = divmod(e, 2)
            rest = dict(m)
            if r:
                rest[x] = 1
            else:
                del rest[x]
            ue = rest.get(part, 0)
            binom = 1
            for j in range(k + 1):
                d = dict(rest)
                n = ue + 2 * j
                if n:
                    d[part] = n
                else:
                    d.pop(part, None)
                sign = -1 if j % 2 else 1
                _reduce_into(acc, tuple(sorted(d.items())), c * (sign * binom))
                binom = binom * (k - j) // (j + 1)
            return


class Poly:
    """Immutable reduced polynomial; see the module docstring."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None, *, _reduced: bool = False):
        if not terms:
            self.terms = {}
        elif _reduced:
            self.terms = terms
        else:
            acc: dict = {}
            for m, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    _reduce_into(acc, tuple(sorted(m)), c)
            self.terms = acc
        self._hash = None

    # constructors ------------------------------------------------------

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "Poly":
        return cls({((name, exp),): ONE})

    @classmethod
    def const(cls, c) -> "Poly":
        c = GaussianRational.coerce(c)
        return cls({(): c}, _reduced=True) if c else cls()

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return cls.const(x)

    @staticmethod
    def vars(names: str | Iterable[str]):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        return tuple(Poly.var(n) for n in names)

    # arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(acc, m, c)
        return Poly(acc, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()}, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = GaussianRational.coerce(c)
        if not c:
            return Poly()
        return Poly({m: v * c for m, v in self.terms.items()}, _reduced=True)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if not self.terms or not other.terms:
            return Poly()
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _reduce_into(acc, _mono_mul(m1, m2), c1 * c2)
        return Poly(acc, _reduced=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.scale(GaussianRational.coerce(other).inverse())

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have negative powers")
            ((m, c),) = self.terms.items()
            return Poly({tuple((x, e * n) for x, e in m): c ** n})
        out, base = Poly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # queries -----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def variables(self) -> set:
        return {x for m in self.terms for x, _ in m}

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((), ZERO)

    def to_scalar(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.constant_term()

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self.terms)
        return max(dict(m).get(var, 0) for m in self.terms)

    def min_degree(self, var: str) -> int:
        return min(dict(m).get(var, 0) for m in self.terms) if self.terms else 0

    def coefficient(self, var: str, k: int) -> "Poly":
        """Coefficient of ``var**k`` as a polynomial in the other variables."""
        acc = {}
        for m, c in self.terms.items():
            d = dict(m)
            if d.get(var, 0) == k:
                d.pop(var, None)
                acc[tuple(sorted(d.items()))] = c
        return Poly(acc, _reduced=True)

    def truncate(self, var: str, order: int) -> "Poly":
        """Drop every term with ``var``-degree above ``order``."""
        if not self.terms:
            return self
        keep = {m: c for m, c in self.terms.items() if dict(m).get(var, 0) <= order}
        if len(keep) == len(self.terms):
            return self
        return Poly(keep, _reduced=True)

    def conjugate(self) -> "Poly":
        """Complex-conjugate the coefficients; variables are treated as real."""
        return Poly({m: c.conjugate() for m, c in self.terms.items()}, _reduced=True)

    # calculus / substitution -----------------------------------------

    def diff(self, var: str) -> "Poly":
        """Formal partial derivative; every variable is independent here."""
        acc: dict = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(var, 0)
            if not e:
                continue
            if e == 1:
                del d[var]
            else:
                d[var] = e - 1
            _reduce_into(acc, tuple(sorted(d.items())), c * e)
        return Poly(acc, _reduced=True)

    def subs(self, mapping: Mapping[str, object]) -> "Poly":
        """Simultaneous substitution of variables by polynomials or scalars."""
        mapping = {k: Poly.coerce(v) for k, v in mapping.items()}
        if not self.variables() & mapping.keys():
            return self
        powers: dict = {}

        def power(x, e):
            key = (x, e)
            if key not in powers:
                if e < 0:
                    powers[key] = mapping[x] ** e
                elif e == 1:
                    powers[key] = mapping[x]
                else:
                    powers[key] = power(x, e - 1) * mapping[x]
            return powers[key]

        out = Poly()
        for m, c in self.terms.items():
            keep = []
            term = Poly.const(c)
            for x, e in m:
                if x in mapping:
                    term = term * power(x, e)
                else:
                    keep.append((x, e))
            if keep:
                term = term * Poly({tuple(keep): ONE})
            out = out + term
        return out

    def rename(self, mapping: Mapping[str, str]) -> "Poly":
        return Poly({tuple((mapping.get(x, x), e) for x, e in m): c for m, c in self.terms.items()})

    # printing / serialisation ----------------------------------------

    def sorted_terms(self, order: Iterable[str] = VAR_ORDER):
        rank = {x: i for i, x in enumerate(order)}

        def key(item):
            m = item[0]
            return (sum(e for _, e in m), [(rank.get(x, len(rank)), x, -e) for x, e in m])

        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(x if e == 1 else f"{x}^{e}" for x, e in m)
            cs = format_scalar(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                if "+" in cs[1:] or "-" in cs[1:]:
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def to_json(self, variables: Iterable[str] = VAR_ORDER) -> list:
        """List of ``{"monomial": [exponents...], "coeff": "p/q+r/s*i"}``."""
        variables = tuple(variables)
        extra = self.variables() - set(variables)
        if extra:
            raise ValueError(f"variables {sorted(extra)} outside serialisation order")
        out = []
        for m, c in self.sorted_terms(variables):
            d = dict(m)
            out.append({"monomial": [d.get(x, 0) for x in variables], "coeff": format_scalar(c)})
        return out

    @classmethod
    def from_json(cls, data: list, variables: Iterable[str] = VAR_ORDER) -> "Poly":
        variables = tuple(variables)
        terms: dict = {}
        for rec in data:
            exps = rec["monomial"]
            if len(exps) != len(variables):
                raise ValueError("exponent vector has wrong length")
            m = tuple(sorted((x, e) for x, e in zip(variables, exps) if e))
            _add_into(terms, m, parse_scalar(rec["coeff"]))
        return cls(terms)


QuotientPolynomial = Poly


def canonical_reduce(p: Poly | Mapping) -> Poly:
    """Normal form modulo ``u**2 + v**2 - 1`` (for every circle pair).

    Accepts an unreduced term map as well, e.g. ``{(("v", 3),): 1}``.
    """
    if isinstance(p, Poly):
        return Poly(dict(p.terms))
    return Poly(p)


def monomials(variables: Iterable[str], degree: int, *, circle: bool = True) -> list:
    """All monomials of total degree ``1..degree``; with ``circle`` the ``v``
    exponents are capped at one so the list is a basis of the quotient."""
    variables = tuple(variables)
    out = []
    for d in range(1, degree + 1):
        for combo in combinations_with_replacement(variables, d):
            m: dict = {}
            for x in combo:
                m[x] = m.get(x, 0) + 1
            if circle and any(e >= 2 and circle_partner(x) for x, e in m.items()):
                continue
            out.append(tuple(sorted(m.items())))
    return out


def fraction(p, q=1) -> GaussianRational:
    return GaussianRational(Fraction(p, q))
