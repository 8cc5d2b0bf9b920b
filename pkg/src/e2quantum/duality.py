"""Coproduct of U(e(2)) recovered by duality from the quantum group Dprime.

Pairing conventions:

* a generator X of e(2) pairs with a coordinate function through
  ``d/dt f(e^{tX})`` at ``t = 0`` in the 3x3 representation, giving
  ``<P1, eta> = <P1, etabar> = i``, ``<P2, eta> = -1``, ``<P2, etabar> = 1``
  and ``<J, c> = -i``;
* X vanishes on 1 and on every symmetrised (``"weyl"``) or ordered
  (``"pbw"``) monomial of degree >= 2;
* longer words pair through ``<X Y, f> = <X ⊗ Y, Δf>``.

``e^{±ic}`` is replaced by its Taylor polynomial in ``c`` of the requested
degree, which is exact on words of that length because ``c`` is central and
primitive.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations
from math import factorial

from .cocycle import derivative_at_identity
from .hopf import HopfPresentation, builtin_family
from .lie import J, P1, P2
from .linalg import invert_matrix
from .noncomm import NCPolynomial, Normalizer, RewriteSystem
from .polynomial import Poly
from .scalars import GaussianRational, I

__all__ = ["DualityPairing", "DualityError", "DualCoproduct", "derive_dual_coproduct", "generator_pairing"]

ENVELOPING_GENERATORS = ("P1", "P2", "J")
FUNCTION_GENERATORS = ("etabar", "eta", "c")
_INDEX = {"P1": P1, "P2": P2, "J": J}


class DualityError(ValueError):
    pass


def _coordinate_images() -> dict:
    a, b, c = Poly.vars("a b c")
    return {"eta": a + b * I, "etabar": a - b * I, "c": c}


def generator_pairing() -> dict:
    """``<X, f>`` for X in (P1, P2, J) and f in (eta, etabar, c)."""
    coords = _coordinate_images()
    return {
        (x, f): derivative_at_identity(_INDEX[x], coords[f]).to_scalar()
        for x in ENVELOPING_GENERATORS
        for f in FUNCTION_GENERATORS
    }


def _ordered_monomials(gens, degree: int) -> list:
    out = [()]
    for n in range(1, degree + 1):
        out += list(combinations_with_replacement(gens, n))
    return out


class DualityPairing:
    """Pairing between words in P1, P2, J and elements of Dprime."""

    def __init__(self, H: HopfPresentation | None = None, degree: int = 2, convention: str = "weyl"):
        if convention not in ("weyl", "pbw"):
            raise ValueError("convention must be 'weyl' or 'pbw'")
        self.H = H or builtin_family("Dprime")
        self.degree = degree
        self.convention = convention
        self.generators = generator_pairing()
        # Dprime restricted to eta, etabar, c with t = e^{ic} expanded
        rules = {k: v for k, v in self.H.system.rules.items() if set(k) <= set(FUNCTION_GENERATORS)}
        self.system = RewriteSystem(FUNCTION_GENERATORS, rules)
        self.nz = Normalizer(self.system)
        ic = NCPolynomial.gen("c") * I
        self._t = {+1: self._exp(ic), -1: self._exp(-ic)}
        self._functional: dict = {}
        self._pair: dict = {}
        self._delta: dict = {}

    def _exp(self, x: NCPolynomial) -> NCPolynomial:
        out, power = NCPolynomial.one(), NCPolynomial.one()
        for k in range(1, self.degree + 1):
            power = self.nz.product(power, x)
            out = out + power * Poly.const(GaussianRational(1) / factorial(k))
        return out

    def _expand_t(self, p: NCPolynomial) -> NCPolynomial:
        """Substitute the exponentials for t, tbar and normal-order."""
        subst = {"t": self._t[1], "tbar": self._t[-1]}
        out = NCPolynomial.zero(p.legs)
        for key, c in p.terms.items():
            term = NCPolynomial.one(p.legs) * c
            for i, w in enumerate(key):
                leg = NCPolynomial.one()
                for g in w:
                    leg = self.nz.product(leg, subst.get(g, NCPolynomial.gen(g)))
                term = self.nz.product(term, _on_leg(leg, i, p.legs))
            out = out + term
        return out

    def function_coproduct(self, w: tuple) -> NCPolynomial:
        """Δ of a normal word in eta, etabar, c."""
        hit = self._delta.get(w)
        if hit is None:
            hit = NCPolynomial.one(2)
            for g in w:
                hit = self.nz.product(hit, self._expand_t(self.H.coproduct[g]))
            self._delta[w] = hit
        return hit

    def _symmetrised(self, w: tuple) -> NCPolynomial:
        perms = sorted(set(permutations(w)))
        out = NCPolynomial.zero()
        for p in perms:
            out = out + self.nz.normal_form(NCPolynomial.word(p))
        return out * Poly.const(GaussianRational(1) / len(perms))

    def functional(self, x: str, w: tuple) -> Poly:
        """``<x, w>`` for a generator x and a normal word w."""
        key = (x, w)
        hit = self._functional.get(key)
        if hit is not None:
            return hit
        if len(w) == 0:
            val = Poly()
        elif len(w) == 1:
            val = Poly.const(self.generators[(x, w[0])])
        elif self.convention == "pbw":
            val = Poly()
        else:
            # w = W(w) - (W(w) - w); x kills W(w), the remainder has lower degree
            rest = self._symmetrised(w) - NCPolynomial.word(w)
            val = -self.pair_functional(x, rest)
        self._functional[key] = val
        return val

    def pair_functional(self, x: str, f: NCPolynomial) -> Poly:
        out = Poly()
        for (w,), c in f.terms.items():
            v = self.functional(x, w)
            if v:
                out = out + c * v
        return out

    def pair_word(self, u: tuple, w: tuple) -> Poly:
        """``<u, w>`` for a word u in P1, P2, J and a normal word w."""
        key = (u, w)
        hit = self._pair.get(key)
        if hit is not None:
            return hit
        if not u:
            val = Poly.const(1) if not w else Poly()
        elif len(u) == 1:
            val = self.functional(u[0], w)
        else:
            val = Poly()
            for (w1, w2), c in self.function_coproduct(w).terms.items():
                left = self.functional(u[0], w1)
                if left:
                    right = self.pair_word(u[1:], w2)
                    if right:
                        val = val + c * left * right
        self._pair[key] = val
        return val

    def pair(self, u: tuple, f: NCPolynomial) -> Poly:
        out = Poly()
        for (w,), c in self.nz.normal_form(f).terms.items():
            out = out + c * self.pair_word(u, w)
        return out

    def matrix(self):
        us = _ordered_monomials(ENVELOPING_GENERATORS, self.degree)
        ms = _ordered_monomials(FUNCTION_GENERATORS, self.degree)
        return us, ms, [[self.pair_word(u, m) for m in ms] for u in us]


def _on_leg(p: NCPolynomial, i: int, legs: int) -> NCPolynomial:
    out = NCPolynomial.one(i) if i else None
    out = p if out is None else out.tensor(p)
    if legs - i - 1:
        out = out.tensor(NCPolynomial.one(legs - i - 1))
    return out


def _matmul(a, b):
    n, m, k = len(a), len(b), len(b[0])
    return [[sum((a[i][j] * b[j][l] for j in range(m) if a[i][j] and b[j][l]), Poly()) for l in range(k)] for i in range(n)]


def _invert_unipotent(pi, parameter: str, names):
    """Inverse of ``pi`` whose value at parameter = 0 is invertible and whose
    parameter-dependent part is nilpotent relative to it."""
    n = len(pi)
    pi0 = []
    for row in pi:
        r = []
        for x in row:
            x0 = x.subs({parameter: 0})
            if not x0.is_constant():
                raise DualityError(f"pairing entry {x} is not a polynomial in {parameter} alone")
            r.append(x0.to_scalar())
        pi0.append(r)
    try:
        inv0 = invert_matrix(pi0)
    except ValueError:
        null = next((names[i] for i in range(n) if not any(pi0[j][i] for j in range(n))), None)
        raise DualityError(f"pairing is degenerate at this degree (null monomial {null})") from None
    inv0 = [[Poly.const(x) for x in row] for row in inv0]
    m = _matmul(inv0, [[pi[i][j] - Poly.const(pi0[i][j]) for j in range(n)] for i in range(n)])
    # (1 + M)^-1 = sum (-M)^k, finite because M is nilpotent
    total = [[Poly.const(1) if i == j else Poly() for j in range(n)] for i in range(n)]
    power = total
    for _ in range(n + 1):
        power = [[-x for x in row] for row in _matmul(power, m)]
        if not any(x for row in power for x in row):
            return _matmul(total, inv0)
        total = [[total[i][j] + power[i][j] for j in range(n)] for i in range(n)]
    raise DualityError("pairing correction is not nilpotent; the inverse is not polynomial")


@dataclass
class DualCoproduct:
    generator: str
    coproduct: NCPolynomial
    degree: int
    convention: str
    correction_constant: object  # coefficient c with Δ - primitive part ∋ c h (P1⊗P2 - P2⊗P1)

    def first_order(self, parameter: str = "h") -> NCPolynomial:
        return self.coproduct.coefficient(parameter, 1)


def derive_dual_coproduct(
    Hfun: HopfPresentation | None = None, X: str = "J", degree: int = 2, convention: str = "weyl"
) -> DualCoproduct:
    """Solve ``<Δ(X), m1 ⊗ m2> = <X, m1 m2>`` over ordered monomials of
    degree <= ``degree`` and return Δ(X) on the ordered basis of U(e(2))."""
    if X not in ENVELOPING_GENERATORS:
        raise ValueError(f"unknown enveloping generator {X!r}")
    dp = DualityPairing(Hfun, degree, convention)
    param = dp.H.parameter
    us, ms, pi = dp.matrix()
    inv = _invert_unipotent(pi, param, ms)  # rows: function monomials, columns: words
    # dual basis: <dual[i], m_k> = delta_ik
    dual = [{us[j]: inv[i][j] for j in range(len(us)) if inv[i][j]} for i in range(len(ms))]
    out = NCPolynomial.zero(2)
    for i, m1 in enumerate(ms):
        for k, m2 in enumerate(ms):
            val = dp.pair((X,), NCPolynomial.word(m1 + m2))
            if not val:
                continue
            for u1, c1 in dual[i].items():
                for u2, c2 in dual[k].items():
                    out = out + NCPolynomial.word(u1, u2, coeff=val * c1 * c2)
    anti = NCPolynomial.word(("P1",), ("P2",)) - NCPolynomial.word(("P2",), ("P1",))
    first = out.coefficient(param, 1)
    const = None
    key = (("P1",), ("P2",))
    if key in first.terms:
        const = first.terms[key].to_scalar() if first.terms[key].is_constant() else first.terms[key]
    if const is not None and first != anti * Poly.const(const):
        const = None
    return DualCoproduct(X, out, degree, convention, const)
