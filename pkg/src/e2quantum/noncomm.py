"""Noncommutative polynomials, tensor powers of them, and PBW normal forms.

An :class:`NCPolynomial` with ``legs = n`` is an element of the n-fold tensor
power of a free algebra: its terms map an n-tuple of words (tuples of
generator names) to a :class:`Poly` coefficient.  Coefficients carry the
deformation parameters as ordinary commuting variables.

A :class:`RewriteSystem` orders the generators and rewrites every descending
pair ``x y`` (``x`` later than ``y``) to a right-hand side; listed inverse
pairs ``t tbar`` and ``tbar t`` rewrite to 1.  A :class:`Normalizer` does
the actual reduction and owns the memo tables, so each task can use its own.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .polynomial import Poly
from .scalars import GaussianRational
from .verdict import Verdict

__all__ = ["NCPolynomial", "RewriteSystem", "Normalizer", "normal_form", "check_local_confluence"]

_ONE = Poly.const(1)


def _coerce_coeff(c) -> Poly:
    if isinstance(c, Poly):
        return c
    if isinstance(c, (int, Fraction, GaussianRational)):
        return Poly.const(c)
    raise TypeError(f"unsupported coefficient {c!r}")


class NCPolynomial:
    """Finite sum of ``coefficient * word_1 ⊗ ... ⊗ word_legs``."""

    __slots__ = ("legs", "terms")

    def __init__(self, terms=None, legs: int = 1):
        self.legs = legs
        acc = {}
        for key, c in (terms or {}).items():
            if len(key) != legs:
                raise ValueError(f"term {key!r} does not have {legs} legs")
            c = _coerce_coeff(c)
            if c:
                key = tuple(tuple(w) for w in key)
                prev = acc.get(key)
                c = c if prev is None else prev + c
                if c:
                    acc[key] = c
                else:
                    acc.pop(key, None)
        self.terms = acc

    @classmethod
    def gen(cls, name: str) -> "NCPolynomial":
        return cls({((name,),): _ONE})

    @classmethod
    def word(cls, *words, coeff=1) -> "NCPolynomial":
        """``coeff * words[0] ⊗ words[1] ⊗ ...``; a word is a sequence of names."""
        return cls({tuple(tuple(w) for w in words): coeff}, legs=len(words))

    @classmethod
    def scalar(cls, c, legs: int = 1) -> "NCPolynomial":
        return cls({((),) * legs: c}, legs=legs)

    @classmethod
    def one(cls, legs: int = 1) -> "NCPolynomial":
        return cls.scalar(1, legs)

    @classmethod
    def zero(cls, legs: int = 1) -> "NCPolynomial":
        return cls({}, legs=legs)

    # arithmetic -------------------------------------------------------

    def _lift(self, other) -> "NCPolynomial":
        if isinstance(other, NCPolynomial):
            if other.legs != self.legs:
                raise ValueError("tensor rank mismatch")
            return other
        return NCPolynomial.scalar(other, self.legs)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return NCPolynomial._raw(out, self.legs)

    __radd__ = __add__

    def __neg__(self):
        return NCPolynomial._raw({k: -c for k, c in self.terms.items()}, self.legs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Concatenation product (no normal ordering) or scalar multiple."""
        if isinstance(other, NCPolynomial):
            if other.legs != self.legs:
                raise ValueError("tensor rank mismatch")
            out = {}
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    k = tuple(a + b for a, b in zip(k1, k2))
                    out[k] = out.get(k, Poly()) + c1 * c2
            return NCPolynomial(out, self.legs)
        c = _coerce_coeff(other)
        return NCPolynomial._raw({k: v * c for k, v in self.terms.items() if v * c}, self.legs)

    def __rmul__(self, other):
        if isinstance(other, NCPolynomial):
            return other.__mul__(self)
        return self.__mul__(other)

    @classmethod
    def _raw(cls, terms: dict, legs: int) -> "NCPolynomial":
        obj = cls.__new__(cls)
        obj.legs = legs
        obj.terms = terms
        return obj

    def tensor(self, other: "NCPolynomial") -> "NCPolynomial":
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = c1 * c2
        return NCPolynomial(out, self.legs + other.legs)

    def permute(self, perm) -> "NCPolynomial":
        """Leg ``perm[i]`` of the input becomes leg ``i`` of the output."""
        return NCPolynomial._raw(
            {tuple(k[p] for p in perm): c for k, c in self.terms.items()}, self.legs
        )

    def flip(self) -> "NCPolynomial":
        if self.legs != 2:
            raise ValueError("flip needs exactly two legs")
        return self.permute((1, 0))

    def map_coeffs(self, fn) -> "NCPolynomial":
        return NCPolynomial({k: fn(c) for k, c in self.terms.items()}, self.legs)

    def coefficient(self, var: str, k: int) -> "NCPolynomial":
        """Coefficient of ``var**k`` in every term."""
        return self.map_coeffs(lambda c: c.coefficient(var, k))

    def truncate(self, var: str, order: int) -> "NCPolynomial":
        return self.map_coeffs(lambda c: c.truncate(var, order))

    def subs(self, mapping) -> "NCPolynomial":
        return self.map_coeffs(lambda c: c.subs(mapping))

    # queries ----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, NCPolynomial):
            try:
                other = self._lift(other)
            except TypeError:
                return NotImplemented
        return self.legs == other.legs and self.terms == other.terms

    def __hash__(self):
        return hash((self.legs, frozenset(self.terms.items())))

    def generators(self) -> set:
        return {g for k in self.terms for w in k for g in w}

    def max_word_length(self) -> int:
        return max((sum(len(w) for w in k) for k in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kc: (sum(len(w) for w in kc[0]), kc[0]))

    def to_json(self) -> list:
        return [
            {"words": [list(w) for w in k], "coeff": str(c)} for k, c in self.sorted_terms()
        ]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            legs = " ⊗ ".join("*".join(w) if w else "1" for w in k) if k else ""
            cs = str(c)
            if len(c.terms) > 1:
                cs = f"({cs})"
            if not legs:
                parts.append(cs)
            elif c == 1:
                parts.append(legs)
            elif c == -1:
                parts.append(f"-{legs}")
            else:
                parts.append(f"{cs}*{legs}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"NCPolynomial[{self.legs}]({self})"


class RewriteSystem:
    """Ordered generators, pair rules ``x y -> rhs`` for descending pairs,
    inverse pairs, and an optional truncation ``{variable: max degree}``."""

    def __init__(self, generators, rules: dict, inverse_pairs=(), truncation: dict | None = None):
        self.generators = tuple(generators)
        self.rank = {g: i for i, g in enumerate(self.generators)}
        if len(self.rank) != len(self.generators):
            raise ValueError("duplicate generator")
        self.rules = {}
        for (x, y), rhs in rules.items():
            if x not in self.rank or y not in self.rank:
                raise ValueError(f"rule {x}*{y} uses an unknown generator")
            if self.rank[x] <= self.rank[y]:
                raise ValueError(f"rule {x}*{y} is not a descending pair")
            if not isinstance(rhs, NCPolynomial):
                rhs = NCPolynomial.scalar(rhs)
            if rhs.legs != 1:
                raise ValueError("rule right-hand sides must have one leg")
            self.rules[(x, y)] = rhs
        self.inverse_pairs = set()
        for t, tb in inverse_pairs:
            self.inverse_pairs.add((t, tb))
            self.inverse_pairs.add((tb, t))
        self.truncation = dict(truncation or {})

    def truncate(self, c: Poly) -> Poly:
        for var, n in self.truncation.items():
            c = c.truncate(var, n)
        return c

    def rewrite_at(self, word: tuple, pos: int):
        """One-step rewrite of ``word[pos:pos+2]``, or ``None`` if it is normal."""
        pair = word[pos : pos + 2]
        head, tail = word[:pos], word[pos + 2 :]
        if pair in self.inverse_pairs:
            return NCPolynomial.word(head + tail)
        rhs = self.rules.get(pair)
        if rhs is None:
            return None
        return NCPolynomial._raw(
            {(head + w + tail,): self.truncate(c) for (w,), c in rhs.terms.items() if self.truncate(c)}, 1
        )

    def is_normal(self, word: tuple) -> bool:
        return all(self.rewrite_at(word, p) is None for p in range(len(word) - 1))

    def with_truncation(self, truncation: dict) -> "RewriteSystem":
        pairs = {tuple(sorted(p, key=self.rank.get)) for p in self.inverse_pairs}
        return RewriteSystem(self.generators, self.rules, pairs, truncation)

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "rules": [
                {"lhs": [x, y], "rhs": rhs.to_json()}
                for (x, y), rhs in sorted(self.rules.items(), key=lambda kv: (self.rank[kv[0][0]], self.rank[kv[0][1]]))
            ],
            "inverse_pairs": sorted([list(p) for p in self.inverse_pairs]),
            "truncation": dict(sorted(self.truncation.items())),
        }


class Normalizer:
    """Normal ordering against a rewrite system, memoised per instance."""

    def __init__(self, system: RewriteSystem):
        self.system = system
        self._letter: dict = {}

    def _mul(self, a: Poly, b: Poly) -> Poly:
        return self.system.truncate(a * b)

    def mul_letter(self, word: tuple, g: str) -> dict:
        """Normal form of ``word * g`` for a normal ``word``."""
        key = (word, g)
        hit = self._letter.get(key)
        if hit is not None:
            return hit
        if not word:
            res = {(g,): _ONE}
        else:
            x = word[-1]
            if (x, g) in self.system.inverse_pairs:
                res = {word[:-1]: _ONE}
            else:
                rhs = self.system.rules.get((x, g))
                if rhs is None:
                    res = {word + (g,): _ONE}
                else:
                    res = {}
                    prefix = word[:-1]
                    for (w,), c in rhs.terms.items():
                        c = self.system.truncate(c)
                        if not c:
                            continue
                        for nw, d in self.mul_word(prefix, w).items():
                            _acc(res, nw, self._mul(c, d))
        self._letter[key] = res
        return res

    def mul_word(self, word: tuple, other: tuple) -> dict:
        """Normal form of ``word * other`` for a normal ``word``."""
        acc = {word: _ONE}
        for g in other:
            new = {}
            for w, c in acc.items():
                for nw, d in self.mul_letter(w, g).items():
                    _acc(new, nw, self._mul(c, d))
            acc = new
        return acc

    def word(self, w: tuple) -> dict:
        return self.mul_word((), tuple(w))

    def normal_form(self, p: NCPolynomial) -> NCPolynomial:
        out = {}
        for key, c in p.terms.items():
            c = self.system.truncate(c)
            if c:
                self._expand(out, [self.word(w) for w in key], c)
        return NCPolynomial._raw(out, p.legs)

    def product(self, p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
        """Normal form of ``p * q``; the factors need not be normal."""
        if p.legs != q.legs:
            raise ValueError("tensor rank mismatch")
        out = {}
        for k1, c1 in p.terms.items():
            for k2, c2 in q.terms.items():
                c = self._mul(c1, c2)
                if c:
                    self._expand(out, [self.word(a + b) for a, b in zip(k1, k2)], c)
        return NCPolynomial._raw(out, p.legs)

    def _expand(self, out: dict, legs: list, c: Poly) -> None:
        for combo in product(*(leg.items() for leg in legs)):
            coeff = c
            for _, d in combo:
                coeff = self._mul(coeff, d)
                if not coeff:
                    break
            if coeff:
                _acc(out, tuple(w for w, _ in combo), coeff)


def _acc(d: dict, key, val) -> None:
    v = d.get(key)
    v = val if v is None else v + val
    if v:
        d[key] = v
    else:
        d.pop(key, None)


def normal_form(p: NCPolynomial, R: RewriteSystem, normalizer: Normalizer | None = None) -> NCPolynomial:
    return (normalizer or Normalizer(R)).normal_form(p)


def check_local_confluence(R: RewriteSystem, L: int = 4, normalizer: Normalizer | None = None) -> Verdict:
    """Every one-step rewrite of every word of length <= L has the same
    normal form as the word itself.  With termination this makes the normal
    form independent of the reduction order on those words."""
    nz = normalizer or Normalizer(R)
    checked = 0
    for n in range(2, L + 1):
        for word in product(R.generators, repeat=n):
            ref = None
            for pos in range(n - 1):
                step = R.rewrite_at(word, pos)
                if step is None:
                    continue
                if ref is None:
                    ref = nz.normal_form(NCPolynomial.word(word))
                checked += 1
                got = nz.normal_form(step)
                if got != ref:
                    return Verdict(
                        "hopf.local_confluence",
                        False,
                        witness={"word": list(word), "position": pos},
                        residual=got - ref,
                    )
    return Verdict("hopf.local_confluence", True, details={"length": L, "rewrites_checked": checked})
