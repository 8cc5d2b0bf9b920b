"""Truncated universal R-matrix for family B.

The ansatz is ``R = 1⊗1 + sum_{m=1..order} k^m R_m`` with ``k = 1/kappa``.
Giving P1, P2 degree 1, J degree 0 and k degree -1 makes every relation and
coproduct of family B homogeneous of degree 0, so ``R_m`` only needs tensors
of total P-degree ``m``.  Each leg is a normal word with at most ``degree``
letters.  The intertwiner equation ``R Δ(a) = Δ^op(a) R`` is linear in the
unknown coefficients and is solved for all orders in one exact system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .hopf import HopfPresentation, builtin_family
from .linalg import LinearSystem
from .noncomm import NCPolynomial, Normalizer
from .polynomial import Poly
from .verdict import Verdict

__all__ = ["RMatrixResult", "solve_R_truncated", "qybe_residual", "intertwiner_residual"]

_P_DEGREE = {"P1": 1, "P2": 1, "J": 0}


def _leg_words(gens, max_len: int) -> list:
    """Normal words ``g0^a g1^b g2^c`` with at most ``max_len`` letters."""
    out = []
    for exps in product(range(max_len + 1), repeat=len(gens)):
        if sum(exps) <= max_len:
            out.append(tuple(g for g, e in zip(gens, exps) for _ in range(e)))
    return sorted(out, key=lambda w: (len(w), w))


@dataclass
class RMatrixResult:
    status: str  # "solved", "bound-limited" or "inconsistent"
    order: int
    degree: int
    parameter: str
    terms: list = field(default_factory=list)  # R_1 .. R_order, free parameters set to 0
    ambiguity: list = field(default_factory=list)  # per order: list of kernel tensors
    residual: object = None  # inconsistent row when not solved
    feasible_degree: int | None = None

    def __bool__(self):
        return self.status == "solved"

    @property
    def R(self) -> NCPolynomial:
        out = NCPolynomial.one(2)
        for m, rm in enumerate(self.terms, start=1):
            out = out + rm * Poly.var(self.parameter, m)
        return out


def _unknowns(H: HopfPresentation, order: int, degree: int) -> list:
    words = _leg_words(H.generators, degree)
    out = []
    for m in range(1, order + 1):
        for w1 in words:
            d1 = sum(_P_DEGREE[g] for g in w1)
            if d1 > m:
                continue
            for w2 in words:
                if d1 + sum(_P_DEGREE[g] for g in w2) == m:
                    out.append((m, w1, w2))
    return out


def _system(H: HopfPresentation, order: int, degree: int):
    nz = Normalizer(H.system.with_truncation({H.parameter: order}))
    k = H.parameter
    unknowns = _unknowns(H, order, degree)
    rows: dict = {}
    rhs: dict = {}
    for a in H.generators:
        d = nz.normal_form(H.coproduct[a])
        dop = d.flip()
        # constant part of R contributes Δ(a) - Δ^op(a)
        for key, c in (d - dop).terms.items():
            for p in range(order + 1):
                v = c.coefficient(k, p)
                if v:
                    rhs[(a, key, p)] = rhs.get((a, key, p), Poly()) - v
        for u in unknowns:
            m, w1, w2 = u
            e = NCPolynomial.word(w1, w2, coeff=Poly.var(k, m))
            img = nz.product(e, d) - nz.product(dop, e)
            for key, c in img.terms.items():
                for p in range(m, order + 1):
                    v = c.coefficient(k, p)
                    if v:
                        rows.setdefault((a, key, p), {})[u] = v.to_scalar()
    system = LinearSystem(unknowns)
    for rk in sorted(set(rows) | set(rhs), key=repr):
        target = rhs.get(rk, Poly())
        system.add_equation(dict(rows.get(rk, {})), target.to_scalar() if target else None, label=rk)
    return system, unknowns


def _assemble(values: dict, unknowns: list, order: int) -> list:
    terms = [NCPolynomial.zero(2) for _ in range(order)]
    for u in unknowns:
        v = values.get(u)
        if v:
            m, w1, w2 = u
            terms[m - 1] = terms[m - 1] + NCPolynomial.word(w1, w2, coeff=v)
    return terms


def solve_R_truncated(H: HopfPresentation | None = None, order: int = 3, degree: int = 4, escalate: int = 2) -> RMatrixResult:
    """Solve ``R Δ(a) = Δ^op(a) R`` for ``a`` in P1, P2, J up to ``k^order``.

    If the system is inconsistent at ``degree`` it is retried with up to
    ``escalate`` extra letters per leg; success there marks the failure as
    ``"bound-limited"`` rather than ``"inconsistent"``.
    """
    H = H or builtin_family("B", order)
    system, unknowns = _system(H, order, degree)
    if not system.consistent:
        bad = system.inconsistencies[0]
        for extra in range(1, escalate + 1):
            wider, _ = _system(H, order, degree + extra)
            if wider.consistent:
                return RMatrixResult("bound-limited", order, degree, H.parameter, residual=bad, feasible_degree=degree + extra)
        return RMatrixResult("inconsistent", order, degree, H.parameter, residual=bad)
    sol = system.solve()
    terms = _assemble(sol.values, unknowns, order)
    ambiguity = [[] for _ in range(order)]
    for vec in sol.kernel:
        parts = _assemble(vec, unknowns, order)
        low = next(i for i, p in enumerate(parts) if p)
        ambiguity[low].append(parts[low])
    return RMatrixResult("solved", order, degree, H.parameter, terms, ambiguity)


def _leg_embed(R: NCPolynomial, legs: tuple) -> NCPolynomial:
    """Place a rank-2 tensor on legs ``legs`` of a rank-3 tensor."""
    out = {}
    for (w1, w2), c in R.terms.items():
        key = [(), (), ()]
        key[legs[0]], key[legs[1]] = w1, w2
        out[tuple(key)] = c
    return NCPolynomial(out, 3)


def qybe_residual(result: RMatrixResult, H: HopfPresentation | None = None, order: int | None = None) -> NCPolynomial:
    """``R12 R13 R23 - R23 R13 R12`` truncated at ``k^order``."""
    order = result.order if order is None else order
    H = H or builtin_family("B", result.order)
    nz = Normalizer(H.system.with_truncation({result.parameter: order}))
    R = result.R.truncate(result.parameter, order)
    r12, r13, r23 = (_leg_embed(R, p) for p in ((0, 1), (0, 2), (1, 2)))
    lhs = nz.product(nz.product(r12, r13), r23)
    rhs = nz.product(nz.product(r23, r13), r12)
    return lhs - rhs


def intertwiner_residual(result: RMatrixResult, H: HopfPresentation | None = None) -> Verdict:
    """Re-check ``R Δ(a) - Δ^op(a) R = 0`` directly from the assembled R."""
    H = H or builtin_family("B", result.order)
    nz = Normalizer(H.system.with_truncation({result.parameter: result.order}))
    R = result.R
    for a in H.generators:
        d = nz.normal_form(H.coproduct[a])
        res = nz.product(R, d) - nz.product(d.flip(), R)
        if res:
            return Verdict("rmatrix.intertwiner", False, witness=a, residual=res)
    return Verdict("rmatrix.intertwiner", True)
