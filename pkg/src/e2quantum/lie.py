"""Lie algebras by structure constants, cobrackets and classical r-matrices.

Vectors of ``g`` are dicts ``index -> Poly``; elements of ``g^{(x)k}`` are
dicts ``(i1, ..., ik) -> Poly``.  Wedges are normalised as
``x^y = x(x)y - y(x)x`` with no factor 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Sequence

from .linalg import Inconsistency, LinearSystem, invert_matrix
from .polynomial import Poly
from .scalars import GaussianRational, I, ONE, ZERO
from .verdict import Verdict

__all__ = [
    "LieAlgebra",
    "WedgeElement",
    "Cobracket",
    "AutomorphismSpec",
    "ClassificationConstraints",
    "CoboundaryResult",
    "SchoutenResult",
    "make_e2",
    "check_lie_axioms",
    "builtin_cobracket",
    "check_bialgebra_axioms",
    "coboundary_from_r",
    "coboundary_solve",
    "schouten_mcybe",
    "apply_automorphism",
    "classification_constraints",
    "act",
    "proportionality",
    "P1",
    "P2",
    "J",
]

P1, P2, J = 0, 1, 2
S = Poly.var("s")


# --------------------------------------------------------------------------
# tensors


def _acc(d: dict, key, val) -> None:
    if not val:
        return
    old = d.get(key)
    new = val if old is None else old + val
    if new:
        d[key] = new
    else:
        d.pop(key, None)


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _perm_sign(p: Sequence[int]) -> int:
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


# --------------------------------------------------------------------------
# Lie algebra


class LieAlgebra:
    """``[e_i, e_j] = sum_k c[i, j, k] e_k`` over Q(i)."""

    def __init__(self, basis_names: Sequence[str], structure_constants: dict):
        self.basis_names = tuple(basis_names)
        self.dimension = len(self.basis_names)
        self.structure_constants = {
            k: GaussianRational.coerce(v) for k, v in structure_constants.items() if v
        }
        n = self.dimension
        for (i, j, k) in self.structure_constants:
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise IndexError(f"structure constant index {(i, j, k)} out of range")
        self._br = {}
        for (i, j, k), c in self.structure_constants.items():
            self._br.setdefault((i, j), {})[k] = Poly.const(c)

    def basis_bracket(self, i: int, j: int) -> dict:
        return self._br.get((i, j), {})

    def bracket(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, xi in x.items():
            for j, yj in y.items():
                for k, c in self.basis_bracket(i, j).items():
                    _acc(out, k, xi * yj * c)
        return out

    def index(self, name: str) -> int:
        return self.basis_names.index(name)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.basis_names, self.structure_constants) == (
            other.basis_names,
            other.structure_constants,
        )

    def __repr__(self):
        return f"LieAlgebra({list(self.basis_names)})"


def act(g: LieAlgebra, x: int, tensor: dict) -> dict:
    """Adjoint action of the basis vector ``e_x`` on a tensor, leg by leg."""
    out: dict = {}
    for key, c in tensor.items():
        for leg, idx in enumerate(key):
            for k, ck in g.basis_bracket(x, idx).items():
                _acc(out, key[:leg] + (k,) + key[leg + 1:], c * ck)
    return out


def make_e2() -> LieAlgebra:
    """Basis (P1, P2, J) with [J, P1] = iP2, [J, P2] = -iP1, [P1, P2] = 0."""
    c = {
        (J, P1, P2): I,
        (P1, J, P2): -I,
        (J, P2, P1): -I,
        (P2, J, P1): I,
    }
    return LieAlgebra(("P1", "P2", "J"), c)


def check_lie_axioms(g: LieAlgebra) -> Verdict:
    n = g.dimension
    for i in range(n):
        for j in range(i, n):
            s = dict(g.basis_bracket(i, j))
            for k, v in g.basis_bracket(j, i).items():
                _acc(s, k, v)
            if s:
                return Verdict("lie.antisymmetry", False, witness=(i, j), residual=s)
    for i, j, k in product(range(n), repeat=3):
        if not (i < j < k):
            continue
        ei, ej, ek = {i: Poly.const(1)}, {j: Poly.const(1)}, {k: Poly.const(1)}
        tot: dict = {}
        for a, b, c in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
            for idx, v in g.bracket(g.bracket(a, b), c).items():
                _acc(tot, idx, v)
        if tot:
            return Verdict("lie.jacobi", False, witness=(i, j, k), residual=tot)
    return Verdict("lie.axioms", True)


# --------------------------------------------------------------------------
# wedges and cobrackets


class WedgeElement:
    """``sum coords[(i, j)] e_i ^ e_j`` over ``i < j``; coefficients are Poly."""

    def __init__(self, algebra: LieAlgebra, coords: dict | None = None):
        self.algebra = algebra
        clean: dict = {}
        for (i, j), c in (coords or {}).items():
            c = Poly.coerce(c)
            if i == j:
                continue
            if i > j:
                i, j, c = j, i, -c
            _acc(clean, (i, j), c)
        self.coords = clean

    @classmethod
    def wedge(cls, algebra: LieAlgebra, x: dict, y: dict) -> "WedgeElement":
        coords: dict = {}
        for i, xi in x.items():
            for j, yj in y.items():
                if i != j:
                    _acc(coords, (i, j), Poly.coerce(xi) * Poly.coerce(yj))
        return cls(algebra, coords)

    @classmethod
    def from_tensor(cls, algebra: LieAlgebra, tensor: dict, *, check: bool = True) -> "WedgeElement":
        coords = {}
        for (i, j), c in tensor.items():
            if i < j:
                coords[(i, j)] = c
            elif check and i == j:
                raise ValueError("tensor has a diagonal component; not in the wedge square")
        w = cls(algebra, coords)
        if check and _clean(w.to_tensor()) != _clean(dict(tensor)):
            raise ValueError("tensor is not antisymmetric")
        return w

    def to_tensor(self) -> dict:
        out = {}
        for (i, j), c in self.coords.items():
            out[(i, j)] = c
            out[(j, i)] = -c
        return out

    def coeff(self, i: int, j: int) -> Poly:
        if i < j:
            return self.coords.get((i, j), Poly())
        if i > j:
            return -self.coords.get((j, i), Poly())
        return Poly()

    def __add__(self, other):
        d = dict(self.coords)
        for k, v in other.coords.items():
            _acc(d, k, v)
        return WedgeElement(self.algebra, d)

    def __neg__(self):
        return WedgeElement(self.algebra, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WedgeElement":
        c = Poly.coerce(c)
        return WedgeElement(self.algebra, {k: v * c for k, v in self.coords.items()})

    __mul__ = scale
    __rmul__ = scale

    def map_coeffs(self, fn) -> "WedgeElement":
        return WedgeElement(self.algebra, {k: fn(v) for k, v in self.coords.items()})

    def subs(self, mapping) -> "WedgeElement":
        return self.map_coeffs(lambda p: p.subs(mapping))

    def is_constant(self) -> bool:
        return all(v.is_constant() for v in self.coords.values())

    def __bool__(self):
        return bool(self.coords)

    def __eq__(self, other):
        if not isinstance(other, WedgeElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def __str__(self):
        if not self.coords:
            return "0"
        names = self.algebra.basis_names
        parts = []
        for (i, j) in sorted(self.coords):
            c = self.coords[(i, j)]
            mono = f"{names[i]}^{names[j]}"
            cs = str(c)
            if cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


class Cobracket:
    """Linear map ``g -> wedge^2 g`` given on the basis.  Axioms are not
    assumed; see :func:`check_bialgebra_axioms`."""

    def __init__(self, algebra: LieAlgebra, images: Sequence[WedgeElement]):
        if len(images) != algebra.dimension:
            raise ValueError("one image per basis vector is required")
        self.algebra = algebra
        self.images = tuple(images)

    @classmethod
    def zero(cls, algebra: LieAlgebra) -> "Cobracket":
        return cls(algebra, [WedgeElement(algebra) for _ in range(algebra.dimension)])

    @classmethod
    def from_table(cls, algebra: LieAlgebra, table: dict) -> "Cobracket":
        """``table[(i, j, k)] = c`` means ``delta(e_i)`` contains ``c e_j ^ e_k``."""
        coords = [dict() for _ in range(algebra.dimension)]
        for (i, j, k), c in table.items():
            _acc(coords[i], (j, k), Poly.coerce(c))
        return cls(algebra, [WedgeElement(algebra, c) for c in coords])

    def __call__(self, i: int) -> WedgeElement:
        return self.images[i]

    def tensor(self, i: int) -> dict:
        return self.images[i].to_tensor()

    def parameters(self) -> list:
        """Coefficient vector in the fixed order (i, (j, k)) with j < k."""
        n = self.algebra.dimension
        pairs = [(j, k) for j in range(n) for k in range(j + 1, n)]
        return [self.images[i].coeff(j, k) for i in range(n) for (j, k) in pairs]

    def map_coeffs(self, fn) -> "Cobracket":
        return Cobracket(self.algebra, [w.map_coeffs(fn) for w in self.images])

    def subs(self, mapping) -> "Cobracket":
        return Cobracket(self.algebra, [w.subs(mapping) for w in self.images])

    def scale(self, c) -> "Cobracket":
        return Cobracket(self.algebra, [w.scale(c) for w in self.images])

    def __add__(self, other):
        return Cobracket(self.algebra, [a + b for a, b in zip(self.images, other.images)])

    def __sub__(self, other):
        return Cobracket(self.algebra, [a - b for a, b in zip(self.images, other.images)])

    def is_zero(self) -> bool:
        return not any(self.images)

    def is_constant(self) -> bool:
        return all(w.is_constant() for w in self.images)

    def __eq__(self, other):
        if not isinstance(other, Cobracket):
            return NotImplemented
        return self.images == other.images

    def __str__(self):
        names = self.algebra.basis_names
        return "; ".join(f"d({names[i]}) = {w}" for i, w in enumerate(self.images))

    __repr__ = __str__


def builtin_cobracket(case: str, s=None, algebra: LieAlgebra | None = None) -> Cobracket:
    """The four cobrackets on e(2).  ``s`` (delta1 only) defaults to the
    polynomial variable ``s``."""
    g = algebra or make_e2()
    W = lambda coords: WedgeElement(g, coords)  # noqa: E731
    if case != "delta1" and s is not None:
        raise ValueError(f"parameter s is only accepted for delta1, not {case}")
    if case == "delta1":
        sv = S if s is None else Poly.coerce(s)
        images = [W({(P1, J): sv}), W({(P2, J): sv}), W({})]
    elif case == "delta2":
        images = [W({}), W({}), W({(P1, P2): 1})]
    elif case == "delta3":
        images = [W({}), W({(P1, P2): 1}), W({(P1, J): 1})]
    elif case == "delta4":
        images = [W({(P1, P2): -I}), W({(P1, P2): 1}), W({(P1, J): 1, (P2, J): I})]
    else:
        raise ValueError(f"unknown cobracket case {case!r}")
    return Cobracket(g, images)


def _cocycle_residual(delta: Cobracket, i: int, j: int) -> dict:
    """delta([e_i, e_j]) - e_i . delta(e_j) + e_j . delta(e_i)."""
    g = delta.algebra
    out: dict = {}
    for k, c in g.basis_bracket(i, j).items():
        for key, v in delta.tensor(k).items():
            _acc(out, key, v * c)
    for key, v in act(g, i, delta.tensor(j)).items():
        _acc(out, key, -v)
    for key, v in act(g, j, delta.tensor(i)).items():
        _acc(out, key, v)
    return out


def _cojacobi_residual(delta: Cobracket, x: int) -> dict:
    """Cyclic sum of (delta (x) 1) delta(e_x) in g(x)g(x)g."""
    t: dict = {}
    for (i, j), c in delta.tensor(x).items():
        for (k, l), d in delta.tensor(i).items():
            _acc(t, (k, l, j), c * d)
    cyc: dict = {}
    for (p, q, r), v in t.items():
        _acc(cyc, (p, q, r), v)
        _acc(cyc, (q, r, p), v)
        _acc(cyc, (r, p, q), v)
    return cyc


def check_bialgebra_axioms(delta: Cobracket) -> Verdict:
    """1-cocycle condition on all basis pairs, then co-Jacobi on all basis vectors."""
    g = delta.algebra
    n = g.dimension
    names = g.basis_names
    for i in range(n):
        for j in range(i + 1, n):
            res = _cocycle_residual(delta, i, j)
            if res:
                return Verdict(
                    "bialgebra.cocycle",
                    False,
                    witness=(names[i], names[j]),
                    residual=WedgeElement.from_tensor(g, res, check=False),
                )
    for x in range(n):
        res = _cojacobi_residual(delta, x)
        if res:
            return Verdict("bialgebra.cojacobi", False, witness=names[x], residual=res)
    return Verdict("bialgebra.axioms", True)


# --------------------------------------------------------------------------
# coboundaries


def _full_tensor(r: WedgeElement, symmetric: dict | None = None) -> dict:
    t = r.to_tensor()
    for k, v in (symmetric or {}).items():
        _acc(t, k, Poly.coerce(v))
    return t


def coboundary_from_r(r: WedgeElement, symmetric: dict | None = None) -> Cobracket:
    """``delta_r(x) = x . r``.  An ad-invariant symmetric part may be added;
    it changes nothing when it is invariant."""
    g = r.algebra
    t = _full_tensor(r, symmetric)
    images = []
    for x in range(g.dimension):
        images.append(WedgeElement.from_tensor(g, act(g, x, t), check=symmetric is None))
    return Cobracket(g, images)


@dataclass
class CoboundaryResult:
    solvable: bool
    r: WedgeElement | None = None
    ambiguity: list = field(default_factory=list)
    certificate: Inconsistency | None = None
    note: str = ""

    def __bool__(self):
        return self.solvable


def _wedge_pairs(n: int) -> list:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def coboundary_solve(delta: Cobracket, s=None) -> CoboundaryResult:
    """Solve ``delta(x) = x . r`` for ``r`` in wedge^2 g.

    With ``s`` given, the variable ``s`` is specialised first; otherwise the
    elimination runs with polynomial right-hand sides, so an inconsistency
    certificate holds identically in ``s`` (wherever its residual is nonzero).
    """
    g = delta.algebra
    if s is not None:
        delta = delta.subs({"s": s})
    pairs = _wedge_pairs(g.dimension)
    system = LinearSystem(unknowns=pairs, zero=Poly())
    for x in range(g.dimension):
        images = {pq: act(g, x, WedgeElement(g, {pq: 1}).to_tensor()) for pq in pairs}
        for (p, q) in pairs:
            row = {}
            for pq, img in images.items():
                v = img.get((p, q))
                if v:
                    row[pq] = v.to_scalar()
            system.add_equation(row, delta(x).coeff(p, q), label=(g.basis_names[x], (p, q)))
    note = "trivial bialgebra (coboundary of r = 0)" if delta.is_zero() else ""
    if not system.consistent:
        return CoboundaryResult(False, certificate=system.inconsistencies[0], note=note)
    sol = system.solve()
    r = WedgeElement(g, {pq: v for pq, v in sol.values.items() if v})
    ambiguity = [WedgeElement(g, {pq: Poly.const(v) for pq, v in vec.items()}) for vec in sol.kernel]
    return CoboundaryResult(True, r=r, ambiguity=ambiguity, note=note)


def in_span(w: WedgeElement, basis: Iterable[WedgeElement]) -> bool:
    """Whether a constant wedge lies in the span of constant wedges."""
    basis = list(basis)
    keys = sorted({k for b in basis for k in b.coords} | set(w.coords))
    system = LinearSystem(unknowns=list(range(len(basis))))
    for key in keys:
        row = {n: b.coords[key].to_scalar() for n, b in enumerate(basis) if key in b.coords}
        rhs = w.coords[key].to_scalar() if key in w.coords else ZERO
        system.add_equation(row, rhs)
    return system.consistent


def proportionality(a: Cobracket, b: Cobracket):
    """Scalar ``lam`` with ``a == lam * b`` (constant coefficients), else None."""
    lam = None
    for wa, wb in zip(a.images, b.images):
        for key in set(wa.coords) | set(wb.coords):
            va, vb = wa.coords.get(key, Poly()), wb.coords.get(key, Poly())
            if not vb:
                if va:
                    return None
                continue
            if not (va.is_constant() and vb.is_constant()):
                return None
            ratio = va.to_scalar() / vb.to_scalar()
            if lam is None:
                lam = ratio
            elif lam != ratio:
                return None
    if lam is None:
        return None
    return lam if a == b.scale(lam) else None


# --------------------------------------------------------------------------
# Schouten bracket / classical Yang-Baxter


@dataclass
class SchoutenResult:
    tensor: dict  # [[r, r]] in g(x)g(x)g
    schouten: dict  # wedge^3 coefficients, keys p < q < r
    cybe: bool
    mcybe: bool

    def coefficient(self, key=(0, 1, 2)) -> Poly:
        return self.schouten.get(key, Poly())


def schouten_mcybe(r: WedgeElement, symmetric: dict | None = None) -> SchoutenResult:
    """``[[r, r]] = [r12, r13] + [r12, r23] + [r13, r23]`` and its invariance."""
    g = r.algebra
    t = _full_tensor(r, symmetric)
    out: dict = {}
    items = list(t.items())
    for (a, b), x in items:
        for (c, d), y in items:
            xy = x * y
            for k, v in g.basis_bracket(a, c).items():
                _acc(out, (k, b, d), xy * v)
            for k, v in g.basis_bracket(b, c).items():
                _acc(out, (a, k, d), xy * v)
            for k, v in g.basis_bracket(b, d).items():
                _acc(out, (a, c, k), xy * v)
    n = g.dimension
    proj: dict = {}
    sixth = GaussianRational(1) / 6
    for p in range(n):
        for q in range(p + 1, n):
            for rr in range(q + 1, n):
                acc = Poly()
                base = (p, q, rr)
                for perm in permutations(range(3)):
                    key = tuple(base[i] for i in perm)
                    if key in out:
                        acc = acc + out[key] * _perm_sign(perm)
                if acc:
                    proj[base] = acc * sixth
    invariant = all(not act(g, x, out) for x in range(n))
    return SchoutenResult(tensor=out, schouten=proj, cybe=not out, mcybe=invariant)


# --------------------------------------------------------------------------
# automorphisms


@dataclass
class AutomorphismSpec:
    """``J -> J + mu P1 + nu P2``; ``P1 -> lam (cos P1 + sin P2)``,
    ``P2 -> lam (-sin P1 + cos P2)``.  ``matrix`` overrides the parameters
    with an arbitrary linear map (columns are images of basis vectors)."""

    mu: object = 0
    nu: object = 0
    cos: object = 1
    sin: object = 0
    lam: object = 1
    matrix: list | None = None

    def to_matrix(self) -> list:
        if self.matrix is not None:
            return [[GaussianRational.coerce(x) for x in row] for row in self.matrix]
        c, s = GaussianRational.coerce(self.cos), GaussianRational.coerce(self.sin)
        lam = GaussianRational.coerce(self.lam)
        if c * c + s * s != 1:
            raise ValueError("rotation pair must satisfy cos^2 + sin^2 = 1")
        if not lam:
            raise ValueError("scaling must be nonzero")
        mu, nu = GaussianRational.coerce(self.mu), GaussianRational.coerce(self.nu)
        # columns: images of P1, P2, J
        return [
            [lam * c, -lam * s, mu],
            [lam * s, lam * c, nu],
            [ZERO, ZERO, ONE],
        ]


def _apply_matrix(m: list, vec: dict) -> dict:
    out: dict = {}
    for j, c in vec.items():
        for i in range(len(m)):
            if m[i][j]:
                _acc(out, i, c * m[i][j])
    return out


def _check_automorphism(g: LieAlgebra, m: list) -> None:
    n = g.dimension
    try:
        invert_matrix(m)
    except ValueError:
        raise ValueError("automorphism matrix is singular") from None
    cols = [{i: Poly.const(m[i][j]) for i in range(n) if m[i][j]} for j in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = _apply_matrix(m, g.basis_bracket(i, j))
            rhs = g.bracket(cols[i], cols[j])
            if _clean(lhs) != _clean(rhs):
                raise ValueError(
                    f"not an automorphism: A[{g.basis_names[i]}, {g.basis_names[j]}] != "
                    f"[A{g.basis_names[i]}, A{g.basis_names[j]}]"
                )


def transform_wedge(w: WedgeElement, m: list) -> WedgeElement:
    """``(A (x) A) w``."""
    g = w.algebra
    n = g.dimension
    out: dict = {}
    for (i, j), c in w.to_tensor().items():
        for a in range(n):
            if not m[a][i]:
                continue
            for b in range(n):
                if m[b][j]:
                    _acc(out, (a, b), c * (m[a][i] * m[b][j]))
    return WedgeElement.from_tensor(g, out)


def apply_automorphism(delta: Cobracket, spec: AutomorphismSpec) -> Cobracket:
    """``delta'(x) = (A (x) A) delta(A^{-1} x)``."""
    g = delta.algebra
    m = spec.to_matrix()
    _check_automorphism(g, m)
    inv = invert_matrix(m)
    images = []
    for x in range(g.dimension):
        pre = {j: inv[j][x] for j in range(g.dimension) if inv[j][x]}
        w = WedgeElement(g)
        for j, c in pre.items():
            w = w + delta(j).scale(Poly.const(c))
        images.append(transform_wedge(w, m))
    return Cobracket(g, images)


# --------------------------------------------------------------------------
# classification constraint system


@dataclass
class ClassificationConstraints:
    algebra: LieAlgebra
    parameter_names: list
    linear_system: list  # rows: dict parameter -> scalar, each row == 0
    quadratic_residuals: list  # Poly in the parameter variables

    @property
    def parameter_count(self) -> int:
        return len(self.parameter_names)

    def evaluate(self, delta: Cobracket) -> tuple:
        """(linear residuals, quadratic residuals) at ``delta``'s parameters."""
        vals = dict(zip(self.parameter_names, delta.parameters()))
        lin = []
        for row in self.linear_system:
            acc = Poly()
            for name, c in row.items():
                acc = acc + vals[name] * c
            lin.append(acc)
        quad = [q.subs(vals) for q in self.quadratic_residuals]
        return lin, quad

    def satisfied_by(self, delta: Cobracket) -> bool:
        lin, quad = self.evaluate(delta)
        return not any(lin) and not any(quad)


def classification_constraints(g: LieAlgebra) -> ClassificationConstraints:
    """Cocycle (linear) and co-Jacobi (quadratic) conditions on a general
    cobracket with ``n * C(n, 2)`` unknown coefficients."""
    n = g.dimension
    pairs = _wedge_pairs(n)
    names = [f"d{i}_{j}{k}" for i in range(n) for (j, k) in pairs]
    table = {}
    it = iter(names)
    for i in range(n):
        for (j, k) in pairs:
            table[(i, j, k)] = Poly.var(next(it))
    general = Cobracket.from_table(g, table)
    linear = []
    for i in range(n):
        for j in range(i + 1, n):
            res = _cocycle_residual(general, i, j)
            for (p, q) in pairs:
                v = res.get((p, q))
                if not v:
                    continue
                row = {}
                for (m, c) in v.terms.items():
                    ((name, _),) = m
                    row[name] = c
                linear.append(row)
    quad = []
    for x in range(n):
        res = _cojacobi_residual(general, x)
        for key in sorted(res):
            quad.append(res[key])
    return ClassificationConstraints(g, names, linear, quad)
