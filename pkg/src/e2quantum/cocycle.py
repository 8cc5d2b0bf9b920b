"""E(2) in its 3x3 representation and group 1-cocycles ``E(2) -> wedge^2 e(2)``.

A group element is ``g(a, b, c) = exp(-i a P1) exp(-i b P2) exp(i c J)``,
i.e. the matrix with rows ``(u, v, a), (-v, u, b), (0, 0, 1)`` where
``u = cos c`` and ``v = sin c``.  The coordinate ``c`` is kept as an
independent polynomial variable; it only meets ``u`` and ``v`` through the
derivation ``d/dc u = -v``, ``d/dc v = u``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lie import J, P1, P2, Cobracket, LieAlgebra, WedgeElement, make_e2
from .linalg import LinearSystem
from .polynomial import Poly, monomials
from .scalars import I
from .verdict import Verdict

__all__ = [
    "RepMatrix",
    "GroupCocycle",
    "SubgroupSolution",
    "CocycleSolveError",
    "GENERATOR_MATRICES",
    "group_element",
    "coordinates",
    "adjoint_action",
    "adjoint_vector",
    "solve_subgroup_cocycle",
    "assemble_cocycle",
    "coboundary_cocycle",
    "verify_cocycle",
    "linearize",
    "vector_field",
    "derivative_at_identity",
    "COMPONENT_KEYS",
]

COORDS = ("a", "b", "c", "u", "v")
IDENTITY_POINT = {"a": 0, "b": 0, "c": 0, "u": 1, "v": 0}
# serialisation keys of the three wedge components, in storage order
COMPONENT_KEYS = {"P1^J": (P1, J), "P2^J": (P2, J), "P1^P2": (P1, P2)}


class CocycleSolveError(ValueError):
    pass


def _p(x) -> Poly:
    if isinstance(x, str):
        return Poly.var(x)
    return Poly.coerce(x)


def coordinates(suffix: str = "") -> dict:
    """Variable names ``a, b, c, u, v`` with an optional suffix such as ``_1``."""
    return {x: x + suffix for x in COORDS}


class RepMatrix:
    """3x3 matrix of :class:`Poly` entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(_p(x) for x in row) for row in rows)
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("RepMatrix is 3x3")

    @classmethod
    def identity(cls) -> "RepMatrix":
        return cls([[1 if i == j else 0 for j in range(3)] for i in range(3)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(
            [[sum((self.rows[i][k] * other.rows[k][j] for k in range(3)), Poly()) for j in range(3)] for i in range(3)]
        )

    def __add__(self, other):
        return RepMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "RepMatrix":
        return RepMatrix([[x * c for x in r] for r in self.rows])

    def det(self) -> Poly:
        m = self.rows
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    def group_inverse(self) -> "RepMatrix":
        """Inverse of a group element ``[[R, t], [0, 1]]`` with ``R`` orthogonal."""
        m = self.rows
        if not (m[2][0].is_zero() and m[2][1].is_zero() and m[2][2] == 1):
            raise ValueError("not a group element")
        rt = [[m[j][i] for j in range(2)] for i in range(2)]
        t = [m[0][2], m[1][2]]
        shift = [-(rt[i][0] * t[0] + rt[i][1] * t[1]) for i in range(2)]
        return RepMatrix([[rt[0][0], rt[0][1], shift[0]], [rt[1][0], rt[1][1], shift[1]], [0, 0, 1]])

    def subs(self, mapping) -> "RepMatrix":
        return RepMatrix([[x.subs(mapping) for x in r] for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, RepMatrix) and self.rows == other.rows

    def __repr__(self):
        return "RepMatrix(" + "; ".join(", ".join(str(x) for x in r) for r in self.rows) + ")"


def _E(i, j) -> list:
    return [[1 if (r, c) == (i, j) else 0 for c in range(3)] for r in range(3)]


GENERATOR_MATRICES = {
    P1: RepMatrix(_E(0, 2)).scale(I),
    P2: RepMatrix(_E(1, 2)).scale(I),
    J: (RepMatrix(_E(1, 0)) + RepMatrix(_E(0, 1)).scale(-1)).scale(I),
}


def group_element(a="a", b="b", c="c", u=None, v=None) -> RepMatrix:
    """``g(a, b, c)``.  A symbolic ``c`` named ``c<suffix>`` brings in
    ``u<suffix>``, ``v<suffix>``; ``c = 0`` gives the unrotated element."""
    if u is None and v is None:
        if isinstance(c, str):
            u, v = "u" + c[1:], "v" + c[1:]
        elif Poly.coerce(c).is_zero():
            u, v = 1, 0
        else:
            raise ValueError("pass u = cos c and v = sin c for a non-symbolic rotation")
    u, v = _p(u), _p(v)
    return RepMatrix([[u, v, _p(a)], [-v, u, _p(b)], [0, 0, 1]])


def _to_algebra(m: RepMatrix) -> dict:
    """Coordinates of a Lie algebra element in the basis (P1, P2, J)."""
    z = m.rows
    checks = [z[0][0], z[1][1], z[2][0], z[2][1], z[2][2], z[0][1] + z[1][0]]
    if any(not x.is_zero() for x in checks):
        raise AssertionError("conjugate left the span of the e(2) generators")
    mi = -I
    out = {P1: z[0][2] * mi, P2: z[1][2] * mi, J: z[1][0] * mi}
    return {k: v for k, v in out.items() if v}


def adjoint_vector(g: RepMatrix, x: dict, g_inv: RepMatrix | None = None) -> dict:
    """``Ad_g x = g x g^{-1}`` for ``x`` a vector in the basis (P1, P2, J)."""
    g_inv = g_inv or g.group_inverse()
    total = RepMatrix([[0] * 3] * 3)
    for k, c in x.items():
        total = total + GENERATOR_MATRICES[k].scale(c)
    return _to_algebra(g @ total @ g_inv)


def _adjoint_basis(g: RepMatrix) -> dict:
    g_inv = g.group_inverse()
    one = Poly.const(1)
    return {k: adjoint_vector(g, {k: one}, g_inv) for k in (P1, P2, J)}


def adjoint_action(g: RepMatrix, w: WedgeElement, _basis: dict | None = None) -> WedgeElement:
    """``(Ad_g (x) Ad_g) w``."""
    images = _basis or _adjoint_basis(g)
    out = WedgeElement(w.algebra)
    for (i, j), c in w.coords.items():
        out = out + WedgeElement.wedge(w.algebra, images[i], images[j]).scale(c)
    return out


# --------------------------------------------------------------------------


class GroupCocycle:
    """``phi(g) = A P1^J + B P2^J + C P1^P2`` with polynomial components."""

    def __init__(self, wedge: WedgeElement):
        self.wedge = wedge

    @classmethod
    def from_components(cls, p1j=0, p2j=0, p1p2=0, algebra: LieAlgebra | None = None):
        g = algebra or make_e2()
        return cls(WedgeElement(g, {(P1, J): p1j, (P2, J): p2j, (P1, P2): p1p2}))

    @property
    def components(self) -> tuple:
        w = self.wedge
        return tuple(w.coeff(*COMPONENT_KEYS[k]) for k in COMPONENT_KEYS)

    def subs(self, mapping) -> "GroupCocycle":
        return GroupCocycle(self.wedge.subs(mapping))

    def __sub__(self, other):
        return GroupCocycle(self.wedge - other.wedge)

    def __add__(self, other):
        return GroupCocycle(self.wedge + other.wedge)

    def __eq__(self, other):
        return isinstance(other, GroupCocycle) and self.wedge == other.wedge

    def is_zero(self) -> bool:
        return not self.wedge

    def to_json(self) -> dict:
        return {k: c.to_json() for k, c in zip(COMPONENT_KEYS, self.components)}

    @classmethod
    def from_json(cls, data: dict) -> "GroupCocycle":
        unknown = set(data) - set(COMPONENT_KEYS)
        if unknown:
            raise ValueError(f"unknown cocycle keys {sorted(unknown)}")
        comps = [Poly.from_json(data.get(k, [])) for k in COMPONENT_KEYS]
        return cls.from_components(*comps)

    def __str__(self):
        return str(self.wedge)

    __repr__ = __str__


# --------------------------------------------------------------------------
# vector fields


def vector_field(x: int, f: Poly, chirality: str = "right", suffix: str = "") -> Poly:
    """``d/dt f(exp(tX) g)`` (``right``: right-invariant fields, generated by
    left multiplication) or ``d/dt f(g exp(tX))`` (``left``)."""
    n = coordinates(suffix)
    da, db, dc = f.diff(n["a"]), f.diff(n["b"]), f.diff(n["c"])
    dcirc = dc - Poly.var(n["v"]) * f.diff(n["u"]) + Poly.var(n["u"]) * f.diff(n["v"])
    a, b, u, v = (Poly.var(n[k]) for k in "abuv")
    if chirality == "right":
        if x == P1:
            return da * I
        if x == P2:
            return db * I
        return (b * da - a * db + dcirc) * (-I)
    if chirality == "left":
        if x == P1:
            return (u * da - v * db) * I
        if x == P2:
            return (v * da + u * db) * I
        return dcirc * (-I)
    raise ValueError(f"unknown chirality {chirality!r}")


def at_identity(p: Poly, suffix: str = "") -> Poly:
    return p.subs({k + suffix: v for k, v in IDENTITY_POINT.items()})


def derivative_at_identity(x: int, f: Poly) -> Poly:
    return at_identity(vector_field(x, f))


def linearize(phi: GroupCocycle) -> Cobracket:
    """``delta(X) = d/dt phi(exp(tX))`` at ``t = 0``."""
    w = phi.wedge
    images = [w.map_coeffs(lambda p, x=x: derivative_at_identity(x, p)) for x in (P1, P2, J)]
    return Cobracket(w.algebra, images)


# --------------------------------------------------------------------------
# one-parameter subgroups

_SUBGROUP_VARS = {P1: ("a",), P2: ("b",), J: ("c", "u", "v")}
_PAIRS = ((P1, J), (P2, J), (P1, P2))


def _subgroup_element(x: int, suffix: str) -> RepMatrix:
    if x == P1:
        return group_element("a" + suffix, 0, 0)
    if x == P2:
        return group_element(0, "b" + suffix, 0)
    return group_element(0, 0, "c" + suffix)


def _subgroup_product(x: int) -> dict:
    """Coordinates of ``g(t_1) g(t_2)`` on the subgroup of ``x``."""
    if x == P1:
        return {"a": Poly.var("a_1") + Poly.var("a_2")}
    if x == P2:
        return {"b": Poly.var("b_1") + Poly.var("b_2")}
    c1, u1, v1, c2, u2, v2 = Poly.vars("c_1 u_1 v_1 c_2 u_2 v_2")
    return {"c": c1 + c2, "u": u1 * u2 - v1 * v2, "v": v1 * u2 + u1 * v2}


def _rename(vars_, suffix):
    return {x: x + suffix for x in vars_}


def _flow_derivative(x: int, p: Poly) -> Poly:
    """d/dt at t = 0 of p along the subgroup parameterisation of the
    group coordinates: ``exp(-i a P1)``, ``exp(-i b P2)``, ``exp(i c J)``."""
    if x == P1:
        return at_identity(p.diff("a"))
    if x == P2:
        return at_identity(p.diff("b"))
    return at_identity(p.diff("c") - Poly.var("v") * p.diff("u") + Poly.var("u") * p.diff("v"))


# exp(-i t P1) = 1 - i t P1 + ...  so the linear term of phi is -i t delta(P1)
_INITIAL_FACTOR = {P1: -I, P2: -I, J: I}


@dataclass
class SubgroupSolution:
    generator: int
    phi: WedgeElement
    degree: int
    stable: bool

    def __str__(self):
        return str(self.phi)


def _solve_subgroup(x: int, delta: Cobracket, degree: int) -> WedgeElement:
    g = delta.algebra
    vars_ = _SUBGROUP_VARS[x]
    monos = [()] + monomials(vars_, degree)
    unknowns = [(pair, m) for pair in _PAIRS for m in monos]
    system = LinearSystem(unknowns=unknowns, zero=Poly())
    g1 = _subgroup_element(x, "_1")
    basis1 = _adjoint_basis(g1)
    prod = _subgroup_product(x)
    ren1, ren2 = _rename(vars_, "_1"), _rename(vars_, "_2")
    equations: dict = {}
    for unk in unknowns:
        pair, m = unk
        mono = Poly({m: 1})
        lhs = WedgeElement(g, {pair: mono.subs(prod)})
        lhs = lhs - WedgeElement(g, {pair: mono.rename(ren1)})
        lhs = lhs - adjoint_action(g1, WedgeElement(g, {pair: mono.rename(ren2)}), basis1)
        for key, coef in lhs.coords.items():
            for tm, c in coef.terms.items():
                equations.setdefault((key, tm), {})[unk] = c
    for label in sorted(equations, key=repr):
        system.add_equation(equations[label], None, label=("cocycle", label))
    factor = _INITIAL_FACTOR[x]
    target = delta(x)
    for pair in _PAIRS:
        row = {}
        for m in monos:
            d = _flow_derivative(x, Poly({m: 1}))
            if d:
                row[(pair, m)] = d.to_scalar()
        system.add_equation(row, target.coeff(*pair) * factor, label=("initial", pair))
    if not system.consistent:
        raise CocycleSolveError(f"inconsistent subgroup cocycle system: {system.inconsistencies[0]}")
    sol = system.solve()
    if sol.kernel:
        free = [k for vec in sol.kernel for k in vec][:6]
        raise CocycleSolveError(f"subgroup cocycle is not unique; free directions include {free}")
    coords: dict = {}
    for (pair, m), val in sol.values.items():
        if val:
            coords[pair] = coords.get(pair, Poly()) + Poly({m: 1}) * val
    return WedgeElement(g, coords)


def solve_subgroup_cocycle(generator, delta: Cobracket, degree: int = 4, check_stability: bool = True) -> SubgroupSolution:
    """Polynomial solution of ``phi(g(t) g(t')) = phi(g(t)) + Ad_{g(t)} phi(g(t'))``
    on the one-parameter subgroup of ``generator`` with the initial condition
    fixed by ``delta``.  With ``check_stability`` the solve is repeated at
    ``degree + 2`` and the two answers compared."""
    x = generator if isinstance(generator, int) else delta.algebra.index(generator)
    phi = _solve_subgroup(x, delta, degree)
    stable = True
    if check_stability:
        stable = _solve_subgroup(x, delta, degree + 2) == phi
    return SubgroupSolution(x, phi, degree, stable)


def assemble_cocycle(delta: Cobracket, degree: int = 4, check_stability: bool = False) -> GroupCocycle:
    """``phi(g(a,b,c)) = phi(e^{-iaP1}) + Ad phi(e^{-ibP2}) + Ad phi(e^{icJ})``."""
    parts = {x: solve_subgroup_cocycle(x, delta, degree, check_stability) for x in (P1, P2, J)}
    for x, sol in parts.items():
        if not sol.stable:
            raise CocycleSolveError(f"subgroup solution for generator {x} is not degree-stable")
    ga = group_element("a", 0, 0)
    gab = group_element("a", "b", 0)
    total = parts[P1].phi + adjoint_action(ga, parts[P2].phi) + adjoint_action(gab, parts[J].phi)
    return GroupCocycle(total)


def coboundary_cocycle(r: WedgeElement) -> GroupCocycle:
    """``phi(g) = Ad_g r - r``."""
    g = group_element()
    return GroupCocycle(adjoint_action(g, r) - r)


def verify_cocycle(phi: GroupCocycle) -> Verdict:
    """Check ``phi(g1 g2) = phi(g1) + Ad_{g1} phi(g2)`` on G x G."""
    w = phi.wedge
    lhs = w.subs(coproduct_substitution())
    rhs = w.map_coeffs(lambda p: p.rename(coordinates("_1"))) + adjoint_action(
        group_element("a_1", "b_1", "c_1"), w.map_coeffs(lambda p: p.rename(coordinates("_2")))
    )
    diff = lhs - rhs
    if diff:
        return Verdict("cocycle.identity", False, residual=GroupCocycle(diff))
    return Verdict("cocycle.identity", True)


def coproduct_substitution() -> dict:
    """Coordinate coproduct: coordinates of ``g1 g2`` in terms of both legs."""
    a1, b1, c1, u1, v1 = Poly.vars("a_1 b_1 c_1 u_1 v_1")
    a2, b2, c2, u2, v2 = Poly.vars("a_2 b_2 c_2 u_2 v_2")
    return {
        "a": a1 + u1 * a2 + v1 * b2,
        "b": b1 - v1 * a2 + u1 * b2,
        "c": c1 + c2,
        "u": u1 * u2 - v1 * v2,
        "v": v1 * u2 + u1 * v2,
    }
