import pytest
from hypothesis import given, settings

from e2quantum.cocycle import assemble_cocycle, coproduct_substitution
from e2quantum.hopf import builtin_family
from e2quantum.lie import AutomorphismSpec, apply_automorphism, builtin_cobracket
from e2quantum.poisson import (
    PoissonStructure,
    check_jacobi,
    check_multiplicativity,
    complex_generators,
    leg,
    poisson_from_cocycle,
    semiclassical_check,
    semiclassical_partner,
)
from e2quantum.polynomial import Poly
from e2quantum.scalars import GaussianRational, I

from conftest import polys

a, b, c, u, v, s = Poly.vars("a b c u v s")
CASES = ("delta1", "delta2", "delta3", "delta4")
_cache = {}


def structure(case):
    if case not in _cache:
        _cache[case] = poisson_from_cocycle(assemble_cocycle(builtin_cobracket(case)))
    return _cache[case]


gens = complex_generators()
eta, etabar, t = gens["eta"], gens["etabar"], gens["t"]


def test_delta1_real_bracket():
    assert structure("delta1").bracket(a, b) == (a * a + b * b) * s * I / 2


def test_delta1_complex_brackets():
    P = structure("delta1")
    assert P.bracket(eta, etabar) == eta * etabar * s
    assert P.bracket(eta, t) == eta * t * s
    assert P.bracket(etabar, t) == etabar * t * s


def test_delta1_cos_bracket():
    assert structure("delta1").bracket(a, u) == a * s * v * I


def test_delta2_single_bracket():
    view = structure("delta2").complex_view()
    nonzero = {k: p for k, p in view.items() if p}
    assert nonzero == {("eta", "etabar"): c * -2}


@given(polys(("a", "b", "u", "v")))
def test_antisymmetry_and_constants(f):
    P = structure("delta1")
    assert not P.bracket(f, f)
    assert not P.bracket(f, Poly.const(3))


@settings(max_examples=25)
@given(polys(("a", "b", "u")), polys(("a", "b", "v")), polys(("a", "c")))
def test_leibniz_and_antisymmetry(f, g, h):
    P = structure("delta4")
    assert P.bracket(f, g * h) == P.bracket(f, g) * h + g * P.bracket(f, h)
    assert P.bracket(f, g) == -P.bracket(g, f)


@pytest.mark.parametrize("case", CASES)
def test_jacobi(case):
    assert check_jacobi(structure(case))


@pytest.mark.parametrize("case", CASES)
def test_multiplicativity(case):
    assert check_multiplicativity(structure(case))


def test_delta2_coproduct_of_bracket():
    P = structure("delta2")
    delta = coproduct_substitution()
    lhs = P.bracket(eta.subs(delta), etabar.subs(delta), "_1") + P.bracket(eta.subs(delta), etabar.subs(delta), "_2")
    assert lhs == (leg(c, 1) + leg(c, 2)) * -2


def test_zero_structure():
    P = PoissonStructure({})
    assert P.is_zero() and check_jacobi(P) and check_multiplicativity(P)


def test_hand_built_table():
    P = PoissonStructure({("a", "b"): c, ("b", "c"): 0, ("a", "c"): b}, ("a", "b", "c"))
    v = check_jacobi(P)
    assert v or v.witness is not None


def test_jacobi_failure_has_witness():
    P = PoissonStructure({("a", "b"): a * a, ("b", "c"): a, ("a", "c"): b}, ("a", "b", "c"))
    v = check_jacobi(P)
    assert not v and v.witness == ("a", "b", "c")


def test_multiplicativity_failure():
    P = PoissonStructure({("a", "b"): Poly.const(1)})
    assert not check_multiplicativity(P)


def test_left_chirality_is_not_multiplicative():
    left = poisson_from_cocycle(assemble_cocycle(builtin_cobracket("delta1")), "left")
    assert not check_multiplicativity(left)


# first order of the quantum function algebras ---------------------------------

def test_dprime_constant():
    res = semiclassical_check(structure("delta2"), builtin_family("Dprime"))
    assert res and res.scalar == GaussianRational(0, -1) / 2


@pytest.mark.parametrize("sval, lam", [(1, 2), (2, 1)])
def test_aprime_constant(sval, lam):
    res = semiclassical_check(structure("delta1"), builtin_family("Aprime"), s=sval)
    assert res and res.scalar == lam and res.parameter == "hbar"


def test_bprime_needs_rotated_delta3():
    H = builtin_family("Bprime")
    assert not semiclassical_check(structure("delta3"), H)
    rotated = apply_automorphism(builtin_cobracket("delta3"), AutomorphismSpec(cos=0, sin=-1))
    res = semiclassical_check(poisson_from_cocycle(assemble_cocycle(rotated)), H)
    assert res and res.scalar == 1


def test_partners():
    assert semiclassical_partner("Aprime") == builtin_cobracket("delta1")
    with pytest.raises(ValueError):
        semiclassical_partner("A")


def test_undeformed_algebra_against_zero_structure():
    res = semiclassical_check(PoissonStructure({}), builtin_family("Dprime").specialize(0))
    assert res


def test_enveloping_family_rejected():
    with pytest.raises(ValueError):
        semiclassical_check(structure("delta2"), builtin_family("D"))
