import pytest

from e2quantum.duality import DualityPairing, derive_dual_coproduct, generator_pairing
from e2quantum.noncomm import NCPolynomial
from e2quantum.polynomial import Poly
from e2quantum.scalars import GaussianRational, I

W = NCPolynomial.word
h = Poly.var("h")
ANTI = W(("P1",), ("P2",)) - W(("P2",), ("P1",))


def primitive(x):
    return W((x,), ()) + W((), (x,))


def test_generator_pairing():
    p = generator_pairing()
    assert p[("P1", "eta")] == I and p[("P1", "etabar")] == I
    assert p[("P2", "eta")] == -1 and p[("P2", "etabar")] == 1
    assert p[("J", "c")] == -I
    assert not p[("J", "eta")] and not p[("P1", "c")]


@pytest.mark.parametrize("x", ["P1", "P2"])
def test_translations_stay_primitive(x):
    assert derive_dual_coproduct(X=x, degree=2).coproduct == primitive(x)


def test_rotation_gets_antisymmetric_correction():
    res = derive_dual_coproduct(X="J", degree=2)
    assert res.coproduct.coefficient("h", 0) == primitive("J")
    assert res.correction_constant == GaussianRational(0, -1) / 4
    assert res.first_order() == ANTI * Poly.const(res.correction_constant)
    assert res.coproduct == primitive("J") + ANTI * (h * res.correction_constant)


def test_result_stable_in_degree():
    assert derive_dual_coproduct(X="J", degree=3).coproduct == derive_dual_coproduct(X="J", degree=2).coproduct


def test_ordered_convention_adds_symmetric_term():
    res = derive_dual_coproduct(X="J", degree=2, convention="pbw")
    assert res.correction_constant is None
    sym = W(("P1",), ("P1",)) + W(("P2",), ("P2",))
    weyl = derive_dual_coproduct(X="J", degree=2).first_order()
    assert res.first_order() == weyl - sym * Poly.const(GaussianRational(1) / 4)


def test_unit_pairs_to_zero():
    dp = DualityPairing(degree=2)
    for x in ("P1", "P2", "J"):
        assert not dp.pair((x,), NCPolynomial.one())
    assert dp.pair((), NCPolynomial.one()) == Poly.const(1)


def test_words_pair_through_coproduct():
    dp = DualityPairing(degree=2)
    eta, etabar = NCPolynomial.gen("eta"), NCPolynomial.gen("etabar")
    # <P1 P1, eta etabar> = <P1, eta><P1, etabar> + <P1, etabar><P1, eta>
    assert dp.pair(("P1", "P1"), eta * etabar) == Poly.const(I * I * 2)


def test_bad_arguments():
    with pytest.raises(ValueError):
        derive_dual_coproduct(X="K")
    with pytest.raises(ValueError):
        DualityPairing(convention="other")
