import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from e2quantum.hopf import builtin_family
from e2quantum.noncomm import NCPolynomial, Normalizer, RewriteSystem, check_local_confluence, normal_form
from e2quantum.polynomial import Poly

from conftest import gaussians

W = NCPolynomial.word
G = NCPolynomial.gen


def random_reduce(p: NCPolynomial, R: RewriteSystem, rng: random.Random) -> NCPolynomial:
    """Reduce by rewriting a randomly chosen redex until nothing applies."""
    while True:
        redexes = [(key, c, pos) for key, c in p.terms.items() for pos in range(len(key[0]) - 1)
                   if R.rewrite_at(key[0], pos) is not None]
        if not redexes:
            return p
        key, c, pos = rng.choice(redexes)
        p = p - NCPolynomial({key: c}) + R.rewrite_at(key[0], pos) * c


def test_family_a_rule():
    H = builtin_family("A", 4)
    assert H.normalizer().normal_form(G("J") * G("P+")) == G("P+") * G("J") + G("P+")


def test_family_aprime_rule():
    H = builtin_family("Aprime")
    q = Poly.var("q")
    assert H.normalizer().normal_form(G("eta") * G("etabar")) == G("etabar") * G("eta") * (q * q)


def test_empty_word():
    R = builtin_family("D").system
    assert normal_form(NCPolynomial.one(), R) == NCPolynomial.one()


def test_inverse_pairs_cancel():
    R = builtin_family("Bprime").system
    assert normal_form(G("t") * G("tbar"), R) == NCPolynomial.one()
    assert normal_form(G("tbar") * G("t"), R) == NCPolynomial.one()


def test_rule_free_alphabet_is_confluent():
    assert check_local_confluence(RewriteSystem(("x", "y"), {}), 4)


@pytest.mark.parametrize("tag", ["Aprime", "Bprime", "Dprime", "D"])
def test_exact_families_confluent(tag):
    assert check_local_confluence(builtin_family(tag).system, 4)


def test_bprime_overlap():
    R = builtin_family("Bprime").system
    word = ("t", "eta", "etabar")
    rng = random.Random(3)
    reference = normal_form(W(word), R)
    for _ in range(10):
        assert random_reduce(W(word), R, rng) == reference


def test_non_confluent_system_detected():
    R = RewriteSystem(("x", "y", "z"), {("y", "x"): G("x"), ("z", "x"): NCPolynomial.zero(), ("z", "y"): G("y")})
    v = check_local_confluence(R, 3)
    assert not v and v.witness["word"] == ["z", "y", "x"]


def test_ascending_rule_rejected():
    with pytest.raises(ValueError):
        RewriteSystem(("x", "y"), {("x", "y"): G("y")})


def test_tensor_and_flip():
    p = W(("P1",), ("J",)) * 2 - W((), ("P2", "P2"))
    assert p.legs == 2
    assert p.flip().flip() == p
    assert p.flip() == W(("J",), ("P1",)) * 2 - W(("P2", "P2"), ())
    assert G("P1").tensor(G("J")) == W(("P1",), ("J",))


def test_string_form():
    assert str(W(("P1",), ("P2", "J"), coeff=Poly.var("h"))) == "h*P1 ⊗ P2*J"


FAMILY_WORDS = {
    "B": ("P1", "P2", "J"),
    "D": ("P1", "P2", "J"),
    "Aprime": ("etabar", "eta", "t", "tbar"),
    "Dprime": ("etabar", "eta", "c", "t", "tbar"),
}


@st.composite
def family_polys(draw, tag):
    gens = FAMILY_WORDS[tag]
    out = NCPolynomial.zero()
    for _ in range(draw(st.integers(1, 3))):
        w = tuple(draw(st.lists(st.sampled_from(gens), max_size=4)))
        out = out + W(w) * draw(gaussians)
    return out


_systems = {tag: builtin_family(tag, 4).system for tag in FAMILY_WORDS}


@given(st.sampled_from(sorted(FAMILY_WORDS)).flatmap(lambda t: st.tuples(st.just(t), family_polys(t), family_polys(t))), gaussians)
def test_normal_form_idempotent_and_linear(data, z):
    tag, p, q = data
    nz = Normalizer(_systems[tag])
    np_ = nz.normal_form(p)
    assert nz.normal_form(np_) == np_
    assert all(_systems[tag].is_normal(w) for (w,) in np_.terms)
    assert nz.normal_form(p + q * z) == np_ + nz.normal_form(q) * z


@given(st.sampled_from(sorted(FAMILY_WORDS)).flatmap(lambda t: st.tuples(st.just(t), family_polys(t))), st.integers(0, 1000))
def test_reduction_order_irrelevant(data, seed):
    tag, p = data
    R = _systems[tag]
    assert random_reduce(p, R, random.Random(seed)) == normal_form(p, R)


@given(st.sampled_from(sorted(FAMILY_WORDS)).flatmap(lambda t: st.tuples(st.just(t), family_polys(t), family_polys(t), family_polys(t))))
def test_product_associative(data):
    tag, p, q, r = data
    nz = Normalizer(_systems[tag])
    assert nz.product(nz.product(p, q), r) == nz.product(p, nz.product(q, r))


def test_product_normalizes_non_normal_factors():
    nz = builtin_family("Aprime").normalizer()
    assert nz.product(G("tbar") * G("t"), NCPolynomial.one()) == NCPolynomial.one()
