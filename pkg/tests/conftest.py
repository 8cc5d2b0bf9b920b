from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from e2quantum.polynomial import Poly
from e2quantum.scalars import GaussianRational

settings.register_profile(
    "exact", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(bool)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)


@st.composite
def polys(draw, variables=("a", "b", "u", "v"), max_terms=4, max_exp=3):
    out = Poly()
    for _ in range(draw(st.integers(0, max_terms))):
        term = Poly.const(draw(gaussians))
        for var in variables:
            e = draw(st.integers(0, max_exp))
            if e:
                term = term * Poly.var(var, e)
        out = out + term
    return out


def frac(p, q=1):
    return GaussianRational(Fraction(p, q))
