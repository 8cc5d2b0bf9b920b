
import pytest
from hypothesis import given
from hypothesis import strategies as st

from e2quantum.linalg import LinearSystem, invert_matrix
from e2quantum.polynomial import Poly
from e2quantum.scalars import GaussianRational, I

from conftest import gaussians


def G(x):
    return GaussianRational.coerce(x)


def test_unique_solution():
    sys_ = LinearSystem(["x", "y"])
    sys_.add_equation({"x": G(1), "y": G(1)}, G(3))
    sys_.add_equation({"x": G(1), "y": G(-1)}, G(1))
    sol = sys_.solve()
    assert sol.values == {"x": G(2), "y": G(1)} and not sol.kernel


def test_kernel_reported():
    sys_ = LinearSystem(["x", "y", "z"])
    sys_.add_equation({"x": G(1), "y": I}, None)
    sol = sys_.solve()
    assert len(sol.kernel) == 2
    for vec in sol.kernel:
        assert vec.get("x", G(0)) + I * vec.get("y", G(0)) == 0


def test_inconsistency_certificate():
    sys_ = LinearSystem(["x"])
    sys_.add_equation({"x": G(1)}, G(1), label="first")
    sys_.add_equation({"x": G(2)}, G(3), label="second")
    assert not sys_.consistent
    assert sys_.inconsistencies[0].residual == G(1)


def test_symbolic_right_hand_side():
    s = Poly.var("s")
    sys_ = LinearSystem(["x"], zero=Poly())
    sys_.add_equation({"x": G(1)}, s)
    sys_.add_equation({"x": G(1)}, Poly())
    assert not sys_.consistent
    assert sys_.inconsistencies[0].residual in (s, -s)


def test_singular_matrix():
    with pytest.raises(ValueError):
        invert_matrix([[G(1), G(2)], [G(2), G(4)]])


square = st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(gaussians, min_size=n, max_size=n), min_size=n, max_size=n))


@given(square)
def test_inverse_when_invertible(m):
    try:
        inv = invert_matrix(m)
    except ValueError:
        return
    n = len(m)
    for i in range(n):
        for j in range(n):
            entry = sum((m[i][k] * inv[k][j] for k in range(n)), G(0))
            assert entry == G(1 if i == j else 0)


@given(square, st.lists(gaussians, min_size=4, max_size=4))
def test_solution_satisfies_system(m, x):
    n = len(m)
    names = [f"x{i}" for i in range(n)]
    sys_ = LinearSystem(names)
    for row in m:
        rhs = sum((row[k] * x[k] for k in range(n)), G(0))
        sys_.add_equation({names[k]: row[k] for k in range(n) if row[k]}, rhs)
    assert sys_.consistent
    sol = sys_.solve()
    for row in m:
        got = sum((row[k] * sol.values.get(names[k], G(0)) for k in range(n)), G(0))
        assert got == sum((row[k] * x[k] for k in range(n)), G(0))
        for vec in sol.kernel:
            assert sum((row[k] * vec.get(names[k], G(0)) for k in range(n)), G(0)) == 0
    assert sol.rank + len(sol.kernel) == n
