from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from deltaribbon.errors import HalfPowerNotSquare, ZeroToNegativePower
from deltaribbon.laurent import LaurentPoly, binomial_shift, clear_reciprocal, const, var
from oracles import X, Y, to_sympy

x, y, z, w = var("x"), var("y"), var("z"), var("w")


def test_evaluate_examples():
    assert x.evaluate({"x": 5}) == 5
    assert var("y", Fraction(1, 2)).evaluate({"y": 4}) == 2
    assert (1 + y * z * w).evaluate({"y": 1, "z": 1, "w": 1}) == 2


def test_evaluate_errors():
    with pytest.raises(HalfPowerNotSquare):
        var("y", Fraction(1, 2)).evaluate({"y": 2})
    with pytest.raises(ZeroToNegativePower):
        (x ** -1).evaluate({"x": 0})


def test_canonical_strings():
    assert str(1 + y * z * w) == "1 + y*z*w"
    assert str(1 + 2 * y + y ** 2 * z ** 2) == "1 + 2*y + y^2*z^2"
    assert str(x - 1) == "-1 + x"
    assert str(var("x", Fraction(1, 2)) * y ** -1) == "x^(1/2)*y^(-1)"
    assert str(const(0)) == "0"


def test_idempotent_w():
    p = LaurentPoly({(0, 0, 0, 4, 0, 0): 3}, idempotent=("w",))
    assert p == 3 * w


def test_half_power_of_monomial():
    assert (4 * x ** 2).half_power(1) == 2 * x
    assert (x * y).half_power(-1) == var("x", Fraction(-1, 2)) * var("y", Fraction(-1, 2))
    with pytest.raises(HalfPowerNotSquare):
        (x + 1).half_power(1)


def test_binomial_shift_and_clear_reciprocal():
    assert binomial_shift("y", 3) == (y - 1) ** 3
    p = 1 + z + z ** 2
    assert clear_reciprocal(p, "z", y - 1, 2) == (y - 1) ** 2 + (y - 1) + 1


small = st.dictionaries(
    st.tuples(st.integers(-2, 3), st.integers(-2, 3)), st.integers(-3, 3), max_size=4
)


def _poly(d):
    return LaurentPoly({(2 * a, 2 * b, 0, 0, 0, 0): c for (a, b), c in d.items()})


@given(small, small)
def test_arithmetic_matches_sympy(p, q):
    a, b = _poly(p), _poly(q)
    ea, eb = to_sympy(a), to_sympy(b)
    assert sp.expand(to_sympy(a + b) - (ea + eb)) == 0
    assert sp.expand(to_sympy(a * b) - ea * eb) == 0
    assert sp.expand(to_sympy(a - b) - (ea - eb)) == 0


polys_in_x = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(-2, 3)), st.integers(-3, 3), max_size=4
)


@given(polys_in_x)
def test_substitute_matches_sympy(p):
    a = _poly(p)
    got = a.substitute({"x": x + 1, "y": x * y})
    want = to_sympy(a).subs({X: X + 1, Y: X * Y}, simultaneous=True)
    assert sp.simplify(to_sympy(got) - want) == 0


def test_negative_power_of_binomial_is_refused():
    with pytest.raises(ValueError):
        (x ** -1).substitute({"x": x + 1})
