"""Binomial basis: coefficients, transform, and its independent oracle.

The implementation computes c_n = (Delta^n p)(0) via the difference table
of values.  The oracle here is the closed alternating sum
c_n = sum_k (-1)^(n-k) C(n,k) p(k), a different route to the same numbers.
"""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from hopfwitt.binomial import (
    binomial_expand,
    binomial_int,
    binomial_poly,
    binomial_transform,
    falling_factorial,
)
from hopfwitt.poly import SparsePoly


def oracle_transform(p, deg):
    """Alternating-sum formula for the binomial coefficients of p."""
    out = []
    for n in range(deg + 1):
        c = Fraction(0)
        for k in range(n + 1):
            c += (-1) ** (n - k) * comb(n, k) * p.evaluate({"x": k})
        out.append(c)
    return out


@pytest.mark.parametrize("a,n,expected", [
    (5, 2, 10),
    (0, 0, 1),
    (3, 5, 0),
    (-1, 3, -1),
    (-2, 3, -4),
    (-4, 2, 10),
])
def test_generalized_binomial_values(a, n, expected):
    assert binomial_int(a, n) == expected


@given(st.integers(-30, 30), st.integers(0, 12))
def test_generalized_binomial_matches_polynomial_evaluation(a, n):
    assert binomial_int(a, n) == binomial_poly(n).evaluate({"x": a})


def test_binomial_poly_small_cases():
    x = SparsePoly.variable("x")
    assert binomial_poly(0) == SparsePoly.constant(1)
    assert binomial_poly(1) == x
    assert binomial_poly(2) == (x * x - x).exact_div(2)
    assert falling_factorial(3) == x * (x - 1) * (x - 2)


def test_transform_of_x_squared():
    # x^2 = C(x,1) + 2 C(x,2): values 0,1,4 -> differences 1,3 -> 2
    p = SparsePoly.parse("x^2")
    assert binomial_transform(p) == [0, 1, 2]


def test_transform_detects_non_integrality():
    p = SparsePoly.parse("1/2*x")
    coeffs = binomial_transform(p)
    assert any(c.denominator != 1 for c in coeffs)


def _poly_from_coeffs(cs):
    x = SparsePoly.variable("x")
    out = SparsePoly()
    for i, c in enumerate(cs):
        out = out + x ** i * c
    return out


@given(st.lists(st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12)),
                min_size=1, max_size=13))
def test_transform_matches_oracle_and_round_trips(cs):
    p = _poly_from_coeffs(cs)
    deg = p.total_degree()
    got = binomial_transform(p)
    if deg is None:
        assert got == []
        return
    assert got == oracle_transform(p, deg)
    back = binomial_expand({n: c for n, c in enumerate(got)})
    # expansion accepts Fractions here even though typical use is ints
    assert back == p


@given(st.integers(0, 10), st.integers(0, 10))
def test_products_of_basis_elements_are_integer_valued(m, n):
    p = binomial_poly(m) * binomial_poly(n)
    assert all(c.denominator == 1 for c in binomial_transform(p))
