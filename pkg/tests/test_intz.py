"""Integer-valued polynomials: ring, Hopf structure, filtration, pairing.

Oracle strategy: products are cross-checked pointwise (an integer-valued
polynomial is determined by its values), the comultiplication against the
substitution identity f(a+b) = sum (Delta f)_{m,n} C(a,m) C(b,n), and the
antipode against the closed form f(x) -> f(-x) which the recursion never
uses.
"""

import pytest
from hypothesis import given, strategies as st

from hopfwitt.binomial import binomial_int
from hopfwitt.errors import FalsificationError, InputError
from hopfwitt.intz import (
    IntZElement,
    TensorElement,
    antipode,
    antipode_basis,
    basis_product,
    comult,
    counit,
    eval_at,
    fil_member,
    filtration_degree,
    frobenius_mod_p_identity,
    graded_constant,
    group_like,
    mult,
    pair,
    pair_tensor,
    series_group_law,
)
from hopfwitt.poly import SparsePoly
from hopfwitt.series import TruncSeries


C = IntZElement.basis


def elt(**kw):
    return IntZElement({int(k[1:]): v for k, v in kw.items()})


# -- construction -----------------------------------------------------------

def test_from_poly_accepts_integer_valued():
    f = IntZElement.from_poly(SparsePoly.parse("x^2"))
    assert f == elt(c1=1, c2=2)


def test_from_poly_rejects_non_integer_valued():
    with pytest.raises(InputError):
        IntZElement.from_poly(SparsePoly.parse("1/2*x"))


def test_round_trip_through_q_of_x():
    f = elt(c0=-4, c1=1, c2=3)
    assert IntZElement.from_poly(f.to_poly()) == f


def test_parse_text_form():
    f = IntZElement.parse("3*C(x,2)+C(x,1)-4")
    assert f == elt(c0=-4, c1=1, c2=3)
    assert str(f) == "-4+C(x,1)+3*C(x,2)"
    assert IntZElement.parse(str(f)) == f


@pytest.mark.parametrize("bad", ["", "C(x,)", "2**C(x,1)", "C(x,1)C(x,2)", "3*", "+"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(InputError):
        IntZElement.parse(bad)


def test_json_round_trip():
    f = elt(c0=-4, c1=1, c2=3)
    assert IntZElement.from_json(f.to_json()) == f
    assert f.to_json() == '{"coeffs":{"0":"-4","1":"1","2":"3"}}'


# -- multiplication ---------------------------------------------------------

def test_product_of_degree_one_generators():
    assert mult(C(1), C(1)) == elt(c1=1, c2=2)


def test_square_of_c2():
    assert mult(C(2), C(2)) == elt(c2=1, c3=6, c4=6)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(-8, 8))
def test_product_agrees_with_pointwise_values(m, n, a):
    prod = mult(C(m), C(n))
    assert eval_at(prod, a) == binomial_int(a, m) * binomial_int(a, n)


def test_basis_product_cache_matches_mult():
    assert basis_product(3, 5) == mult(C(3), C(5))
    assert basis_product(5, 3) == basis_product(3, 5)


# -- comultiplication -------------------------------------------------------

def test_comult_closed_form_degree_2():
    assert comult(C(2)) == TensorElement({(0, 2): 1, (1, 1): 1, (2, 0): 1})


def test_comult_is_linear():
    f = elt(c1=2, c3=-1)
    lhs = comult(f)
    rhs = TensorElement(
        {(0, 1): 2, (1, 0): 2, (0, 3): -1, (1, 2): -1, (2, 1): -1, (3, 0): -1}
    )
    assert lhs == rhs


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("a", [-3, -1, 0, 2, 3])
@pytest.mark.parametrize("b", [-3, -2, 0, 1, 3])
def test_comult_substitution_oracle(n, a, b):
    """C(a+b, n) = sum over the coproduct support of C(a,i) C(b,j)."""
    total = sum(
        c * binomial_int(a, i) * binomial_int(b, j)
        for (i, j), c in comult(C(n)).items()
    )
    assert total == binomial_int(a + b, n)


def test_x_is_primitive():
    assert comult(C(1)) == TensorElement({(1, 0): 1, (0, 1): 1})


# -- counit, evaluation, antipode ------------------------------------------

def test_counit_is_evaluation_at_zero():
    f = elt(c0=7, c1=3, c4=-2)
    assert counit(f) == 7 == eval_at(f, 0)


def test_eval_at_negative_points():
    assert eval_at(C(3), -1) == binomial_int(-1, 3) == -1


def test_antipode_known_values():
    assert antipode_basis(0) == IntZElement.one()
    assert antipode_basis(1) == elt(c1=-1)
    assert antipode_basis(2) == elt(c1=1, c2=1)


@pytest.mark.parametrize("n", range(9))
def test_antipode_matches_substitution_oracle(n):
    """S(f) = f(-x), computed by substitution in Q[x]."""
    flipped = antipode_basis(n).to_poly()
    direct = C(n).to_poly().substitute({"x": -SparsePoly.variable("x")})
    assert flipped == direct


@pytest.mark.parametrize("n", range(7))
def test_antipode_law_on_basis(n):
    """m(S (x) id) Delta = unit . counit on C(x,n)."""
    acc = IntZElement()
    for (i, j), c in comult(C(n)).items():
        acc = acc + mult(antipode_basis(i), C(j)).scale(c)
    expected = IntZElement.one().scale(counit(C(n)))
    assert acc == expected


# -- filtration -------------------------------------------------------------

def test_filtration_degree_and_membership():
    f = elt(c1=2, c3=1)
    assert filtration_degree(f) == 3
    assert fil_member(f, 3) and not fil_member(f, 2)


def test_zero_element_is_in_every_stage():
    assert filtration_degree(IntZElement.zero()) is None
    assert fil_member(IntZElement.zero(), 0)


@given(st.integers(0, 6), st.integers(0, 6))
def test_product_filtration_degree_is_additive(m, n):
    assert filtration_degree(mult(C(m), C(n))) == m + n


@pytest.mark.parametrize("m,n,expected", [
    (1, 1, 2), (2, 1, 3), (2, 2, 6), (0, 5, 1), (3, 2, 10),
])
def test_graded_constant_spot_values(m, n, expected):
    assert graded_constant(m, n) == expected


# -- Frobenius mod p --------------------------------------------------------

def test_frobenius_identity_on_basis():
    assert frobenius_mod_p_identity(C(2), 2)
    assert frobenius_mod_p_identity(elt(c1=1, c5=3), 5)


def test_frobenius_identity_rejects_composite():
    with pytest.raises(InputError):
        frobenius_mod_p_identity(C(1), 4)
    with pytest.raises(InputError):
        frobenius_mod_p_identity(C(1), 1)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("coeffs", [
    {1: 1}, {2: 1}, {0: 3, 1: -2}, {1: 1, 2: 1, 3: 1}, {3: -5},
])
def test_frobenius_identity_against_slow_multiplication(p, coeffs):
    """Independent route: build f^p by repeated basis multiplication and
    check coefficient divisibility directly."""
    f = IntZElement(coeffs)
    power = IntZElement.one()
    for _ in range(p):
        power = mult(power, f)
    diff = power - f
    slow = all(c % p == 0 for _, c in diff.items())
    assert frobenius_mod_p_identity(f, p) == slow
    assert slow  # the identity is a theorem for integer-valued f


# -- pairing ----------------------------------------------------------------

def test_pairing_picks_out_dual_coefficients():
    s = TruncSeries("u", 5, (7, -1, 4, 0, 2))
    assert pair(C(2), s) == 4
    assert pair(elt(c0=1, c2=3), s) == 7 + 12


def test_pairing_requires_enough_truncation():
    s = TruncSeries("u", 3, (1, 1, 1))
    with pytest.raises(InputError):
        pair(C(3), s)
    # degree < trunc is fine
    assert pair(C(2), s) == 1


@pytest.mark.parametrize("a", range(-4, 5))
@pytest.mark.parametrize("n", range(0, 7))
def test_group_like_pairing_gives_binomials(a, n):
    s = group_like(a, trunc=8)
    assert pair(C(n), s) == binomial_int(a, n)


def test_mult_comult_duality_small():
    """<f*g, s> = <f (x) g, s(u1+u2+u1u2)> on a nontrivial sample."""
    f, g = C(1), C(2)
    s = TruncSeries("u", 6, (2, -1, 3, 1, 0, 5))
    law = series_group_law(s)
    lhs = pair(mult(f, g), s)
    rhs = pair_tensor(TensorElement.simple(f, g), law)
    assert lhs == rhs


def test_comult_mult_duality_small():
    """<Delta f, s (x) s'> = <f, s*s'>."""
    f = elt(c1=1, c3=2)
    s = TruncSeries("u", 6, (1, 2, 0, -1, 1, 0))
    sp = TruncSeries("u", 6, (0, 1, 1, 0, 2, -3))
    lhs = sum(
        c * pair(C(m), s) * pair(C(n), sp) for (m, n), c in comult(f).items()
    )
    assert lhs == pair(f, s * sp)


def test_mult_integrality_trap_is_falsification(monkeypatch):
    """A non-integral re-transform inside mult is a falsification event,
    not a user error.  It cannot happen through the public API (that is
    the theorem), so inject a broken transform."""
    from fractions import Fraction

    import hopfwitt.intz as intz_mod

    monkeypatch.setattr(
        intz_mod, "binomial_transform", lambda p, var="x": [Fraction(1, 2)]
    )
    with pytest.raises(FalsificationError):
        mult(C(1), C(1))
