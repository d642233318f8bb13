"""Coefficient rings: field axioms, enumeration order, serialization."""

import itertools

import pytest

from hopfwitt.errors import InputError
from hopfwitt.poly import SparsePoly
from hopfwitt.rings import (
    GaloisField,
    IntegerRing,
    PolynomialRing,
    ZModRing,
    ring_from_json_obj,
    ring_from_spec,
)


def test_integer_ring_basics():
    R = IntegerRing()
    assert R.add(R.from_int(3), R.neg(R.from_int(5))) == -2
    assert R.pow(2, 10) == 1024
    assert not R.is_finite


def test_zmod_wraps():
    R = ZModRing(9)
    assert R.from_int(13) == 4
    assert R.mul(5, 7) == 8
    assert list(R.elements()) == list(range(9))
    assert R.size() == 9


def test_zmod_rejects_tiny_modulus():
    with pytest.raises(InputError):
        ZModRing(1)


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (5, 2), (7, 2)])
def test_field_axioms_exhaustive(p, k):
    F = GaloisField(p, k)
    els = list(F.elements())
    assert len(els) == p ** k
    one, zero = F.one(), F.zero()
    # multiplicative group: every nonzero element has order dividing q-1
    q = p ** k
    for a in els:
        assert F.add(a, zero) == a
        assert F.mul(a, one) == a
        if a != zero:
            assert F.pow(a, q - 1) == one
    # a small associativity/distributivity sample over all triples for F_4
    if q <= 9:
        for a, b, c in itertools.product(els, repeat=3):
            assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_f4_multiplication_table():
    F = GaloisField(2, 2)
    w = (0, 1)
    # w^2 = w + 1 for the Conway modulus w^2 + w + 1
    assert F.mul(w, w) == (1, 1)
    assert F.mul(w, (1, 1)) == (1, 0)  # w^3 = 1


def test_f9_frobenius_fixed_field():
    F = GaloisField(3, 2)
    fixed = [a for a in F.elements() if F.pow(a, 3) == a]
    assert sorted(fixed) == sorted([F.from_int(0), F.from_int(1), F.from_int(2)])


def test_prime_field_without_extension():
    F = GaloisField(5, 1)
    assert F.mul(F.from_int(3), F.from_int(4)) == F.from_int(12)
    assert len(list(F.elements())) == 5


def test_custom_modulus_accepted_and_checked():
    # w^2 + 1 is irreducible over F_3
    F = GaloisField(3, 2, (1, 0, 1))
    w = (0, 1)
    assert F.mul(w, w) == F.from_int(-1)
    # w^2 - 1 = (w-1)(w+1) is not
    with pytest.raises(InputError):
        GaloisField(3, 2, (2, 0, 1))


def test_galois_field_rejects_bad_parameters():
    with pytest.raises(InputError):
        GaloisField(4, 2)
    with pytest.raises(InputError):
        GaloisField(2, 0)
    with pytest.raises(InputError):
        GaloisField(11, 5)  # no built-in modulus that large


def test_element_strings_round_trip():
    F = GaloisField(2, 2)
    for a in F.elements():
        assert F.element_from_str(F.element_str(a)) == a
    R = ZModRing(7)
    assert R.element_from_str("12") == 5


def test_polynomial_ring_elements_are_integer_polys():
    R = PolynomialRing()
    a = R.element_from_str("2*a1-b1")
    assert a == SparsePoly.parse("2*a1-b1")
    with pytest.raises(InputError):
        R.element_from_str("1/2*a1")


@pytest.mark.parametrize("spec,expected", [
    ("Z", IntegerRing()),
    ("Zmod:9", ZModRing(9)),
    ("Fq:3,2", GaloisField(3, 2)),
])
def test_ring_spec_parsing(spec, expected):
    assert ring_from_spec(spec) == expected


@pytest.mark.parametrize("bad", ["Q", "Zmod:x", "Fq:4,2", "Fq:3", ""])
def test_ring_spec_rejects_malformed(bad):
    with pytest.raises(InputError):
        ring_from_spec(bad)


def test_ring_json_round_trip():
    for R in (IntegerRing(), ZModRing(8), GaloisField(3, 2)):
        assert ring_from_json_obj(R.to_json_obj()) == R
