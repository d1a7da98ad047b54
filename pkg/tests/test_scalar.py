from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lieschur.errors import FieldMismatchError
from lieschur.scalar import (FieldSpec, Scalar, int_to_scalar, scalar_add, scalar_inv,
                             scalar_mul)

Q = FieldSpec(0)
F2, F3, F5, F7 = (FieldSpec(p) for p in (2, 3, 5, 7))


def s(v, F=Q):
    return Scalar.of(v, F)


def test_add_examples():
    assert scalar_add(s(Fraction(1, 2)), s(Fraction(1, 3))) == Fraction(5, 6)
    assert scalar_add(s(1, F2), s(1, F2)) == 0
    assert scalar_add(s(2, F3), s(2, F3)).value == 1


def test_mul_examples():
    assert scalar_mul(s(Fraction(2, 3)), s(Fraction(3, 4))) == Fraction(1, 2)
    assert scalar_mul(s(3, F5), s(4, F5)).value == 2
    assert scalar_mul(s(Fraction(7, 9)), s(0)) == 0


def test_inv_examples():
    assert scalar_inv(s(Fraction(3, 7))) == Fraction(7, 3)
    assert scalar_inv(s(3, F7)).value == 5
    assert scalar_inv(s(1)) == 1
    with pytest.raises(ZeroDivisionError):
        scalar_inv(s(0, F7))


def test_int_to_scalar_examples():
    assert int_to_scalar(4, F2) == 0
    assert int_to_scalar(4, Q) == 4
    assert int_to_scalar(2, F3).value == 2


def test_canonical_representatives():
    assert s(Fraction(4, -6)).value == Fraction(-2, 3)
    assert s(-1, F7).value == 6
    assert s(Fraction(1, 2), F7).value == 4


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        s(1, F2) + s(1, F3)
    with pytest.raises(FieldMismatchError):
        s(1, F2) * s(1)


def test_field_spec_validation():
    assert FieldSpec.parse("Q") == Q
    assert FieldSpec.parse("Fp:5") == F5
    assert str(F5) == "Fp:5" and F5.kind == "PrimeField" and Q.kind == "Rationals"
    with pytest.raises(ValueError):
        FieldSpec(4)
    with pytest.raises(ValueError):
        FieldSpec(2**61 + 1)
    with pytest.raises(ValueError):
        FieldSpec.parse("R")


@pytest.mark.parametrize("F", [Q, F2, F3, F7])
def test_int_to_scalar_vanishes_iff_char_divides(F):
    for m in range(-100, 101):
        expected_zero = (m % F.p == 0) if F.p else m == 0
        assert (not int_to_scalar(m, F)) == expected_zero


def _elements(F):
    if F.p:
        return st.integers(0, F.p - 1).map(lambda v: Scalar.of(v, F))
    return st.fractions(max_denominator=50).map(lambda v: Scalar.of(v, F))


@pytest.mark.parametrize("F", [Q, F2, F3, F7, FieldSpec(1000003)])
def test_field_axioms(F):
    @given(_elements(F), _elements(F), _elements(F))
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == 0
        if a:
            assert a * a.inverse() == 1

    check()
