from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lieschur.errors import AlphabetMismatchError, FieldMismatchError
from lieschur.freealg import (Alphabet, NCPoly, augmentation, left_decompose, ncp_add,
                              ncp_degree, ncp_mul, parse_poly, reassemble)
from lieschur.freelie import bracket
from lieschur.scalar import FieldSpec

Q = FieldSpec(0)
A = Alphabet(("x", "y"))


def P(text, F=Q, alphabet=A):
    return parse_poly(text, alphabet, F)


def test_add_examples():
    assert ncp_add(P("x"), P("y")) == P("x + y")
    assert not ncp_add(P("x"), P("-x"))
    assert ncp_add(P("x*y + 1"), P("1")) == P("x*y + 2")


def test_mul_examples():
    assert ncp_mul(P("x"), P("y")) == NCPoly.from_word(A, Q, (0, 1))
    assert ncp_mul(P("x + y"), P("x")) == P("x*x + y*x")
    assert ncp_mul(P("y"), P("x")) != ncp_mul(P("x"), P("y"))


def test_degree_examples():
    assert ncp_degree(P("x*y + x")) == 2
    assert ncp_degree(P("0")) is None
    assert ncp_degree(P("1")) == 0


def test_left_decompose_examples():
    assert left_decompose(P("x*y + x")) == {0: P("y + 1")}
    assert left_decompose(P("y*x + x*y")) == {0: P("y"), 1: P("x")}
    assert left_decompose(bracket(P("y"), P("x"))) == {0: P("-y"), 1: P("x")}
    with pytest.raises(ValueError):
        left_decompose(P("x + 1"))


def test_augmentation_examples():
    assert augmentation(P("3 + x*y")) == 3
    assert augmentation(P("x")) == 0
    assert augmentation(P("0")) == 0


def test_printing_and_coefficients():
    p = P("2*x*y - y^2 + 1/2")
    assert p.coefficient((0, 1)) == 2
    assert p.coefficient((1, 1)) == -1
    assert p.coefficient(()) == Fraction(1, 2)
    assert P(str(p)) == p
    assert p.homogeneous_components()[2] == P("2*x*y - y*y")
    assert not p.is_homogeneous()


def test_characteristic_reduction():
    F2 = FieldSpec(2)
    assert not P("x*y + x*y", F2)
    assert P("3*x", FieldSpec(3)) == P("0", FieldSpec(3))


def test_mismatch_errors():
    B = Alphabet(("x", "z"))
    with pytest.raises(AlphabetMismatchError):
        P("x") + P("x", alphabet=B)
    with pytest.raises(FieldMismatchError):
        P("x") * P("x", FieldSpec(2))


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(("x", "x"))
    with pytest.raises(ValueError):
        Alphabet(())


words = st.lists(st.integers(0, 1), max_size=3).map(tuple)
coeffs = st.fractions(max_denominator=5).filter(bool)
polys = st.dictionaries(words, coeffs, max_size=4).map(lambda d: NCPoly(A, Q, d))


@settings(max_examples=150)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    one = NCPoly.const(A, Q)
    assert one * p == p == p * one
    assert not (p - p)


@given(polys, polys)
def test_degree_is_additive(p, q):
    if p and q:
        assert ncp_degree(p * q) == ncp_degree(p) + ncp_degree(q)


@given(polys)
def test_decompose_reassembles(p):
    p = p - NCPoly.const(A, Q, augmentation(p))
    assert reassemble(A, Q, left_decompose(p)) == p
