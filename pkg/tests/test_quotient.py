import random
from math import comb

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import F2, F3, Q, commutative, solvable
from lieschur.errors import DegreeCapError, PresentationError
from lieschur.freealg import Alphabet, parse_poly
from lieschur.quotient import (FREE_ABELIAN, STRUCTURE_CONSTANTS, QuotientPresentation,
                               UQElement, parse_uq, project, straighten, straighten_with,
                               uq_degree, uq_mul, validate_presentation)

E1, E2 = 0, 1


def U(text, pres):
    return parse_uq(text, pres)


def test_validate_examples():
    A = Alphabet(("x", "y"))
    abelian = QuotientPresentation(STRUCTURE_CONSTANTS, Q, A, ("e1", "e2"), {}, [{0: 1}, {1: 1}])
    assert validate_presentation(abelian)
    assert validate_presentation(solvable())
    with pytest.raises(PresentationError, match="antisymm"):
        QuotientPresentation(STRUCTURE_CONSTANTS, Q, A, ("e1", "e2"),
                             {(0, 1): {0: 1}, (1, 0): {0: 1}}, [{0: 1}, {1: 1}])


def test_jacobi_violation_names_triple():
    A = Alphabet(("x",))
    table = {(0, 1): {1: 1}, (0, 2): {2: 1}, (1, 2): {0: 1}}
    with pytest.raises(PresentationError, match="e1.*e2.*e3"):
        QuotientPresentation(STRUCTURE_CONSTANTS, Q, A, ("e1", "e2", "e3"), table, [{0: 1}])


def test_straighten_examples(solv):
    assert straighten(solv, (E2, E1)) == U("e1*e2 - e2", solv)
    assert straighten(solv, (E1, E2)) == U("e1*e2", solv)
    assert straighten(solv, (E2, E2, E1)) == U("e1*e2^2 - 2*e2^2", solv)


def test_uq_mul_examples(solv):
    e1, e2 = UQElement.basis_element(solv, 0), UQElement.basis_element(solv, 1)
    assert uq_mul(e1, e2) == U("e1*e2", solv)
    assert uq_mul(e2, e1) == U("e1*e2 - e2", solv)
    assert uq_mul(e1 + 1, e1) == U("e1^2 + e1", solv)


def test_project_examples(solv, comm):
    A = solv.alphabet
    assert project(solv, parse_poly("x", A, Q)) == U("e1", solv)
    assert not project(comm, parse_poly("y*x - 3*x*y", A, Q))
    assert project(solv, parse_poly("x*y - y*x", A, Q)) == U("e2", solv)


def test_degree_examples(solv):
    assert uq_degree(U("e1*e2^2", solv)) == 3
    assert uq_degree(UQElement.zero(solv)) is None
    assert uq_degree(U("5", solv)) == 0


def test_non_normal_monomial_rejected(solv):
    with pytest.raises(ValueError):
        UQElement(solv, {(1, 0): 1})


def test_degree_cap():
    pres = solvable(max_degree=4)
    e1 = UQElement.basis_element(pres, 0)
    assert uq_degree(e1 ** 4) == 4
    with pytest.raises(DegreeCapError) as info:
        e1 ** 5
    assert info.value.cap == 4 and info.value.degree == 5


def test_free_abelian_kind():
    A = Alphabet(("x", "y", "z"))
    pres = QuotientPresentation.free_abelian(F2, A, ("x", "z"))
    assert pres.kind == FREE_ABELIAN and pres.dim == 2 and pres.is_commutative
    assert project(pres, parse_poly("z*y*x + z*x", A, F2)) == parse_uq("x*z", pres)


def _closed_form(a, b, pres):
    """e2^b e1^a = (e1 - b)^a e2^b in the solvable algebra."""
    F = pres.field
    terms = {}
    for k in range(a + 1):
        c = F.coerce(comb(a, k) * (-b) ** (a - k))
        if c:
            terms[(E1,) * k + (E2,) * b] = c
    return UQElement(pres, terms)


@pytest.mark.parametrize("F", [Q, F2, F3])
def test_straighten_against_shift_formula(F):
    pres = solvable(F)
    for a in range(5):
        for b in range(5):
            assert straighten(pres, (E2,) * b + (E1,) * a) == _closed_form(a, b, pres)


def _matrix_rep():
    t, s = sympy.symbols("t s")
    e1 = sympy.diag(t + 2, t + 1, t)
    e2 = sympy.zeros(3)
    e2[0, 1], e2[1, 2] = 1, s
    assert sympy.expand(e1 * e2 - e2 * e1 - e2) == sympy.zeros(3)
    return e1, e2


def _evaluate(elem, mats):
    out = sympy.zeros(3)
    for mono, c in elem:
        m = sympy.eye(3)
        for i in mono:
            m = m * mats[i]
        out += sympy.Rational(c.numerator, c.denominator) * m
    return sympy.expand(out)


def test_straighten_matches_matrix_representation(solv):
    mats = _matrix_rep()
    rng = random.Random(5)
    for length in range(4):
        for _ in range(6):
            word = tuple(rng.randrange(2) for _ in range(length))
            direct = sympy.eye(3)
            for i in word:
                direct = direct * mats[i]
            assert _evaluate(straighten(solv, word), mats) == sympy.expand(direct)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 1), max_size=6))
def test_rewrite_order_is_irrelevant(word):
    pres = solvable()
    word = tuple(word)
    assert straighten_with(pres, word, "leftmost") == straighten_with(pres, word, "rightmost")
    assert straighten_with(pres, word, "rightmost") == straighten(pres, word)


def _heisenberg():
    A = Alphabet(("x", "y"))
    return QuotientPresentation(STRUCTURE_CONSTANTS, Q, A, ("a", "b", "c"), {(0, 1): {2: 1}},
                                [{0: 1}, {1: 1}], max_degree=16)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=5), st.lists(st.integers(0, 2), max_size=5),
       st.lists(st.integers(0, 2), max_size=5))
def test_product_is_associative(u, v, w):
    pres = _heisenberg()
    a, b, c = (straighten(pres, tuple(x)) for x in (u, v, w))
    assert (a * b) * c == a * (b * c)
    assert straighten(pres, tuple(u) + tuple(v)) == a * b


@pytest.mark.parametrize("pres", [solvable(), commutative(), solvable(F2)],
                         ids=["solvable", "commutative", "solvable-F2"])
def test_projection_is_a_homomorphism(pres):
    rng = random.Random(11)
    A = pres.alphabet
    from lieschur.checks import random_ncpoly
    for _ in range(30):
        p = random_ncpoly(rng, A, pres.field)
        q = random_ncpoly(rng, A, pres.field)
        assert project(pres, p * q) == project(pres, p) * project(pres, q)
        assert project(pres, p + q) == project(pres, p) + project(pres, q)


def test_printing_round_trip(solv):
    x = U("3*e1^2*e2 - 1/2*e2 + 4", solv)
    assert U(str(x), solv) == x
