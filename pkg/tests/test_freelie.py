import random
from itertools import product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from lieschur.checks import random_bracket_tree, random_lie
from lieschur.errors import CriterionUnavailableError, ParseError
from lieschur.freealg import Alphabet, NCPoly, parse_poly
from lieschur.freelie import (Bracket, Leaf, adjoint_action, bracket, dynkin_map,
                              is_lie_element, left_normed, left_normed_tree, parse_lie,
                              tree_leaves, tree_value)
from lieschur.scalar import FieldSpec

Q = FieldSpec(0)
A = Alphabet(("x", "y"))


def P(text, F=Q):
    return parse_poly(text, A, F)


def test_bracket_examples():
    assert bracket(P("x"), P("y")) == P("x*y - y*x")
    assert not bracket(P("x"), P("x"))
    assert bracket(bracket(P("x"), P("y")), P("x")) == P("-x*x*y + 2*x*y*x - y*x*x")


def test_left_normed_examples():
    assert left_normed([P("x")]) == P("x")
    assert left_normed([P("x"), P("y")]) == P("x*y - y*x")
    assert left_normed([P("x"), P("y"), P("y")]) == bracket(bracket(P("x"), P("y")), P("y"))


def test_dynkin_examples():
    assert dynkin_map(P("x")) == P("x")
    assert dynkin_map(P("x*y")) == P("x*y - y*x")
    assert dynkin_map(P("x*y - y*x")) == P("2*x*y - 2*y*x")


def test_is_lie_examples():
    assert is_lie_element(P("x*y - y*x"))
    assert not is_lie_element(P("x*y"))
    assert is_lie_element(P("0"))
    assert not is_lie_element(P("1"))


def test_dynkin_refused_in_small_characteristic():
    F2 = FieldSpec(2)
    assert is_lie_element(P("x + y", F2))
    with pytest.raises(CriterionUnavailableError):
        is_lie_element(P("x*y + y*x", F2))
    with pytest.raises(CriterionUnavailableError):
        is_lie_element(P("x*y*x", FieldSpec(3)))


def test_adjoint_examples():
    y, x = P("y"), P("x")
    assert adjoint_action(y, x) == bracket(y, x)
    assert adjoint_action(y, P("1")) == y
    assert adjoint_action(y, P("x*x")) == bracket(bracket(y, x), x)
    assert adjoint_action(y, P("2 + x")) == P("2*y") + bracket(y, x)


def test_trees():
    t = left_normed_tree([P("x"), P("y"), P("y")])
    assert isinstance(t, Bracket) and isinstance(t.left, Bracket)
    assert [str(v) for v in tree_leaves(t)] == ["x", "y", "y"]
    assert tree_value(t) == left_normed([P("x"), P("y"), P("y")])
    assert tree_value(Leaf(P("x"))) == P("x")


def test_parse_lie():
    assert parse_lie("[x, y, y]", A, Q) == left_normed([P("x"), P("y"), P("y")])
    assert parse_lie("x*y - y*x", A, Q) == P("x*y - y*x")
    # bracket-built input is accepted without the Dynkin test in any characteristic
    F2 = FieldSpec(2)
    assert parse_lie("[[x,y],x]", A, F2) == bracket(bracket(P("x", F2), P("y", F2)), P("x", F2))
    with pytest.raises(ValueError):
        parse_lie("x*y", A, Q)
    with pytest.raises(ValueError):
        parse_lie("1", A, Q)
    with pytest.raises(ParseError):
        parse_lie("[x, w]", A, Q)


def _lie_span_oracle(p: NCPoly, degree: int) -> bool:
    """Membership in the span of all left-normed brackets of letters (independent of Dynkin)."""
    words = list(product(range(len(A)), repeat=degree))
    rows = []
    for letters in product(range(len(A)), repeat=degree):
        q = left_normed([NCPoly.from_word(A, Q, (i,)) for i in letters])
        rows.append([q.coefficient(w).value for w in words])
    span = sympy.Matrix(rows)
    target = sympy.Matrix([[p.coefficient(w).value for w in words]])
    return span.rank() == span.col_join(target).rank()


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.lists(st.tuples(st.lists(st.integers(0, 1)), st.integers(-2, 2)),
                                    min_size=1, max_size=4))
def test_is_lie_matches_span_oracle(degree, terms):
    rng = random.Random(degree * 1000 + len(terms))
    p = NCPoly.zero(A, Q)
    for letters, c in terms:
        word = tuple((letters + [rng.randrange(2) for _ in range(degree)])[:degree])
        p = p + NCPoly.from_word(A, Q, word, c)
    if rng.random() < 0.5:
        p = p + random_lie(rng, A, Q, degree=degree)
    # add a genuine Lie part half of the time so both answers occur
    assert is_lie_element(p) == _lie_span_oracle(p, degree)


@pytest.mark.parametrize("seed", range(40))
def test_lie_properties(seed):
    rng = random.Random(seed)
    a, b, c = (random_lie(rng, A, Q, max_deg=3) for _ in range(3))
    assert not (bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b))
    assert bracket(a, b) == -bracket(b, a)
    m = rng.randint(1, 6)
    p = tree_value(random_bracket_tree(rng, A, Q, m))
    assert dynkin_map(p) == p.scale(m)
    u = NCPoly.from_word(A, Q, tuple(rng.randrange(2) for _ in range(rng.randint(0, 3))))
    v = NCPoly.from_word(A, Q, tuple(rng.randrange(2) for _ in range(rng.randint(0, 3))))
    assert adjoint_action(a, u * v) == adjoint_action(adjoint_action(a, u), v)
