from fractions import Fraction

import pytest

from lieschur import expr
from lieschur.errors import ParseError


def test_precedence_and_brackets():
    node = expr.parse("2*x*y - y*x + 1")
    assert node[0] == "add"
    node = expr.parse("[x, y, y]")
    assert node[0] == "bracket" and node[1][0] == "bracket"


def test_rational_literal():
    assert expr.parse("3/4") == ("const", Fraction(3, 4))


@pytest.mark.parametrize("text", ["", "x +", "(x", "[x]", "x $ y", "x^y", "1/0", "x y"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        expr.parse(text)


@pytest.mark.parametrize("text, built", [
    ("[x,y] + 2*[y,[x,y]]", True),
    ("x", True),
    ("3*[x,y]", True),
    ("x*y - y*x", False),
    ("2", False),
    ("x^2", False),
])
def test_bracket_built(text, built):
    assert expr.is_bracket_built(expr.parse(text)) is built
