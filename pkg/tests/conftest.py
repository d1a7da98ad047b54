import pytest

from lieschur.freealg import Alphabet
from lieschur.quotient import QuotientPresentation, STRUCTURE_CONSTANTS
from lieschur.scalar import FieldSpec

Q = FieldSpec(0)
F2 = FieldSpec(2)
F3 = FieldSpec(3)


def solvable(field=Q, max_degree=12, alphabet=("x", "y")):
    """Two-dimensional solvable quotient [e1, e2] = e2 with x -> e1, y -> e2."""
    A = Alphabet(alphabet)
    proj = [{0: 1}, {1: 1}] + [{} for _ in alphabet[2:]]
    return QuotientPresentation(STRUCTURE_CONSTANTS, field, A, ("e1", "e2"), {(0, 1): {1: 1}},
                                proj, max_degree)


def commutative(field=Q, max_degree=12):
    """k[e1]: x -> e1, y -> 0."""
    A = Alphabet(("x", "y"))
    return QuotientPresentation(STRUCTURE_CONSTANTS, field, A, ("e1",), {}, [{0: 1}, {}],
                                max_degree)


@pytest.fixture
def xy():
    return Alphabet(("x", "y"))


@pytest.fixture
def solv():
    return solvable()


@pytest.fixture
def comm():
    return commutative()


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
