"""Free Lie algebra elements, stored as their expansions inside k<X>."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import expr
from .errors import CriterionUnavailableError, ParseError
from .freealg import Alphabet, NCPoly, _PolyAlgebra, axpy
from .scalar import FieldSpec


def bracket(a: NCPoly, b: NCPoly) -> NCPoly:
    return a * b - b * a


def left_normed(leaves) -> NCPoly:
    """``[...[[a1, a2], a3], ..., am]``."""
    leaves = list(leaves)
    if not leaves:
        raise ValueError("left_normed needs at least one leaf")
    out = leaves[0]
    for b in leaves[1:]:
        out = bracket(out, b)
    return out


def dynkin_map(p: NCPoly) -> NCPoly:
    """Left-to-right bracketing of every word, extended linearly."""
    if not p.is_homogeneous():
        raise ValueError("dynkin_map needs a homogeneous polynomial")
    if not p:
        return p
    if p.degree() == 0:
        raise ValueError("dynkin_map needs degree >= 1")
    A, F = p.alphabet, p.field
    cache = {}

    def bracketed(word):
        if word not in cache:
            if len(word) == 1:
                cache[word] = NCPoly.from_word(A, F, word)
            else:
                cache[word] = bracket(bracketed(word[:-1]), NCPoly.from_word(A, F, word[-1:]))
        return cache[word]

    acc = {}
    for w, c in p.terms.items():
        axpy(F, acc, bracketed(w).terms, c)
    return p.like(acc)


def is_lie_element(p: NCPoly) -> bool:
    """Dynkin criterion on every homogeneous component.

    The test divides by the degree, so it is refused when the characteristic
    does not exceed the degree.
    """
    if not p:
        return True
    char = p.field.characteristic
    comps = p.homogeneous_components()
    if 0 in comps:
        return False
    if char and max(comps) >= char:
        raise CriterionUnavailableError(
            f"Dynkin criterion unavailable in characteristic {char} for degree {max(comps)}; "
            "supply the element as a bracket expression")
    return all(dynkin_map(pm) == pm.scale(m) for m, pm in comps.items())


def adjoint_action(a: NCPoly, u: NCPoly) -> NCPoly:
    """Right adjoint action ``a . u``: a word l1...lm folds to [[a, l1], ..., lm]."""
    a._check(u)
    A, F = a.alphabet, a.field
    cache = {(): a}

    def act(word):
        if word not in cache:
            cache[word] = bracket(act(word[:-1]), NCPoly.from_word(A, F, word[-1:]))
        return cache[word]

    acc = {}
    for w, c in sorted(u.terms.items()):
        axpy(F, acc, act(w).terms, c)
    return a.like(acc)


@dataclass(frozen=True)
class Leaf:
    value: object


@dataclass(frozen=True)
class Bracket:
    left: "BracketTree"
    right: "BracketTree"


BracketTree = Union[Leaf, Bracket]


def tree_leaves(tree) -> list:
    if isinstance(tree, Leaf):
        return [tree.value]
    return tree_leaves(tree.left) + tree_leaves(tree.right)


def tree_value(tree) -> NCPoly:
    if isinstance(tree, Leaf):
        return tree.value
    return bracket(tree_value(tree.left), tree_value(tree.right))


def left_normed_tree(leaves) -> BracketTree:
    leaves = list(leaves)
    if not leaves:
        raise ValueError("left_normed_tree needs at least one leaf")
    tree = Leaf(leaves[0])
    for b in leaves[1:]:
        tree = Bracket(tree, Leaf(b))
    return tree


def parse_lie(text: str, alphabet: Alphabet, field: FieldSpec) -> NCPoly:
    """Parse a Lie expression such as ``"[x,y] + 2*[y,[x,y]]"``.

    Bracket-built expressions are accepted in any characteristic; anything
    else must pass the Dynkin test.
    """
    node = expr.parse(text)
    unknown = expr.names_in(node) - set(alphabet.names)
    if unknown:
        raise ParseError(f"unknown generator(s) {sorted(unknown)} in {text!r}")
    poly = expr.evaluate(node, _PolyAlgebra(alphabet, field))
    if not expr.is_bracket_built(node) and not is_lie_element(poly):
        raise ValueError(f"{text!r} is not a Lie element")
    return poly
