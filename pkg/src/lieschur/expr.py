"""Tokenizer and recursive-descent parser for the shared expression grammar.

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | NAME | '(' expr ')' | '[' expr (',' expr)+ ']'

``[a, b, c]`` is the left-normed bracket ``[[a, b], c]``.  Parsing yields a
small tuple AST which :func:`evaluate` folds through any object providing
``const``, ``name``, ``add``, ``sub``, ``neg``, ``mul``, ``power`` and
``bracket``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", self.text, tok[2])
        return tok

    def error(self, msg):
        raise ParseError(msg, self.text, self.peek()[2])

    def at(self, op):
        tok = self.peek()
        return tok[0] == "op" and tok[1] == op

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            self.error("trailing input")
        return node

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.at("*"):
            self.take()
            node = ("mul", node, self.unary())
        return node

    def unary(self):
        if self.at("-"):
            self.take()
            return ("neg", self.unary())
        if self.at("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.at("^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", self.text, tok[2])
            node = ("pow", node, int(tok[1]))
        return node

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            value = Fraction(int(tok[1]))
            if self.at("/"):
                self.take()
                den = self.take()
                if den[0] != "int":
                    raise ParseError("expected integer denominator", self.text, den[2])
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", self.text, den[2])
                value = Fraction(int(tok[1]), int(den[1]))
            return ("const", value)
        if tok[0] == "name":
            self.take()
            return ("name", tok[1], tok[2])
        if self.at("("):
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        if self.at("["):
            self.take()
            items = [self.expr()]
            while self.at(","):
                self.take()
                items.append(self.expr())
            self.expect("]")
            if len(items) < 2:
                raise ParseError("bracket needs at least two entries", self.text, tok[2])
            node = items[0]
            for item in items[1:]:
                node = ("bracket", node, item)
            return node
        self.error("unexpected token")


def parse(text: str):
    return _Parser(text).parse()


def evaluate(node, algebra):
    kind = node[0]
    if kind == "const":
        return algebra.const(node[1])
    if kind == "name":
        return algebra.name(node[1])
    if kind == "neg":
        return algebra.neg(evaluate(node[1], algebra))
    if kind == "pow":
        return algebra.power(evaluate(node[1], algebra), node[2])
    lhs = evaluate(node[1], algebra)
    rhs = evaluate(node[2], algebra)
    return getattr(algebra, kind)(lhs, rhs)


def is_constant(node) -> bool:
    kind = node[0]
    if kind == "const":
        return True
    if kind == "name":
        return False
    if kind in ("neg", "pow"):
        return is_constant(node[1])
    return is_constant(node[1]) and is_constant(node[2])


def is_bracket_built(node) -> bool:
    """True when the expression is a linear combination of brackets of names.

    Such an expression is a Lie element by construction, in any characteristic.
    """
    kind = node[0]
    if kind == "name":
        return True
    if kind == "const":
        return node[1] == 0
    if kind == "neg":
        return is_bracket_built(node[1])
    if kind == "pow":
        return node[2] == 1 and is_bracket_built(node[1])
    if kind in ("add", "sub"):
        return is_bracket_built(node[1]) and is_bracket_built(node[2])
    if kind == "bracket":
        return all(is_bracket_built(c) or is_constant(c) for c in node[1:])
    if kind == "mul":
        if is_constant(node[1]):
            return is_bracket_built(node[2])
        if is_constant(node[2]):
            return is_bracket_built(node[1])
        return False
    return False


def names_in(node) -> set:
    kind = node[0]
    if kind == "name":
        return {node[1]}
    if kind == "const":
        return set()
    out = set()
    for child in node[1:]:
        if isinstance(child, tuple):
            out |= names_in(child)
    return out
