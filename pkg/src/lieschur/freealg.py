"""The free associative algebra U(L) = k<X> on an ordered alphabet."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import expr
from .errors import AlphabetMismatchError, FieldMismatchError, ParseError
from .scalar import FieldSpec, Scalar


@dataclass(frozen=True)
class Alphabet:
    """Ordered generator names; list order is the tie-break order everywhere."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("alphabet must be nonempty")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def word(self, *names) -> tuple:
        return tuple(self.index(n) for n in names)

    def fmt_word(self, word) -> str:
        if not word:
            return "1"
        return "*".join(self.names[i] for i in word)


def word_key(word):
    return (len(word), word)


class NCPoly:
    """Sparse noncommutative polynomial: map from words to raw coefficients."""

    __slots__ = ("alphabet", "field", "terms")

    def __init__(self, alphabet: Alphabet, field: FieldSpec, terms=None):
        self.alphabet = alphabet
        self.field = field
        clean = {}
        if terms:
            n = len(alphabet)
            for word, c in terms.items():
                word = tuple(word)
                if any(not 0 <= i < n for i in word):
                    raise ValueError(f"word {word} has letters outside the alphabet")
                c = field.coerce(c)
                if c:
                    clean[word] = c
        self.terms = clean

    @classmethod
    def _raw(cls, alphabet, field, terms):
        p = cls.__new__(cls)
        p.alphabet = alphabet
        p.field = field
        p.terms = terms
        return p

    # constructors

    @classmethod
    def zero(cls, alphabet, field):
        return cls._raw(alphabet, field, {})

    @classmethod
    def const(cls, alphabet, field, c=1):
        return cls(alphabet, field, {(): c})

    @classmethod
    def gen(cls, alphabet, field, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else alphabet.index(name_or_index)
        return cls(alphabet, field, {(i,): 1})

    @classmethod
    def from_word(cls, alphabet, field, word, c=1):
        return cls(alphabet, field, {tuple(word): c})

    def like(self, terms) -> NCPoly:
        """Polynomial over the same alphabet and field from clean raw terms."""
        return NCPoly._raw(self.alphabet, self.field, terms)

    # structure

    def _check(self, other):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(f"{self.alphabet.names} vs {other.alphabet.names}")
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def _lift(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return NCPoly.const(self.alphabet, self.field, other.value)
        if isinstance(other, (int, Fraction)):
            return NCPoly.const(self.alphabet, self.field, other)
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = self._lift(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alphabet, self.field, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        for w in sorted(self.terms, key=word_key):
            yield w, self.terms[w]

    def __len__(self):
        return len(self.terms)

    # arithmetic

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = self.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = F.add(out.get(w, F.zero), c)
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return self.like(out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return self.like({w: F.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c) -> NCPoly:
        F = self.field
        c = c.value if isinstance(c, Scalar) else F.coerce(c)
        if not c:
            return self.like({})
        return self.like({w: F.mul(v, c) for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._check(other)
        F = self.field
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = F.add(out.get(w, F.zero), F.mul(c1, c2))
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return self.like(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = NCPoly.const(self.alphabet, self.field, 1)
        for _ in range(e):
            out = out * self
        return out

    # queries

    def coefficient(self, word) -> Scalar:
        return Scalar(self.terms.get(tuple(word), self.field.zero), self.field)

    def degree(self):
        return ncp_degree(self)

    def homogeneous_components(self) -> dict:
        comps = {}
        for w, c in self.terms.items():
            comps.setdefault(len(w), {})[w] = c
        return {m: self.like(t) for m, t in sorted(comps.items())}

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self.terms}) <= 1

    def __str__(self):
        return format_poly(self.terms, self.field, self.alphabet.fmt_word, key=word_key)

    def __repr__(self):
        return f"NCPoly({self})"


def format_poly(terms, field, fmt_mono, key=None) -> str:
    """Render ``{monomial: coeff}`` as ``2*x*y - y*x + 1``."""
    if not terms:
        return "0"
    parts = []
    for m in sorted(terms, key=key):
        c = terms[m]
        neg = False
        if not field.p and c < 0:
            neg, c = True, -c
        mono = fmt_mono(m)
        if mono == "1":
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def axpy(field, acc: dict, terms: dict, c=None):
    """In place ``acc += c * terms`` on raw term maps (``c=None`` means 1)."""
    for w, v in terms.items():
        if c is not None:
            v = field.mul(v, c)
        v = field.add(acc.get(w, field.zero), v)
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)
    return acc


def ncp_add(p: NCPoly, q: NCPoly) -> NCPoly:
    p._check(q)
    return p + q


def ncp_mul(p: NCPoly, q: NCPoly) -> NCPoly:
    p._check(q)
    return p * q


def ncp_degree(p: NCPoly):
    """Maximal word length; ``None`` stands for the undefined degree of 0."""
    if not p.terms:
        return None
    return max(len(w) for w in p.terms)


def augmentation(p: NCPoly) -> Scalar:
    return Scalar(p.terms.get((), p.field.zero), p.field)


def left_decompose(p: NCPoly) -> dict:
    """Components ``u_x`` with ``p = sum_x x * u_x``.

    Defined on the augmentation ideal only; every word there starts with a
    unique letter, so the decomposition is unique.
    """
    if () in p.terms:
        raise ValueError(f"left_decompose needs zero constant term, got {augmentation(p)}")
    comps = {}
    for w, c in p.terms.items():
        comps.setdefault(w[0], {})[w[1:]] = c
    return {x: p.like(t) for x, t in sorted(comps.items())}


def reassemble(alphabet, field, comps) -> NCPoly:
    acc = {}
    for x, u in comps.items():
        axpy(field, acc, {(x,) + w: c for w, c in u.terms.items()})
    return NCPoly._raw(alphabet, field, acc)


class _PolyAlgebra:
    def __init__(self, alphabet, field):
        self.alphabet = alphabet
        self.field = field

    def const(self, c):
        return NCPoly.const(self.alphabet, self.field, c)

    def name(self, name):
        return NCPoly.gen(self.alphabet, self.field, name)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def power(self, a, e):
        return a ** e

    def bracket(self, a, b):
        return a * b - b * a


def parse_poly(text: str, alphabet: Alphabet, field: FieldSpec) -> NCPoly:
    """Parse ``"2*x*y - y*x + 1"`` (brackets ``[x,y]`` are also accepted)."""
    node = expr.parse(text)
    unknown = expr.names_in(node) - set(alphabet.names)
    if unknown:
        raise ParseError(f"unknown generator(s) {sorted(unknown)} in {text!r}")
    return expr.evaluate(node, _PolyAlgebra(alphabet, field))
