"""The quotient Lie algebra L/I and its enveloping algebra in PBW normal form.

Two presentation kinds are supported: a finite-dimensional quotient given by
structure constants, and the free abelian quotient ``L / <L', X1>`` which keeps
the generators outside ``X1``.  Both store PBW monomials as nondecreasing
tuples of basis indices (for the abelian kind such a tuple is just an exponent
vector written out), so the Hopf layer never needs to know the kind.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import expr
from .errors import DegreeCapError, ParseError, PresentationError
from .freealg import Alphabet, NCPoly, axpy, format_poly, word_key
from .scalar import FieldSpec, Scalar

STRUCTURE_CONSTANTS = "structure_constants"
FREE_ABELIAN = "free_abelian"
DEFAULT_MAX_DEGREE = 12


class QuotientPresentation:
    """A presentation ``0 -> I -> L -> L/I -> 0`` of the quotient.

    ``brackets`` maps an index pair ``(i, j)`` to ``{k: c}`` meaning
    ``[e_i, e_j] = sum_k c e_k``; the missing opposite orders are filled in by
    antisymmetry.  ``projection`` lists, per generator of the alphabet, the
    image ``{k: c}`` in the quotient (empty for generators lying in I).
    """

    def __init__(self, kind, field: FieldSpec, alphabet: Alphabet, basis, brackets=None,
                 projection=None, max_degree: int = DEFAULT_MAX_DEGREE):
        if kind not in (STRUCTURE_CONSTANTS, FREE_ABELIAN):
            raise PresentationError(f"unknown quotient kind {kind!r}")
        self.kind = kind
        self.field = field
        self.alphabet = alphabet
        self.basis = tuple(basis)
        self.max_degree = max_degree
        d = len(self.basis)
        if len(set(self.basis)) != d:
            raise PresentationError(f"duplicate basis names in {self.basis}")
        table = {}
        for (i, j), comb in (brackets or {}).items():
            if not (0 <= i < d and 0 <= j < d):
                raise PresentationError(f"bracket [{i},{j}] outside the basis")
            clean = {}
            for k, c in comb.items():
                if not 0 <= k < d:
                    raise PresentationError(f"bracket [{i},{j}] mentions index {k} outside the basis")
                c = field.coerce(c)
                if c:
                    clean[k] = c
            if clean:
                table[(i, j)] = clean
        if kind == FREE_ABELIAN and table:
            raise PresentationError("free abelian quotient cannot carry brackets")
        self.raw_brackets = dict(table)
        for (i, j), comb in list(table.items()):
            if (j, i) not in table and i != j:
                table[(j, i)] = {k: field.neg(c) for k, c in comb.items()}
        self.table = table
        proj = []
        projection = projection if projection is not None else [{} for _ in alphabet.names]
        if len(projection) != len(alphabet):
            raise PresentationError("projection must list an image for every generator")
        for x, comb in enumerate(projection):
            clean = {}
            for k, c in comb.items():
                if not 0 <= k < d:
                    raise PresentationError(
                        f"projection of {alphabet.names[x]} mentions index {k} outside the basis")
                c = field.coerce(c)
                if c:
                    clean[k] = c
            proj.append(clean)
        self.projection = tuple(proj)
        self._nf_cache = {}
        self._proj_cache = {}
        validate_presentation(self)

    @classmethod
    def free_abelian(cls, field, alphabet, surviving, max_degree=DEFAULT_MAX_DEGREE):
        """``L / <L', X1>`` where ``X1`` is every generator not in ``surviving``."""
        surviving = tuple(surviving)
        for name in surviving:
            alphabet.index(name)
        basis = tuple(n for n in alphabet.names if n in surviving)
        projection = [{basis.index(n): 1} if n in basis else {} for n in alphabet.names]
        return cls(FREE_ABELIAN, field, alphabet, basis, None, projection, max_degree)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_commutative(self) -> bool:
        return not self.table

    def with_max_degree(self, max_degree: int) -> QuotientPresentation:
        return QuotientPresentation(self.kind, self.field, self.alphabet, self.basis,
                                    self.raw_brackets, [dict(p) for p in self.projection],
                                    max_degree)

    def _key(self):
        return (self.kind, self.field, self.alphabet, self.basis,
                tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.table.items())),
                tuple(tuple(sorted(p.items())) for p in self.projection), self.max_degree)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, QuotientPresentation):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def bracket_of(self, i, j) -> dict:
        return self.table.get((i, j), {})

    def fmt_mono(self, mono) -> str:
        if not mono:
            return "1"
        parts = []
        k = 0
        while k < len(mono):
            j = k
            while j < len(mono) and mono[j] == mono[k]:
                j += 1
            name = self.basis[mono[k]]
            parts.append(name if j - k == 1 else f"{name}^{j - k}")
            k = j
        return "*".join(parts)

    def check_degree(self, degree):
        if degree > self.max_degree:
            raise DegreeCapError(
                f"degree {degree} exceeds the cap max_degree={self.max_degree}",
                degree, self.max_degree)

    # PBW straightening

    def normal_form(self, word) -> dict:
        """Raw normal form of a word in basis indices (leftmost rewriting, memoized)."""
        word = tuple(word)
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        F = self.field
        if not self.table:
            result = {tuple(sorted(word)): F.one}
        else:
            k = _first_descent(word)
            if k is None:
                result = {word: F.one}
            else:
                j, i = word[k], word[k + 1]
                result = dict(self.normal_form(word[:k] + (i, j) + word[k + 2:]))
                for m, c in self.bracket_of(j, i).items():
                    axpy(F, result, self.normal_form(word[:k] + (m,) + word[k + 2:]), c)
        self._nf_cache[word] = result
        return result


def _first_descent(word):
    for k in range(len(word) - 1):
        if word[k] > word[k + 1]:
            return k
    return None


def _last_descent(word):
    for k in range(len(word) - 2, -1, -1):
        if word[k] > word[k + 1]:
            return k
    return None


def validate_presentation(qp: QuotientPresentation) -> bool:
    """Check antisymmetry and the Jacobi identity of the bracket table.

    Raises :class:`PresentationError` naming the first violating pair or triple.
    """
    F = qp.field
    d = qp.dim
    for i in range(d):
        if qp.table.get((i, i)):
            raise PresentationError(
                f"antisymmetry violated: [{qp.basis[i]},{qp.basis[i]}] != 0", (i, i))
        for j in range(i + 1, d):
            a = qp.table.get((i, j), {})
            b = qp.table.get((j, i), {})
            if any(F.add(a.get(k, F.zero), b.get(k, F.zero)) for k in set(a) | set(b)):
                raise PresentationError(
                    f"antisymmetry violated for pair ({qp.basis[i]}, {qp.basis[j]})", (i, j))

    def br(u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                axpy(F, out, qp.bracket_of(i, j), F.mul(a, b))
        return out

    for i, j, k in combinations(range(d), 3):
        ei, ej, ek = {i: F.one}, {j: F.one}, {k: F.one}
        total = {}
        axpy(F, total, br(br(ei, ej), ek))
        axpy(F, total, br(br(ej, ek), ei))
        axpy(F, total, br(br(ek, ei), ej))
        if total:
            names = (qp.basis[i], qp.basis[j], qp.basis[k])
            raise PresentationError(f"Jacobi identity violated for triple {names}", (i, j, k))
    return True


class UQElement:
    """Element of U(L/I): sparse map from nondecreasing index tuples to coefficients."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: QuotientPresentation, terms=None):
        self.pres = pres
        F = pres.field
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if any(not 0 <= i < pres.dim for i in mono):
                raise ValueError(f"monomial {mono} has indices outside the basis")
            if list(mono) != sorted(mono):
                raise ValueError(f"monomial {mono} is not in PBW normal form; use straighten")
            c = F.coerce(c)
            if c:
                clean[mono] = F.add(clean.get(mono, F.zero), c)
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def _raw(cls, pres, terms):
        e = cls.__new__(cls)
        e.pres = pres
        e.terms = terms
        return e

    @classmethod
    def zero(cls, pres):
        return cls._raw(pres, {})

    @classmethod
    def one(cls, pres, c=1):
        return cls(pres, {(): c})

    @classmethod
    def basis_element(cls, pres, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else pres.basis.index(name_or_index)
        return cls(pres, {(i,): 1})

    def like(self, terms):
        return UQElement._raw(self.pres, terms)

    def _check(self, other):
        if other.pres is not self.pres and other.pres != self.pres:
            raise PresentationError("elements of different quotient presentations")

    def _lift(self, other):
        if isinstance(other, UQElement):
            self._check(other)
            return other
        if isinstance(other, Scalar):
            return UQElement.one(self.pres, other.value)
        if isinstance(other, (int, Fraction)):
            return UQElement.one(self.pres, other)
        return None

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        for m in sorted(self.terms, key=word_key):
            yield m, self.terms[m]

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.like(axpy(self.pres.field, dict(self.terms), other.terms))

    __radd__ = __add__

    def __neg__(self):
        F = self.pres.field
        return self.like({m: F.neg(c) for m, c in self.terms.items()})

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

    def scale(self, c) -> UQElement:
        F = self.pres.field
        c = c.value if isinstance(c, Scalar) else F.coerce(c)
        if not c:
            return self.like({})
        return self.like({m: F.mul(v, c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, UQElement):
            return NotImplemented
        return uq_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        out = UQElement.one(self.pres)
        for _ in range(e):
            out = out * self
        return out

    def coefficient(self, mono) -> Scalar:
        return Scalar(self.terms.get(tuple(mono), self.pres.field.zero), self.pres.field)

    def degree(self):
        return uq_degree(self)

    def __str__(self):
        return format_poly(self.terms, self.pres.field, self.pres.fmt_mono, key=word_key)

    def __repr__(self):
        return f"UQElement({self})"


def straighten(pres: QuotientPresentation, word) -> UQElement:
    """PBW normal form of a word in the quotient basis indices."""
    word = tuple(word)
    pres.check_degree(len(word))
    return UQElement._raw(pres, dict(pres.normal_form(word)))


def straighten_with(pres: QuotientPresentation, word, strategy="leftmost") -> UQElement:
    """Unmemoized straightening rewriting the leftmost or rightmost descent.

    Exists so the confluence property can compare rewrite strategies.
    """
    find = {"leftmost": _first_descent, "rightmost": _last_descent}[strategy]
    F = pres.field

    def nf(w):
        k = find(w)
        if k is None:
            return {w: F.one}
        j, i = w[k], w[k + 1]
        out = nf(w[:k] + (i, j) + w[k + 2:])
        for m, c in pres.bracket_of(j, i).items():
            axpy(F, out, nf(w[:k] + (m,) + w[k + 2:]), c)
        return out

    return UQElement._raw(pres, nf(tuple(word)))


def uq_mul(a: UQElement, b: UQElement) -> UQElement:
    a._check(b)
    pres = a.pres
    F = pres.field
    out = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            pres.check_degree(len(m1) + len(m2))
            axpy(F, out, pres.normal_form(m1 + m2), F.mul(c1, c2))
    return a.like(out)


def uq_degree(a: UQElement):
    """Filtration degree of a nonzero element; ``None`` for 0."""
    if not a.terms:
        return None
    return max(len(m) for m in a.terms)


def project(pres: QuotientPresentation, p: NCPoly) -> UQElement:
    """The algebra map U(L) -> U(L/I) induced by the generator projections."""
    if p.alphabet != pres.alphabet:
        raise PresentationError("polynomial alphabet differs from the presentation's")
    F = pres.field
    out = {}
    for w, c in p.terms.items():
        axpy(F, out, _project_word(pres, w), c)
    return UQElement._raw(pres, out)


def _project_word(pres, word):
    cached = pres._proj_cache.get(word)
    if cached is not None:
        return cached
    F = pres.field
    if not word:
        result = {(): F.one}
    else:
        head = _project_word(pres, word[:-1])
        result = {}
        for k, c in pres.projection[word[-1]].items():
            for m, v in head.items():
                pres.check_degree(len(m) + 1)
                axpy(F, result, pres.normal_form(m + (k,)), F.mul(v, c))
    pres._proj_cache[word] = result
    return result


class _UQAlgebra:
    def __init__(self, pres):
        self.pres = pres

    def const(self, c):
        return UQElement.one(self.pres, c)

    def name(self, name):
        return UQElement.basis_element(self.pres, name)

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


def parse_uq(text: str, pres: QuotientPresentation) -> UQElement:
    """Parse an element of U(L/I) written in the quotient basis names."""
    node = expr.parse(text)
    unknown = expr.names_in(node) - set(pres.basis)
    if unknown:
        raise ParseError(f"unknown basis element(s) {sorted(unknown)} in {text!r}")
    return expr.evaluate(node, _UQAlgebra(pres))


def parse_lincomb(text: str, names) -> dict:
    """Parse a linear combination such as ``"e1 + 2*e2"`` or ``"0"`` into ``{index: c}``."""
    node = expr.parse(text)
    names = tuple(names)
    unknown = expr.names_in(node) - set(names)
    if unknown:
        raise ParseError(f"unknown name(s) {sorted(unknown)} in {text!r}")
    return expr.evaluate(node, _LinearAlgebra(names, text))


class _LinearAlgebra:
    def __init__(self, names, text):
        self.names = names
        self.text = text

    def const(self, c):
        return {None: c} if c else {}

    def name(self, name):
        return {self.names.index(name): Fraction(1)}

    def add(self, a, b):
        out = dict(a)
        for k, c in b.items():
            out[k] = out.get(k, 0) + c
        return {k: c for k, c in out.items() if c}

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        return {k: -c for k, c in a.items()}

    def mul(self, a, b):
        if set(a) <= {None}:
            return {k: c * a.get(None, 0) for k, c in b.items() if c * a.get(None, 0)}
        if set(b) <= {None}:
            return self.mul(b, a)
        raise ParseError(f"not a linear combination: {self.text!r}")

    def power(self, a, e):
        if set(a) <= {None}:
            return self.const(a.get(None, 0) ** e)
        if e == 1:
            return a
        raise ParseError(f"not a linear combination: {self.text!r}")

    def bracket(self, a, b):
        raise ParseError(f"brackets are not allowed in a linear combination: {self.text!r}")


def lincomb(text: str, names) -> dict:
    """Like :func:`parse_lincomb` but rejects a constant term."""
    comb = parse_lincomb(text, names)
    if None in comb:
        raise ParseError(f"constant term in linear combination {text!r}")
    return comb
