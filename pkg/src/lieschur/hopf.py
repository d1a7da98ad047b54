"""Hopf structure of U(L/I): coproduct, counit, antipode, tensor powers, collapse."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import PresentationError
from .freealg import axpy
from .quotient import QuotientPresentation, UQElement
from .scalar import Scalar


def _tuple_key(key):
    return tuple((len(m), m) for m in key)


class TensorElement:
    """Element of the m-fold tensor power of U(L/I), keyed by m-tuples of PBW monomials."""

    __slots__ = ("pres", "arity", "terms")

    def __init__(self, pres: QuotientPresentation, arity: int, terms=None):
        if arity < 1:
            raise ValueError("tensor arity must be >= 1")
        self.pres = pres
        self.arity = arity
        F = pres.field
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(tuple(m) for m in key)
            if len(key) != arity:
                raise ValueError(f"tensor key {key} does not have arity {arity}")
            c = F.coerce(c)
            if c:
                axpy(F, clean, {key: c})
        self.terms = clean

    @classmethod
    def _raw(cls, pres, arity, terms):
        t = cls.__new__(cls)
        t.pres = pres
        t.arity = arity
        t.terms = terms
        return t

    @classmethod
    def zero(cls, pres, arity):
        return cls._raw(pres, arity, {})

    @classmethod
    def one(cls, pres, arity, c=1):
        return cls(pres, arity, {((),) * arity: c})

    def like(self, terms, arity=None):
        return TensorElement._raw(self.pres, self.arity if arity is None else arity, terms)

    def _check(self, other):
        if other.pres is not self.pres and other.pres != self.pres:
            raise PresentationError("tensors over different quotient presentations")
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self.terms
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        for key in sorted(self.terms, key=_tuple_key):
            yield key, self.terms[key]

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        self._check(other)
        return self.like(axpy(self.pres.field, dict(self.terms), other.terms))

    __radd__ = __add__

    def __neg__(self):
        F = self.pres.field
        return self.like({k: F.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> TensorElement:
        F = self.pres.field
        c = c.value if isinstance(c, Scalar) else F.coerce(c)
        if not c:
            return self.like({})
        return self.like({k: F.mul(v, c) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, TensorElement):
            return NotImplemented
        return tensor_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def degree(self):
        """Maximal total degree over terms; ``None`` for 0."""
        if not self.terms:
            return None
        return max(sum(len(m) for m in key) for key in self.terms)

    def as_uq(self) -> UQElement:
        if self.arity != 1:
            raise ValueError("only arity-1 tensors convert to UQElement")
        return UQElement._raw(self.pres, {k[0]: c for k, c in self.terms.items()})

    def to_text(self) -> str:
        """``c · m1 ⊗ m2 ⊗ ...`` in canonical monomial order."""
        if not self.terms:
            return "0"
        fmt = self.pres.fmt_mono
        return " + ".join(f"{c} · " + " ⊗ ".join(fmt(m) for m in key) for key, c in self)

    __str__ = to_text

    def __repr__(self):
        return f"TensorElement({self})"


def tensor(*factors: UQElement) -> TensorElement:
    """Outer tensor product of UQ elements."""
    if not factors:
        raise ValueError("need at least one factor")
    pres = factors[0].pres
    F = pres.field
    terms = {(): F.one}
    for f in factors:
        f._check(factors[0])
        nxt = {}
        for key, c in terms.items():
            for m, v in f.terms.items():
                axpy(F, nxt, {key + (m,): F.mul(c, v)})
        terms = nxt
    return TensorElement._raw(pres, len(factors), terms)


def tensor_concat(s: TensorElement, t: TensorElement) -> TensorElement:
    """``s ⊗ t`` with arities added."""
    s_pres, F = s.pres, s.pres.field
    if t.pres is not s_pres and t.pres != s_pres:
        raise PresentationError("tensors over different quotient presentations")
    out = {}
    for k1, c1 in s.terms.items():
        for k2, c2 in t.terms.items():
            axpy(F, out, {k1 + k2: F.mul(c1, c2)})
    return TensorElement._raw(s_pres, s.arity + t.arity, out)


def tensor_power(a: UQElement, m: int) -> TensorElement:
    return tensor(*([a] * m))


def coproduct(a: UQElement) -> TensorElement:
    return iterated_coproduct(a, 2)


def iterated_coproduct(a: UQElement, m: int) -> TensorElement:
    """Coproduct iterated to land in the m-fold tensor power (m=1 is the identity).

    The letters of a PBW monomial are primitive, so the image of a monomial
    distributes its letters over the m slots in every possible way; each slot
    receives a subsequence of a nondecreasing word and is already normal.
    """
    if m < 1:
        raise ValueError("iterated coproduct needs m >= 1")
    F = a.pres.field
    out = {}
    for mono, c in a.terms.items():
        for slots in product(range(m), repeat=len(mono)):
            parts = [[] for _ in range(m)]
            for letter, s in zip(mono, slots):
                parts[s].append(letter)
            key = tuple(tuple(p) for p in parts)
            v = F.add(out.get(key, F.zero), c)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return TensorElement._raw(a.pres, m, out)


def counit(a: UQElement) -> Scalar:
    F = a.pres.field
    return Scalar(a.terms.get((), F.zero), F)


def antipode(a: UQElement) -> UQElement:
    """Anti-automorphism with S(e) = -e on the Lie basis."""
    pres = a.pres
    F = pres.field
    out = {}
    for mono, c in a.terms.items():
        if len(mono) % 2:
            c = F.neg(c)
        axpy(F, out, pres.normal_form(mono[::-1]), c)
    return a.like(out)


def tensor_mul(s: TensorElement, t: TensorElement) -> TensorElement:
    """Componentwise product in the tensor power."""
    s._check(t)
    pres = s.pres
    F = pres.field
    out = {}
    for k1, c1 in s.terms.items():
        for k2, c2 in t.terms.items():
            c = F.mul(c1, c2)
            acc = {(): c}
            for m1, m2 in zip(k1, k2):
                pres.check_degree(len(m1) + len(m2))
                nf = pres.normal_form(m1 + m2)
                nxt = {}
                for key, v in acc.items():
                    for m, w in nf.items():
                        axpy(F, nxt, {key + (m,): F.mul(v, w)})
                acc = nxt
            axpy(F, out, acc)
    return s.like(out)


def diagonal_action(t: TensorElement, u: UQElement) -> TensorElement:
    return tensor_mul(t, iterated_coproduct(u, t.arity))


def hopf_collapse(t: TensorElement) -> TensorElement:
    """h1 ⊗ ... ⊗ hn  ->  (h1 ⊗ ... ⊗ h_{n-1}) · Δ^(n-1)(S(hn))."""
    n = t.arity
    if n < 2:
        raise ValueError("hopf_collapse needs arity >= 2")
    pres = t.pres
    F = pres.field
    by_last = {}
    for key, c in t.terms.items():
        by_last.setdefault(key[-1], {})[key[:-1]] = c
    out = TensorElement.zero(pres, n - 1)
    for last in sorted(by_last, key=lambda m: (len(m), m)):
        head = TensorElement._raw(pres, n - 1, by_last[last])
        tail = iterated_coproduct(antipode(UQElement._raw(pres, {last: F.one})), n - 1)
        out = out + tensor_mul(head, tail)
    return out


def counit_slots(t: TensorElement, keep: int) -> UQElement:
    """Apply the counit to every slot except ``keep``."""
    if not 0 <= keep < t.arity:
        raise IndexError(f"slot {keep} out of range for arity {t.arity}")
    F = t.pres.field
    out = {}
    for key, c in t.terms.items():
        if all(not m for i, m in enumerate(key) if i != keep):
            axpy(F, out, {key[keep]: c})
    return UQElement._raw(t.pres, out)
