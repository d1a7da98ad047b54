"""Exact field arithmetic: the rationals and prime fields F_p.

Containers elsewhere in the package store *raw* coefficients (``Fraction``
over Q, ``int`` in ``[0, p)`` over F_p) and do arithmetic through the
``FieldSpec`` methods; :class:`Scalar` is the checked value type handed out
across module boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from .errors import FieldMismatchError

PRIME_LIMIT = 2**61


@dataclass(frozen=True)
class FieldSpec:
    """A field ``k``: ``p == 0`` means Q, otherwise the prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p < 0:
            raise ValueError(f"negative modulus {self.p}")
        if self.p:
            if self.p >= PRIME_LIMIT:
                raise ValueError(f"prime modulus {self.p} exceeds 2^61")
            if not isprime(self.p):
                raise ValueError(f"modulus {self.p} is not prime")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``"Q"`` or ``"Fp:<prime>"``."""
        t = text.strip()
        if t in ("Q", "QQ"):
            return cls(0)
        if t.startswith("Fp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError(f"bad field spec {text!r}") from None
            return cls(p)
        raise ValueError(f"bad field spec {text!r}; expected 'Q' or 'Fp:<prime>'")

    @property
    def kind(self) -> str:
        return "PrimeField" if self.p else "Rationals"

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        return f"Fp:{self.p}" if self.p else "Q"

    # raw coefficient arithmetic

    def coerce(self, value):
        """Canonical raw representative of an int, Fraction or same-field Scalar."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"cannot use a {value.field} scalar in {self}")
            return value.value
        if self.p:
            if isinstance(value, Fraction):
                den = value.denominator % self.p
                if den == 0:
                    raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
                return value.numerator * pow(den, -1, self.p) % self.p
            return int(value) % self.p
        return Fraction(value)

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def add(self, a, b):
        if self.p:
            return (a + b) % self.p
        return a + b

    def sub(self, a, b):
        if self.p:
            return (a - b) % self.p
        return a - b

    def neg(self, a):
        if self.p:
            return -a % self.p
        return -a

    def mul(self, a, b):
        if self.p:
            return a * b % self.p
        return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inversion of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def fmt(self, a) -> str:
        return str(a)


@dataclass(frozen=True)
class Scalar:
    value: object
    field: FieldSpec

    @classmethod
    def of(cls, value, field: FieldSpec) -> Scalar:
        return cls(field.coerce(value), field)

    def _check(self, other) -> Scalar:
        if isinstance(other, (int, Fraction)):
            return Scalar.of(other, self.field)
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine {self.field} and {other.field} scalars")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field.add(self.value, other.value), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field.sub(self.value, other.value), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field.mul(self.value, other.value), self.field)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        return Scalar(self.field.inv(self.value), self.field)

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.coerce(other)
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({self.value}, {self.field})"


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_inv(a: Scalar) -> Scalar:
    return a.inverse()


def int_to_scalar(m: int, fs: FieldSpec) -> Scalar:
    """Image of the integer ``m`` in ``fs``; zero exactly when char | m."""
    return Scalar.of(m, fs)
