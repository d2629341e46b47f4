"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are immutable (field, value) pairs.  Rational values are stored as
``fractions.Fraction`` (always reduced, positive denominator); prime-field
values are canonical residues in ``[0, p)``.  Scalars from different fields
never interoperate: mixing them raises FieldMismatch.

String forms: ``"3/4"`` and ``"-2"`` over Q, a bare residue ``"3"`` over F_p.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .errors import FieldMismatch, NotPrime, ParseError

_MAX_PRIME = 2 ** 31


def is_prime(n: int) -> bool:
    """Trial-division primality check (adequate for moduli below 2**31)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface of the two coefficient fields."""

    kind = None  # "Q" or "Fp"

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, Scalar or string to a Scalar of this field."""
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatch(f"scalar belongs to {value.field}, not {self}")
            return value
        if isinstance(value, str):
            return Scalar(self, self.parse(value))
        return Scalar(self, self.normalize(value))

    @property
    def zero(self) -> "Scalar":
        return self.scalar(0)

    @property
    def one(self) -> "Scalar":
        return self.scalar(1)

    # raw-value operations, implemented by subclasses
    def normalize(self, value):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, value) -> str:
        raise NotImplementedError


class RationalField(Field):
    """The field of rational numbers; arbitrary-precision exact arithmetic."""

    kind = "Q"

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def normalize(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot build a rational scalar from {value!r}")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def parse(self, text: str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational scalar {text!r}") from exc

    def format(self, value) -> str:
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """The prime field F_p for a prime p < 2**31."""

    kind = "Fp"

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p >= _MAX_PRIME:
            raise NotPrime(f"modulus {p} exceeds the 2**31 limit")
        self.p = p

    def normalize(self, value):
        if isinstance(value, Fraction):
            if value.denominator == 1:
                value = value.numerator
            else:
                return self.mul(value.numerator % self.p,
                                self.inv(value.denominator % self.p))
        if not isinstance(value, int):
            raise TypeError(f"cannot build an F_{self.p} scalar from {value!r}")
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def parse(self, text: str):
        try:
            return int(text.strip()) % self.p
        except ValueError as exc:
            raise ParseError(f"bad F_{self.p} scalar {text!r}") from exc

    def format(self, value) -> str:
        return str(value)

    def __repr__(self):
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """Return the (interned) prime field F_p."""
    return PrimeField(p)


def field_from_string(text: str) -> Field:
    """Parse a field tag: ``"Q"`` or ``"F<p>"``."""
    text = text.strip()
    if text == "Q":
        return QQ
    if text.startswith("F"):
        try:
            p = int(text[1:])
        except ValueError as exc:
            raise ParseError(f"bad field tag {text!r}") from exc
        return GF(p)
    raise ParseError(f"bad field tag {text!r}")


def field_to_string(field: Field) -> str:
    return "Q" if field.kind == "Q" else f"F{field.p}"


class Scalar:
    """An immutable exact field element."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(
                    f"cannot combine {self.field} and {other.field} scalars")
            return other
        if isinstance(other, int):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.sub(self.value, o.value))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.sub(o.value, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.value, self.field.inv(o.value)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.mul(o.value, self.field.inv(self.value)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field}({self})"

    def sort_key(self):
        """Deterministic total order key within one field.

        Over Q this is numeric order; over F_p ascending residues.
        """
        return self.value
