"""Exact base fields: the rationals and prime fields F_p.

Field elements are handled in two layers.  Internally every algorithm works on
*raw* values (``Fraction`` for the rationals, ``int`` residues in ``[0, p)`` for
prime fields) and calls the arithmetic methods of a :class:`FieldSpec`.  The
:class:`Scalar` wrapper tags a raw value with its field and is the public,
operator-overloading face of the same arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldMismatch

Raw = Union[Fraction, int]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "rational" | "prime"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"prime field needs a prime modulus, got {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # -- descriptive ----------------------------------------------------
    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rational" else self.p

    @property
    def is_finite(self) -> bool:
        return self.kind == "prime"

    def __str__(self):
        return "QQ" if self.kind == "rational" else f"GF({self.p})"

    # -- raw arithmetic ---------------------------------------------------
    @property
    def zero(self) -> Raw:
        return Fraction(0) if self.kind == "rational" else 0

    @property
    def one(self) -> Raw:
        return Fraction(1) if self.kind == "rational" else 1

    def convert(self, value) -> Raw:
        """Map an int, Fraction or raw value of this field to canonical form."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value.value
        if self.kind == "rational":
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"denominator divisible by {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.p is None:
            return a + b
        return (a + b) % self.p

    def sub(self, a: Raw, b: Raw) -> Raw:
        if self.p is None:
            return a - b
        return (a - b) % self.p

    def neg(self, a: Raw) -> Raw:
        if self.p is None:
            return -a
        return -a % self.p

    def mul(self, a: Raw, b: Raw) -> Raw:
        if self.p is None:
            return a * b
        return a * b % self.p

    def inv(self, a: Raw) -> Raw:
        if not a:
            raise DivisionByZero("inverse of zero")
        if self.p is None:
            return 1 / a
        return pow(a, -1, self.p)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def pow(self, a: Raw, n: int) -> Raw:
        """Square-and-multiply power; negative exponents invert first."""
        if n < 0:
            a = self.inv(a)
            n = -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def elements(self):
        """All elements of a finite field, zero first."""
        if not self.is_finite:
            raise ValueError("the rationals cannot be enumerated")
        return range(self.p)

    # -- literals ---------------------------------------------------------
    def parse(self, text: str) -> Raw:
        """Parse ``"num/den"`` / ``"int"`` (rationals) or ``"int"`` (prime fields)."""
        if not isinstance(text, str):
            raise ValueError(f"scalar literal must be a string, got {text!r}")
        s = text.strip()
        if self.kind == "rational":
            num, sep, den = s.partition("/")
            try:
                n = int(num)
                d = int(den) if sep else 1
            except ValueError:
                raise ValueError(f"bad rational literal {text!r}") from None
            if d == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            return Fraction(n, d)
        if not s.isdigit():
            raise ValueError(f"bad residue literal {text!r} (non-negative integer expected)")
        return int(s) % self.p

    def format(self, a: Raw) -> str:
        if self.kind == "rational":
            a = Fraction(a)
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)

    def to_json(self) -> dict:
        if self.kind == "rational":
            return {"kind": "rational"}
        return {"kind": "prime", "p": self.p}


QQ = FieldSpec("rational")


def GF(p: int) -> FieldSpec:
    return FieldSpec("prime", p)


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field."""

    value: Raw
    field: FieldSpec

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.convert(self.value))

    @classmethod
    def parse(cls, text: str, field: FieldSpec) -> "Scalar":
        return cls(field.parse(text), field)

    def _other(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} and {other.field} elements combined")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.convert(other)
        return NotImplemented

    def _wrap(self, raw):
        return Scalar(raw, self.field)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(b, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, n: int):
        return self._wrap(self.field.pow(self.value, n))

    def inv(self) -> "Scalar":
        return self._wrap(self.field.inv(self.value))

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.format(self.value)


def scalar_arith(a: Scalar, b: Scalar | None, op: str):
    """Dispatch one field operation by name (``add sub mul div neg inv eq``)."""
    if b is not None and a.field != b.field:
        raise FieldMismatch(f"{a.field} and {b.field} elements combined")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if op == "eq":
        return a == b
    raise ValueError(f"unknown scalar operation {op!r}")


def scalar_pow(base: Scalar, exponent: int) -> Scalar:
    return base ** exponent
