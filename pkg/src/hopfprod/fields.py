"""Exact ground fields: the rationals and prime fields.

Every object in this package carries a field descriptor.  Rational values are
``fractions.Fraction`` (always reduced, arbitrary precision); values mod p are
plain ints in ``[0, p)``.  Mixing objects over different fields is an error,
checked by :func:`same_field`.
"""
from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(ValueError):
    """Two objects from different ground fields were combined."""


class Rationals:
    """The field of rational numbers.  Use the module singleton ``QQ``."""

    name = "rational"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of(self, num, den=1):
        return Fraction(num, den)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def to_pair(self, a):
        return a.numerator, a.denominator


class PrimeField:
    """The field of integers mod a prime p, values stored in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"mod {p}"

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("mod", self.p))

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def of(self, num, den=1):
        return num * pow(den, -1, self.p) % self.p if den != 1 else num % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def to_pair(self, a):
        return a % self.p, 1


QQ = Rationals()


def same_field(*objs):
    """Return the common field of the given carriers, or raise."""
    fields = {obj.field for obj in objs}
    if len(fields) != 1:
        raise FieldMismatchError(f"mixed ground fields: {sorted(map(repr, fields))}")
    return next(iter(fields))
