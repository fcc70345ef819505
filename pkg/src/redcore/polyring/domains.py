"""Exact coefficient domains: the rationals and prime fields."""

from __future__ import annotations

from fractions import Fraction

import gmpy2
from gmpy2 import mpq


class RationalField:
    """The field of rational numbers, backed by ``gmpy2.mpq``.

    Elements are always in lowest terms with a positive denominator; that is
    the normal form ``mpq`` maintains.
    """

    characteristic = 0
    name = "QQ"

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def convert(self, value) -> mpq:
        if isinstance(value, Fraction):
            return mpq(value.numerator, value.denominator)
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not allowed")
        return mpq(value)

    def from_ratio(self, num: int, den: int) -> mpq:
        if den == 0:
            raise ZeroDivisionError("division by zero coefficient")
        return mpq(num, den)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def to_str(self, a) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def to_fraction(self, a) -> Fraction:
        return Fraction(int(a.numerator), int(a.denominator))


def _is_prime(p: int) -> bool:
    return p >= 2 and bool(gmpy2.is_prime(p, 50))


class PrimeField:
    """The prime field F_p with residues stored as Python ints in [0, p)."""

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.characteristic = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return self.name

    def convert(self, value) -> int:
        p = self.characteristic
        if isinstance(value, Fraction) or (hasattr(value, "denominator") and not isinstance(value, int)):
            return self.from_ratio(int(value.numerator), int(value.denominator))
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not allowed")
        return int(value) % p

    def from_ratio(self, num: int, den: int) -> int:
        p = self.characteristic
        if den % p == 0:
            raise ZeroDivisionError("division by zero coefficient")
        return num * pow(den, -1, p) % p

    def inv(self, a):
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def to_str(self, a) -> str:
        return str(a)

    def to_fraction(self, a) -> Fraction:
        return Fraction(a)


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def domain_for_characteristic(char: int):
    return QQ if char == 0 else PrimeField(char)
