"""Exact coefficient arithmetic over the rationals and small prime fields."""

from __future__ import annotations

from fractions import Fraction

MAX_PRIME = 97


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface: elements are Fractions (Q) or ints in [0, p) (GF(p))."""

    name = "?"

    def of(self, x):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @property
    def zero(self):
        return self.of(0)

    @property
    def one(self):
        return self.of(1)

    def __repr__(self):
        return self.name


class Rationals(Field):
    name = "Q"

    def of(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p > MAX_PRIME:
            raise ValueError(f"prime fields supported up to p = {MAX_PRIME}")
        self.p = p
        self.name = f"F{p}"

    def of(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


QQ = Rationals()


def parse_field(tag: str) -> Field:
    """Parse a field tag: ``q`` for the rationals, ``fp:<p>`` for GF(p)."""
    tag = tag.strip().lower()
    if tag == "q":
        return QQ
    if tag.startswith("fp:"):
        return PrimeField(int(tag[3:]))
    raise ValueError(f"unknown field tag {tag!r} (expected 'q' or 'fp:<p>')")
