"""Exact coefficient arithmetic over the rationals and over prime fields.

Rational scalars are plain ``fractions.Fraction`` values: arbitrary
precision, always reduced, always with positive denominator.  Prime-field
scalars are :class:`GFElement` wrappers around a canonical representative in
``[0, p)``.  Both kinds support ``+ - * /`` and unary ``-``, so polynomial
code never needs to know which field it is working over; the field objects
(:data:`QQ` and :func:`GF`) supply zero, one, coercion, parsing, formatting
and sampling.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch

# Witnesses making Miller-Rabin deterministic for all n < 3.3 * 10**24,
# comfortably past the 2**63 cap on primes accepted below.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

MAX_PRIME = 2**63


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for machine-word inputs."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Rationals:
    """The field of rational numbers; scalars are ``Fraction`` values."""

    kind = "rationals"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, GFElement):
            raise FieldMismatch("cannot coerce a prime-field element into QQ")
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def parse_scalar(self, text: str) -> Fraction:
        return Fraction(text.strip())

    def format_scalar(self, c: Fraction) -> str:
        return str(c)

    def scalar_sign_split(self, c: Fraction) -> tuple[bool, str]:
        """(is_negative, magnitude string) for rendering polynomials."""
        return c < 0, str(abs(c))

    def sample_scalar(self, rng: random.Random) -> Fraction:
        # Uniform on the integers -9..9, embedded in QQ.
        return Fraction(rng.randint(-9, 9))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def to_json(self) -> dict:
        return {"kind": self.kind}


class GFElement:
    """A residue modulo a fixed prime, stored as its representative in [0, p)."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _check(self, other) -> "GFElement":
        if not isinstance(other, GFElement):
            raise FieldMismatch(f"cannot combine GF({self.p}) element with {other!r}")
        if other.p != self.p:
            raise FieldMismatch(f"mixed prime fields GF({self.p}) and GF({other.p})")
        return other

    def __add__(self, other):
        other = self._check(other)
        return GFElement(self.p, self.v + other.v)

    def __sub__(self, other):
        other = self._check(other)
        return GFElement(self.p, self.v - other.v)

    def __mul__(self, other):
        other = self._check(other)
        return GFElement(self.p, self.v * other.v)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __neg__(self):
        return GFElement(self.p, -self.v)

    def inverse(self) -> "GFElement":
        if self.v == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return GFElement(self.p, pow(self.v, -1, self.p))

    def __eq__(self, other):
        return isinstance(other, GFElement) and other.p == self.p and other.v == self.v

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"GF({self.p})({self.v})"


class PrimeField:
    """The prime field GF(p); ``p`` must pass the primality check."""

    kind = "prime_field"

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2:
            raise ValueError(f"field characteristic must be a prime, got {p!r}")
        if p >= MAX_PRIME:
            raise ValueError(f"prime {p} exceeds the machine-word cap {MAX_PRIME}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = GFElement(p, 0)
        self.one = GFElement(p, 1)

    @property
    def characteristic(self) -> int:
        return self.p

    def coerce(self, x) -> GFElement:
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise FieldMismatch(f"element of GF({x.p}) used in GF({self.p})")
            return x
        if isinstance(x, int):
            return GFElement(self.p, x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"denominator of {x} vanishes in GF({self.p})")
            return GFElement(self.p, x.numerator) / GFElement(self.p, x.denominator)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def parse_scalar(self, text: str) -> GFElement:
        return self.coerce(Fraction(text.strip()))

    def format_scalar(self, c: GFElement) -> str:
        return str(self.coerce(c).v)

    def scalar_sign_split(self, c: GFElement) -> tuple[bool, str]:
        return False, str(self.coerce(c).v)

    def sample_scalar(self, rng: random.Random) -> GFElement:
        return GFElement(self.p, rng.randrange(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "prime": self.p}


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def char_ok(field, h) -> bool:
    """Whether the field characteristic is 0 or exceeds the largest degree
    in which the given Hilbert function is nonzero."""
    if field.kind == "rationals":
        return True
    support = [i for i, v in enumerate(h) if v != 0]
    if not support:
        return True
    return field.p > max(support)


def field_from_json(obj) -> Rationals | PrimeField:
    if obj is None:
        return QQ
    kind = obj.get("kind")
    if kind == "rationals":
        return QQ
    if kind == "prime_field":
        return GF(int(obj["prime"]))
    raise ValueError(f"unknown field kind {kind!r}")
