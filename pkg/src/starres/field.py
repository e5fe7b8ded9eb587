"""Coefficient fields: exact rationals (default) or a prime field F_p.

One field is active per run; complexes record the field they were built in
and refuse to mix with complexes from another field.
"""

from __future__ import annotations

import contextlib
from fractions import Fraction

# products of two residues must fit in int64 inside the compiled kernels
MAX_PRIME = 2**31 - 1


class RationalField:
    name = "rational"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        return Fraction(x)

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

    def div(self, a, b):
        return a / b

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    characteristic: int

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p > MAX_PRIME:
            raise ValueError(f"prime {p} exceeds supported bound {MAX_PRIME}")
        self.characteristic = p
        self.zero = 0
        self.one = 1

    @property
    def name(self):
        return f"prime:{self.characteristic}"

    def __call__(self, x):
        p = self.characteristic
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b % self.characteristic

    def neg(self, a):
        return -a % self.characteristic

    def inv(self, a):
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return a * self.inv(b) % self.characteristic

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("prime", self.characteristic))

    def __repr__(self):
        return f"PrimeField({self.characteristic})"


QQ = RationalField()
_active = [QQ]


def parse_field(text: str):
    """'rational' or 'prime:<p>'."""
    text = text.strip().lower()
    if text in ("rational", "qq", "q"):
        return QQ
    if text.startswith("prime:"):
        return PrimeField(int(text.split(":", 1)[1]))
    raise ValueError(f"unknown field {text!r}; expected 'rational' or 'prime:<p>'")


def get_field():
    return _active[-1]


def set_field(field):
    if isinstance(field, str):
        field = parse_field(field)
    _active[-1] = field


@contextlib.contextmanager
def using_field(field):
    if isinstance(field, str):
        field = parse_field(field)
    _active.append(field)
    try:
        yield field
    finally:
        _active.pop()
