"""Exact coefficient fields: the rationals and prime fields.

Every computation in this package runs over one of these two domains.
Rational elements are `fractions.Fraction` (always reduced, positive
denominator); prime-field elements are plain ints in ``[0, p)`` with the
modulus carried by the field object, so one field instance is shared per
computation context.
"""

from __future__ import annotations

from fractions import Fraction


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


class Rationals:
    """The field of rational numbers."""

    name = "q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, num, den=1) -> Fraction:
        if den == 0:
            raise ZeroDivisionError("invalid rational: zero denominator")
        return Fraction(num, den)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if not a:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero in Q")
        return Fraction(a) / b

    @staticmethod
    def from_int(k):
        return Fraction(k)

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(("domain", "q"))

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class PrimeField:
    """The field F_p; elements are int residues in ``[0, p)``."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"fp:{p}"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def __call__(self, num, den=1) -> int:
        p = self.p
        if den % p == 0:
            raise ZeroDivisionError(f"invalid denominator {den} mod {p}")
        a = num % p
        if den % p == 1:
            return a
        return a * pow(den, -1, p) % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def from_int(self, k):
        return k % self.p

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("domain", self.p))

    def __repr__(self):
        return f"GF({self.p})"


_FIELD_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Return the (cached) prime field with p elements."""
    field = _FIELD_CACHE.get(p)
    if field is None:
        field = _FIELD_CACHE[p] = PrimeField(p)
    return field


def domain_from_name(name: str):
    """Resolve a field tag: ``q`` for the rationals, ``fp:<p>`` for F_p."""
    if name == "q":
        return QQ
    if name.startswith("fp:"):
        return GF(int(name[3:]))
    raise ValueError(f"unknown field {name!r} (expected 'q' or 'fp:<p>')")
