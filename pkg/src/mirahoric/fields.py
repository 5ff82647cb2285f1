"""Exact coefficient scalars: rational numbers and prime fields F_ell.

All arithmetic is exact; no floating point is used anywhere. Rational
coefficients are plain ``fractions.Fraction`` values, prime-field
coefficients are ``Mod`` residues. A small field object (``RationalField``
or ``PrimeField``) supplies zero/one, coercion and string formatting, so
the linear algebra layer can stay generic.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(n: int) -> bool:
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


class Mod:
    """Residue a mod ell, ell prime. Supports field arithmetic with ints."""

    __slots__ = ("a", "ell")

    def __init__(self, a: int, ell: int):
        self.a = a % ell
        self.ell = ell

    def _lift(self, other):
        if isinstance(other, Mod):
            if other.ell != self.ell:
                raise ValueError(f"mixed moduli {self.ell} and {other.ell}")
            return other
        if isinstance(other, int):
            return Mod(other, self.ell)
        if isinstance(other, Fraction):
            return Mod(other.numerator, self.ell) / Mod(other.denominator, self.ell)
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Mod(self.a + o.a, self.ell)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Mod(self.a - o.a, self.ell)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Mod(o.a - self.a, self.ell)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Mod(self.a * o.a, self.ell)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return Mod(-self.a, self.ell)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Mod(pow(self.a, e, self.ell), self.ell)

    def inverse(self) -> "Mod":
        if self.a == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.ell}")
        return Mod(pow(self.a, -1, self.ell), self.ell)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a

    def __hash__(self):
        return hash((self.a, self.ell))

    def __bool__(self):
        return self.a != 0

    def __repr__(self):
        return f"{self.a} mod {self.ell}"


class RationalField:
    """The field Q, with elements represented as Fraction."""

    char = 0

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, a) -> Fraction:
        return Fraction(a)

    def parse(self, s: str) -> Fraction:
        return Fraction(s.strip())

    def to_str(self, x) -> str:
        return str(Fraction(x))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_ell for a prime ell."""

    def __init__(self, ell: int):
        if not is_prime(ell):
            raise ValueError(f"{ell} is not prime")
        self.ell = ell
        self.char = ell
        self.zero = Mod(0, ell)
        self.one = Mod(1, ell)

    def of(self, a) -> Mod:
        if isinstance(a, Mod):
            if a.ell != self.ell:
                raise ValueError(f"mixed moduli {a.ell} and {self.ell}")
            return a
        if isinstance(a, Fraction):
            if a.denominator % self.ell == 0:
                raise ValueError(f"{a} is not {self.ell}-integral")
            return Mod(a.numerator, self.ell) / Mod(a.denominator, self.ell)
        return Mod(int(a), self.ell)

    def parse(self, s: str) -> Mod:
        s = s.strip()
        if "mod" in s:
            a, ell = s.split("mod")
            if int(ell) != self.ell:
                raise ValueError(f"expected modulus {self.ell}, got {ell.strip()}")
            return Mod(int(a), self.ell)
        return self.of(Fraction(s))

    def to_str(self, x) -> str:
        return f"{x.a} mod {self.ell}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.ell == self.ell

    def __hash__(self):
        return hash(("GF", self.ell))

    def __repr__(self):
        return f"GF({self.ell})"


QQ = RationalField()


def scalar_str(x) -> str:
    """Exact string form of a coefficient: "7/3", "5" or "5 mod 11"."""
    if isinstance(x, Mod):
        return repr(x)
    return str(Fraction(x))
