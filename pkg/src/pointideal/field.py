"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are plain Python values -- ``fractions.Fraction`` for the
rationals, canonical residues in ``range(p)`` as ``int`` for F_p.  A
field object supplies arithmetic, parsing and printing for its scalars.
Everything is exact; floating point is rejected outright because the
algorithms downstream rely on exact zero tests.

Scalar grammar: ``int := ['-'] digit+`` and, for the rationals only,
``rational := int ['/' digit+]``.
"""

from __future__ import annotations

import re
from fractions import Fraction

_INT_RE = re.compile(r"-?\d+")
_RATIONAL_RE = re.compile(r"(-?\d+)(?:/(\d+))?")

_MAX_PRIME = 2**64

# Deterministic Miller-Rabin witnesses, valid for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for word-sized integers."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers.  Scalars are ``Fraction`` values,
    which are always stored reduced with positive denominator."""

    kind = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, float):
            raise TypeError("floating point values are not exact; use Fraction or str")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into the rationals")

    def parse(self, text: str) -> Fraction:
        m = _RATIONAL_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"malformed rational scalar {text!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return Fraction(num)
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(num, den)

    def format(self, x: Fraction) -> str:
        return str(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 / a

    def pow(self, a, k: int):
        return a**k

    def is_negative(self, a) -> bool:
        return a < 0

    def vec_scale(self, c, row):
        return [c * x for x in row]

    def vec_sub_scaled(self, row, c, other):
        """row - c * other, elementwise."""
        return [x - c * y for x, y in zip(row, other)]

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """The prime field F_p.  Scalars are ints in ``range(p)``."""

    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int):
            raise TypeError("p must be an integer")
        if p >= _MAX_PRIME:
            raise ValueError(f"p = {p} exceeds the supported word-sized range")
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, value) -> int:
        if isinstance(value, float):
            raise TypeError("floating point values are not exact; use int or str")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into F_{self.p}")

    def parse(self, text: str) -> int:
        m = _INT_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"malformed prime-field scalar {text!r}")
        return int(text) % self.p

    def format(self, x: int) -> str:
        return str(x)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero")
        return a * pow(b, -1, self.p) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def pow(self, a, k: int):
        return pow(a, k, self.p)

    def is_negative(self, a) -> bool:
        return False

    def vec_scale(self, c, row):
        p = self.p
        return [c * x % p for x in row]

    def vec_sub_scaled(self, row, c, other):
        """row - c * other, elementwise."""
        p = self.p
        return [(x - c * y) % p for x, y in zip(row, other)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = RationalField()
