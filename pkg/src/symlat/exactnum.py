"""Exact scalars: generalized binomials, double factorials, factored integers.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator. :class:`FactoredInteger` stores a
nonzero rational as a sign and a map ``prime -> exponent`` so that huge
discriminants such as ``2^1106 * 3^92`` stay cheap to multiply, divide and
inspect.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "FactoredInteger",
    "FactorizationError",
    "Rational",
    "binom",
    "double_factorial",
    "factorize",
    "format_rational",
    "parse_rational",
    "to_fraction",
]

Rational = Union[int, Fraction]

TRIAL_DIVISION_LIMIT = 10**6


class FactorizationError(ValueError):
    """Raised when an integer has a cofactor beyond the trial-division range."""


def binom(z: int, k: int) -> int:
    """Generalized binomial coefficient ``z(z-1)...(z-k+1)/k!``.

    Defined for every integer ``z``; zero for negative ``k``. For negative
    ``z`` this is ``(-1)^k binom(-z+k-1, k)``, which is *not* zero.

    >>> binom(5, 2), binom(-2, 22), binom(7, -1)
    (10, 23, 0)
    """
    if k < 0:
        return 0
    if z >= 0:
        return math.comb(z, k)
    value = math.comb(-z + k - 1, k)
    return -value if k % 2 else value


def double_factorial(n: int) -> int:
    """``n(n-2)(n-4)...`` for ``n >= -1``, with ``(-1)!! = 0!! = 1``."""
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n} < -1")
    result = 1
    for i in range(n, 1, -2):
        result *= i
    return result


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, FactoredInteger):
        return value.value()
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"not an exact rational: {value!r}")
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; floats are rejected."""
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/[+-]?\d+)?", text):
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(text)


def format_rational(value: Rational) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` by trial division.

    Cofactors left after dividing out every prime below ``10**6`` are accepted
    only when they are provably prime (smaller than ``10**12``).
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 5
    step = 2
    while p * p <= n and p < TRIAL_DIVISION_LIMIT:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        if p * p <= n:
            raise FactorizationError(
                f"unfactored cofactor {n} exceeds the trial-division range"
            )
        factors[n] = factors.get(n, 0) + 1
    return factors


class FactoredInteger:
    """Nonzero rational number held as ``sign * prod(p**e)``.

    Exponents may be negative, so the class is closed under division. The
    text form is ``[-]p1^e1 * p2^e2 * ...`` with ascending primes, exponent
    ``1`` omitted, and ``1`` for the empty product.
    """

    __slots__ = ("_sign", "_factors", "_hash")

    def __init__(self, factors: Mapping[int, int] | None = None, sign: int = 1):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        cleaned = {}
        for p, e in (factors or {}).items():
            if e == 0:
                continue
            if p < 2:
                raise ValueError(f"factor base {p} is not a prime")
            cleaned[int(p)] = int(e)
        self._sign = sign
        self._factors = dict(sorted(cleaned.items()))
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "FactoredInteger":
        if n == 0:
            raise ValueError("FactoredInteger cannot represent zero")
        return cls(factorize(n), 1 if n > 0 else -1)

    @classmethod
    def from_rational(cls, value: Rational) -> "FactoredInteger":
        value = Fraction(value)
        if value == 0:
            raise ValueError("FactoredInteger cannot represent zero")
        num = cls.from_int(value.numerator)
        if value.denominator == 1:
            return num
        return num / cls.from_int(value.denominator)

    @classmethod
    def coerce(cls, value) -> "FactoredInteger":
        if isinstance(value, FactoredInteger):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls.from_rational(value)

    @classmethod
    def product(cls, items: Iterable) -> "FactoredInteger":
        result = cls()
        for item in items:
            result = result * item
        return result

    @classmethod
    def parse(cls, text: str) -> "FactoredInteger":
        """Inverse of :meth:`__str__`; also accepts plain integers ``"105"``."""
        text = text.strip()
        sign = 1
        if text.startswith("-"):
            sign = -1
            text = text[1:].strip()
        if text in ("", "1"):
            if text == "":
                raise ValueError("empty factored integer")
            return cls(sign=sign)
        result = cls(sign=sign)
        for part in text.split("*"):
            part = part.strip()
            m = re.fullmatch(r"(\d+)(?:\^(-?\d+))?", part)
            if not m:
                raise ValueError(f"malformed factor {part!r}")
            base = int(m.group(1))
            exp = int(m.group(2)) if m.group(2) is not None else 1
            if base == 0:
                raise ValueError("zero factor")
            result = result * cls.from_int(base) ** exp
        return result

    # accessors --------------------------------------------------------

    @property
    def sign(self) -> int:
        return self._sign

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    def exponent(self, p: int) -> int:
        return self._factors.get(p, 0)

    def value(self) -> Fraction:
        num = den = 1
        for p, e in self._factors.items():
            if e > 0:
                num *= p**e
            else:
                den *= p ** (-e)
        return Fraction(self._sign * num, den)

    def __int__(self) -> int:
        v = self.value()
        if v.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return v.numerator

    def is_integer(self) -> bool:
        return all(e > 0 for e in self._factors.values())

    def prime_support(self) -> set[int]:
        return {p for p, e in self._factors.items() if e > 0}

    def is_square(self) -> bool:
        return self._sign == 1 and all(e % 2 == 0 for e in self._factors.values())

    def squarefree_part(self) -> "FactoredInteger":
        return FactoredInteger({p: e % 2 for p, e in self._factors.items()}, self._sign)

    # arithmetic -------------------------------------------------------

    def __mul__(self, other) -> "FactoredInteger":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        merged = dict(self._factors)
        for p, e in other._factors.items():
            merged[p] = merged.get(p, 0) + e
        return FactoredInteger(merged, self._sign * other._sign)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FactoredInteger":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FactoredInteger":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def inverse(self) -> "FactoredInteger":
        return FactoredInteger({p: -e for p, e in self._factors.items()}, self._sign)

    def __pow__(self, n: int) -> "FactoredInteger":
        if not isinstance(n, int):
            return NotImplemented
        sign = self._sign if n % 2 else 1
        return FactoredInteger({p: e * n for p, e in self._factors.items()}, sign)

    def __neg__(self) -> "FactoredInteger":
        return FactoredInteger(self._factors, -self._sign)

    def __abs__(self) -> "FactoredInteger":
        return FactoredInteger(self._factors, 1)

    def sqrt(self) -> "FactoredInteger":
        if not self.is_square():
            raise ValueError(f"{self} is not a perfect square")
        return FactoredInteger({p: e // 2 for p, e in self._factors.items()})

    def divides(self, other) -> bool:
        """True when ``other / self`` is an integer (both taken as integers)."""
        other = self._lift(other)
        return (other / self).is_integer()

    @staticmethod
    def _lift(other):
        if isinstance(other, FactoredInteger):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FactoredInteger.from_rational(other)
        return NotImplemented

    # comparison / display --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, FactoredInteger):
            return self._sign == other._sign and self._factors == other._factors
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return other != 0 and self.value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._sign, tuple(self._factors.items())))
        return self._hash

    def __str__(self) -> str:
        parts = []
        for p, e in self._factors.items():
            if e == 1:
                parts.append(str(p))
            else:
                parts.append(f"{p}^{e}")
        body = " * ".join(parts) if parts else "1"
        return ("-" if self._sign < 0 else "") + body

    def __repr__(self) -> str:
        return f"FactoredInteger({str(self)!r})"
