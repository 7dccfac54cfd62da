"""The monic family ``p_n^m`` and its moment functional.

``p_n^m`` has degree ``n`` and parity ``n``; for fixed ``m`` the polynomials
satisfy ``p_{n+1} = x p_n - d_n^m p_{n-1}`` and are orthogonal for the
functional ``f -> int_0^inf int_R z^(m-1) f(y/z) exp(-(y^2+z^2)/2) dy dz``.
That functional takes transcendental values, so this module works with its
normalisation ``Lhat = L / L(1)``, which is rational on every ``x^j`` with
``j < m``. Orthogonality is unaffected by the scaling.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exactnum import double_factorial, format_rational, to_fraction

__all__ = [
    "UniPoly",
    "admissible",
    "d_coeff",
    "functional",
    "gamma_ratio",
    "moment",
    "norm_hat",
    "norm_hat_closed_form",
    "norm_closed_form_ratio",
    "p_poly",
    "recurrence_residual",
    "trig_relation_residual",
]


class UniPoly:
    """Univariate polynomial; ``coeffs[j]`` is the coefficient of ``x^j``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def __add__(self, other) -> "UniPoly":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[j] + other[j] for j in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "UniPoly":
        return _lift(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = to_fraction(other)
            return UniPoly(c * a for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        out = UniPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def derivative(self) -> "UniPoly":
        return UniPoly(j * c for j, c in enumerate(self.coeffs) if j)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        terms = [(j, c) for j, c in enumerate(self.coeffs) if c][::-1]
        if not terms:
            return "0"
        out = ""
        for idx, (j, c) in enumerate(terms):
            mag = abs(c)
            if j == 0:
                body = format_rational(mag)
            else:
                mono = "x" if j == 1 else f"x^{j}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            if idx == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r})"


def _lift(other) -> UniPoly:
    return other if isinstance(other, UniPoly) else UniPoly([other])


def _check_domain(n: int, m: int) -> None:
    if n < 0 or 2 * n > m + 1:
        raise ValueError(f"p_n^m needs 0 <= 2n <= m+1, got n={n}, m={m}")


@lru_cache(maxsize=None)
def p_poly(n: int, m: int) -> UniPoly:
    """Monic ``p_n^m`` from its explicit coefficients.

    >>> str(p_poly(2, 5))
    'x^2 - 1/3'
    """
    _check_domain(n, m)
    top = math.factorial(n) * double_factorial(m - 2 * n)
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n % 2, n + 1, 2):
        sign = -1 if ((n - j) // 2) % 2 else 1
        den = (
            math.factorial(j)
            * double_factorial(m - n - j)
            * double_factorial(n - j)
        )
        coeffs[j] = Fraction(sign * top, den)
    return UniPoly(coeffs)


def d_coeff(n: int, m: int) -> Fraction:
    """Recurrence coefficient ``n(m-n+1) / ((m-2n)(m-2n+2))``."""
    if n < 1:
        raise ValueError("d_n^m is defined for n >= 1")
    if 2 * n > m - 1:
        raise ValueError(f"d_n^m needs 2n <= m-1, got n={n}, m={m}")
    return Fraction(n * (m - n + 1), (m - 2 * n) * (m - 2 * n + 2))


@lru_cache(maxsize=None)
def moment(j: int, m: int) -> Fraction:
    """``Lhat(x^j)``: 0 for odd ``j``, else ``(j-1)!! / prod_{l=1}^{j/2} (m-2l)``."""
    if m < 1:
        raise ValueError("the functional is defined for m >= 1")
    if not 0 <= j <= m - 1:
        raise ValueError(f"moment needs 0 <= j <= m-1, got j={j}, m={m}")
    if j % 2:
        return Fraction(0)
    den = math.prod(m - 2 * l for l in range(1, j // 2 + 1))
    return Fraction(double_factorial(j - 1), den)


def functional(f: UniPoly, m: int) -> Fraction:
    if f.degree > m - 1:
        raise ValueError(f"degree {f.degree} exceeds m-1 = {m - 1}")
    return sum((c * moment(j, m) for j, c in enumerate(f.coeffs) if c), Fraction(0))


def norm_hat(n: int, m: int) -> Fraction:
    """``Lhat(p_n^m ** 2) = prod_{l=1}^n d_l^m``."""
    if n < 0 or 2 * n > m - 1:
        raise ValueError(f"norm needs 0 <= 2n <= m-1, got n={n}, m={m}")
    return math.prod((d_coeff(l, m) for l in range(1, n + 1)), start=Fraction(1))


def gamma_ratio(a: Fraction, b: Fraction) -> Fraction:
    """``Gamma(a) / Gamma(b)`` for positive ``a, b`` with ``a - b`` an integer."""
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValueError("gamma_ratio needs positive arguments")
    diff = a - b
    if diff.denominator != 1:
        raise ValueError("gamma_ratio needs an integer difference")
    out = Fraction(1)
    if diff >= 0:
        for i in range(int(diff)):
            out *= b + i
    else:
        for i in range(int(-diff)):
            out /= a + i
    return out


def norm_closed_form_ratio(n: int, m: int) -> Fraction:
    """Ratio of the Gamma closed form for ``L(p_n^2)`` at ``n`` and ``n-1``.

    The closed form is
    ``2^(3m/2 - 2n - 1/2) n!/(m-n)! Gamma(m/2-n) Gamma(m/2-n+1) Gamma((m+1)/2)``;
    the ``Gamma((m+1)/2)`` factors cancel in the ratio.
    """
    if n < 1 or 2 * n > m - 1:
        raise ValueError(f"ratio needs 1 <= n and 2n <= m-1, got n={n}, m={m}")
    h = Fraction(m, 2)
    power = Fraction(1, 4)
    facs = Fraction(math.factorial(n) * math.factorial(m - n + 1),
                    math.factorial(m - n) * math.factorial(n - 1))
    gammas = gamma_ratio(h - n, h - n + 2)
    return power * facs * gammas


def norm_hat_closed_form(n: int, m: int) -> Fraction:
    """Gamma closed form for ``L(p_n^2)`` divided by ``L(1)``; rational."""
    if n < 0 or 2 * n > m - 1:
        raise ValueError(f"norm needs 0 <= 2n <= m-1, got n={n}, m={m}")
    h = Fraction(m, 2)
    facs = Fraction(math.factorial(n) * math.factorial(m), math.factorial(m - n))
    gammas = gamma_ratio(h - n, h) * gamma_ratio(h - n + 1, h + 1)
    return Fraction(1, 4**n) * facs * gammas


def trig_relation_residual(n: int, m: int) -> UniPoly:
    """``(1+t^2) q'(t) - (m-1) t q(t) - (n-m) p_n^m(t)`` with ``q = p_{n-1}^{m-2}``.

    This is the derivative identity for ``q(tan w) cos(w)^(m-1)`` with the
    trigonometric factors divided out; it vanishes identically.
    """
    if n < 1:
        raise ValueError("relation needs n >= 1")
    _check_domain(n, m)
    q = p_poly(n - 1, m - 2)
    t = UniPoly.x()
    lhs = (UniPoly([1, 0, 1]) * q.derivative()) - (t * q) * (m - 1)
    return lhs - p_poly(n, m) * (n - m)


def recurrence_residual(n: int, m: int) -> UniPoly:
    """``p_{n+1} - x p_n + d_n p_{n-1}``; zero whenever ``2n <= m-1``."""
    return p_poly(n + 1, m) - UniPoly.x() * p_poly(n, m) + p_poly(n - 1, m) * d_coeff(n, m)


def admissible(m: int) -> Sequence[int]:
    """Degrees ``n`` with ``0 <= 2n <= m+1``."""
    return range(0, (m + 1) // 2 + 1)
