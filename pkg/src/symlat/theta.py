"""Closed-form Gram determinant of the induced form on ``Sym^k``.

``det(Gram on Sym^k V) = det(G)^binom(d+k, d+1) * theta(d, k)`` where
``rank V = d+1`` and ``theta`` is a product of small integer powers.

All binomials here are the generalized ones from :func:`symlat.exactnum.binom`.
Negative upper arguments do occur in the second product (e.g. ``binom(-2, 22)
= 23`` for ``d=22, k=3, i=27``) and truncating them to zero gives wrong
answers such as ``theta(d, 2) = 2^d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactnum import FactoredInteger, binom, double_factorial, factorize
from .linalg import SizeLimitError, det_exact
from .symform import GramMatrix, induced_gram

__all__ = [
    "MAX_VERIFY_BASIS",
    "MainTheoremReport",
    "ThetaResult",
    "det_closed_form",
    "gram_exponent",
    "inductive_ratio",
    "theta",
    "theta_result",
    "verify_maintheorem",
]

MAX_VERIFY_BASIS = 200


def _accumulate(exps: dict[int, int], base: int, power: int) -> None:
    if power == 0 or base == 1:
        return
    for p, e in factorize(base).items():
        exps[p] = exps.get(p, 0) + e * power


def theta(d: int, k: int) -> FactoredInteger:
    """The combinatorial factor ``theta_{d,k}``, factored.

    >>> str(theta(22, 3))
    '2^506 * 3^92'
    """
    if d < 0 or k < 0:
        raise ValueError("theta needs d >= 0 and k >= 0")
    exps: dict[int, int] = {}
    for i in range(1, k + 1):
        _accumulate(exps, i, binom(k - i + d, d) * d)
    if d % 2 == 0:
        for i in range(1, 2 * k + d, 2):
            _accumulate(exps, i, binom(k - i + d, d))
    else:
        for i in range(1, k + (d - 1) // 2 + 1):
            _accumulate(exps, i, binom(k - i + d, d) - binom(k - 2 * i + d, d))
    return FactoredInteger(exps)


def gram_exponent(d: int, k: int) -> int:
    """Power of ``det G`` in the closed form: ``binom(d+k, d+1)``."""
    return binom(d + k, d + 1)


@dataclass(frozen=True)
class ThetaResult:
    d: int
    k: int
    value: FactoredInteger
    exponent_of_detG: int


def theta_result(d: int, k: int) -> ThetaResult:
    return ThetaResult(d, k, theta(d, k), gram_exponent(d, k))


def det_closed_form(det_g, d: int, k: int, theta_fn: Callable = theta):
    """``det_g^binom(d+k, d+1) * theta(d, k)``.

    A :class:`FactoredInteger` input gives a factored result; ``int`` or
    ``Fraction`` input (zero allowed) gives a ``Fraction``.
    """
    e = gram_exponent(d, k)
    t = theta_fn(d, k)
    if isinstance(det_g, FactoredInteger):
        return det_g**e * t
    return Fraction(det_g) ** e * t.value()


def inductive_ratio(d: int, k: int) -> Fraction:
    """``D(d,k) / prod_{j<=k} D(d-1,j)`` from the norm recursion of the ``h`` basis.

    ``prod_j [(k-j)! (2j+d)!! (2k+d-1)!! / (j+k+d)!]^binom(j+d-1, d-1)``.
    """
    if d < 1:
        raise ValueError("inductive ratio needs d >= 1")
    out = Fraction(1)
    for j in range(k + 1):
        base = Fraction(
            math.factorial(k - j) * double_factorial(2 * j + d) * double_factorial(2 * k + d - 1),
            math.factorial(j + k + d),
        )
        out *= base ** binom(j + d - 1, d - 1)
    return out


@dataclass(frozen=True)
class MainTheoremReport:
    d: int
    k: int
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def verify_maintheorem(
    g: GramMatrix, k: int, theta_fn: Callable = theta
) -> MainTheoremReport:
    """Brute-force determinant of the induced Gram matrix against the closed form.

    ``theta_fn`` exists so the harness can be fed a deliberately wrong factor.
    """
    d = g.size - 1
    if binom(k + d, d) > MAX_VERIFY_BASIS:
        raise SizeLimitError(
            f"basis size {binom(k + d, d)} exceeds the verification cap {MAX_VERIFY_BASIS}"
        )
    lhs = det_exact(induced_gram(g, k).gram)
    rhs = det_closed_form(det_exact(g.tolist()), d, k, theta_fn)
    return MainTheoremReport(d, k, lhs, rhs)
