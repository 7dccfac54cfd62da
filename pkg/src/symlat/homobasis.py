"""Homogeneous polynomials orthogonal for the Gaussian moment bracket.

The bracket is ``<<f, g>> = E[f(X) g(X)]`` for a standard Gaussian vector
``X`` in ``R^(d+1)``; on monomials it is ``prod_i (a_i+b_i-1)!!`` when every
``a_i + b_i`` is even and 0 otherwise. This equals the pair-partition bracket
of :mod:`symlat.symform` at the identity Gram matrix.

``h_alpha`` is built recursively over the number of variables:
``h_alpha(x) = p_{a_d}^{2|alpha|+d}(x_d / r) r^{a_d} h_{alpha'}(x')`` with
``r^2 = x_0^2 + ... + x_{d-1}^2``. Only even powers of ``r`` survive, so the
result is a genuine polynomial with leading monomial ``x^alpha``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinat import MultiIndex, enumerate_monomials
from .exactnum import binom, double_factorial
from .linalg import SizeLimitError
from .multipoly import MultiPoly
from .orthopoly import p_poly

__all__ = [
    "HBasisElement",
    "HGramReport",
    "MAX_HBASIS_SIZE",
    "MultiPoly",
    "TransitionReport",
    "gram_h",
    "h_alpha",
    "h_norm",
    "h_poly",
    "moment_bracket",
    "transition_check",
]

MAX_HBASIS_SIZE = 200


@lru_cache(maxsize=None)
def _monomial_moment(exps: tuple[int, ...]) -> int:
    if any(e % 2 for e in exps):
        return 0
    return math.prod(double_factorial(e - 1) for e in exps)


def moment_bracket(f: MultiPoly, g: MultiPoly) -> Fraction:
    """Gaussian expectation of ``f * g`` (unit total mass)."""
    if f.nvars != g.nvars:
        raise ValueError("variable-count mismatch")
    acc = Fraction(0)
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            m = _monomial_moment(tuple(a + b for a, b in zip(e1, e2)))
            if m:
                acc += c1 * c2 * m
    return acc


def _alpha_tuple(alpha) -> tuple[int, ...]:
    if isinstance(alpha, MultiIndex):
        return alpha.exps
    return MultiIndex(alpha).exps


@lru_cache(maxsize=None)
def _radius_power(half: int, nvars: int, radial: int) -> MultiPoly:
    """``(x_0^2 + ... + x_{radial-1}^2)^half`` in ``nvars`` variables."""
    r2 = MultiPoly(
        nvars,
        {tuple(2 * int(t == i) for t in range(nvars)): 1 for i in range(radial)},
    )
    return r2**half


@lru_cache(maxsize=None)
def _h_cached(alpha: tuple[int, ...]) -> MultiPoly:
    if len(alpha) == 1:
        return MultiPoly.monomial(alpha)
    d = len(alpha) - 1
    nvars = d + 1
    n = alpha[-1]
    p = p_poly(n, 2 * sum(alpha) + d)
    radial_part = MultiPoly(nvars)
    for j, c in enumerate(p.coeffs):
        if not c:
            continue
        xd = MultiPoly.monomial(tuple(j if t == d else 0 for t in range(nvars)))
        radial_part = radial_part + xd * _radius_power((n - j) // 2, nvars, d) * c
    return radial_part * _h_cached(alpha[:-1]).lift(nvars)


def h_poly(alpha) -> MultiPoly:
    """The polynomial ``h_alpha``."""
    alpha = _alpha_tuple(alpha)
    if not alpha:
        raise ValueError("multi-index must have length >= 1")
    return _h_cached(alpha)


@lru_cache(maxsize=None)
def _norm_cached(alpha: tuple[int, ...]) -> Fraction:
    if len(alpha) == 1:
        return Fraction(double_factorial(2 * alpha[0] - 1))
    d = len(alpha) - 1
    head = alpha[:-1]
    a_full, a_head = sum(alpha), sum(head)
    factor = Fraction(
        math.factorial(alpha[-1])
        * double_factorial(2 * a_head + d)
        * double_factorial(2 * a_full + d - 1),
        math.factorial(a_head + a_full + d),
    )
    return factor * _norm_cached(head)


def h_norm(alpha) -> Fraction:
    """``<<h_alpha, h_alpha>>`` from the recursion over the number of variables."""
    alpha = _alpha_tuple(alpha)
    if not alpha:
        raise ValueError("multi-index must have length >= 1")
    return _norm_cached(alpha)


@dataclass(frozen=True)
class HBasisElement:
    alpha: MultiIndex
    poly: MultiPoly
    norm: Fraction


def h_alpha(alpha) -> HBasisElement:
    alpha = MultiIndex(_alpha_tuple(alpha))
    return HBasisElement(alpha, h_poly(alpha), h_norm(alpha))


def _check_size(d: int, k: int) -> list[MultiIndex]:
    if d < 0 or k < 0:
        raise ValueError("need d >= 0 and k >= 0")
    size = binom(k + d, d)
    if size > MAX_HBASIS_SIZE:
        raise SizeLimitError(f"basis size {size} exceeds {MAX_HBASIS_SIZE}")
    return enumerate_monomials(d, k)


@dataclass
class HGramReport:
    d: int
    k: int
    basis: list[MultiIndex]
    norms: list[Fraction]
    direct_norms: list[Fraction]
    offdiagonal_zero: bool | None
    D: Fraction

    @property
    def norms_consistent(self) -> bool:
        return self.norms == self.direct_norms


def gram_h(d: int, k: int, check_offdiagonal: bool = True) -> HGramReport:
    """Gram matrix of the ``h`` basis in degree ``k``: diagonal check and ``D(d,k)``.

    ``D(d,k)`` is the product of the recursive norms, i.e. the determinant of
    the monomial Gram matrix because the transition matrix is unitriangular.
    ``direct_norms`` are the same brackets evaluated from the polynomials.
    """
    basis = _check_size(d, k)
    polys = [h_poly(a) for a in basis]
    norms = [h_norm(a) for a in basis]
    direct = [moment_bracket(p, p) for p in polys]
    offdiag = None
    if check_offdiagonal:
        offdiag = all(
            moment_bracket(polys[i], polys[j]) == 0
            for i in range(len(polys))
            for j in range(i + 1, len(polys))
        )
    return HGramReport(d, k, basis, norms, direct, offdiag, math.prod(norms, start=Fraction(1)))


@dataclass
class TransitionReport:
    d: int
    k: int
    basis: list[MultiIndex]
    matrix: list[list[Fraction]]
    lower_unitriangular: bool
    expansion_exact: bool


def transition_check(d: int, k: int) -> TransitionReport:
    """``T^-1[a][b] = <<x^a, h_b>> / <<h_b, h_b>>`` and the identities it must satisfy."""
    basis = _check_size(d, k)
    polys = [h_poly(b) for b in basis]
    norms = [h_norm(b) for b in basis]
    mat = [
        [moment_bracket(MultiPoly.monomial(a.exps), polys[j]) / norms[j] for j in range(len(basis))]
        for a in basis
    ]
    size = len(basis)
    lower = all(mat[i][i] == 1 for i in range(size)) and all(
        mat[i][j] == 0 for i in range(size) for j in range(i + 1, size)
    )
    expansion = True
    for i, a in enumerate(basis):
        total = MultiPoly(d + 1)
        for j, coef in enumerate(mat[i]):
            if coef:
                total = total + polys[j] * coef
        if total != MultiPoly.monomial(a.exps):
            expansion = False
            break
    return TransitionReport(d, k, basis, mat, lower, expansion)
