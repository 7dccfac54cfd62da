"""The induced symmetric bilinear form on symmetric powers.

For a symmetric form with Gram matrix ``G`` on ``V = span(x_0..x_d)`` the
bracket of two degree-``k`` monomials ``x_{n_1}...x_{n_k}`` and
``x_{n_{k+1}}...x_{n_2k}`` is the sum, over all ways of splitting the ``2k``
factors into pairs, of the product of ``G`` over the pairs. That sum is the
hafnian of the ``2k x 2k`` matrix ``G[n_a][n_b]``.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _core
from .combinat import MultiIndex, enumerate_monomials
from .exactnum import binom, format_rational, parse_rational, to_fraction
from .linalg import SizeLimitError
from .multipoly import MultiPoly

__all__ = [
    "GramMatrix",
    "MAX_BASIS_SIZE",
    "MAX_HAFNIAN_DIM",
    "SymPowerForm",
    "bracket_monomials",
    "bracket_poly",
    "hafnian",
    "induced_gram",
    "monomial_substitution_matrix",
]

MAX_HAFNIAN_DIM = 16
MAX_BASIS_SIZE = 5000


@dataclass(frozen=True)
class GramMatrix:
    """Dense symmetric matrix of exact rationals."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        n = len(rows)
        if n < 1:
            raise ValueError("Gram matrix must have size >= 1")
        if any(len(row) != n for row in rows):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i},{j})")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> "GramMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "GramMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self.rows]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def integer_lift(self) -> tuple[list[list[int]], int]:
        """``(D*G as ints, D)`` with ``D`` the lcm of all denominators."""
        den = math.lcm(*(x.denominator for row in self.rows for x in row))
        return [[x.numerator * (den // x.denominator) for x in row] for row in self.rows], den

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "rows": [[format_rational(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data) -> "GramMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        rows = [[parse_rational(str(x)) for x in row] for row in data["rows"]]
        if "size" in data and int(data["size"]) != len(rows):
            raise ValueError(f"declared size {data['size']} but {len(rows)} rows")
        return cls(rows)


def hafnian(m: Sequence[Sequence]) -> Fraction:
    """Sum over perfect matchings of the product of matched entries.

    >>> hafnian([[1] * 4] * 4)
    Fraction(3, 1)
    """
    n = len(m)
    if n % 2:
        raise ValueError("hafnian needs an even dimension")
    if n > MAX_HAFNIAN_DIM:
        raise SizeLimitError(f"hafnian dimension {n} exceeds {MAX_HAFNIAN_DIM}")
    if n == 0:
        return Fraction(1)
    rows = [[to_fraction(x) for x in row] for row in m]
    if any(len(row) != n for row in rows):
        raise ValueError("hafnian needs a square matrix")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError("hafnian needs a symmetric matrix")
    den = math.lcm(*(x.denominator for row in rows for x in row))
    ints = [[x.numerator * (den // x.denominator) for x in row] for row in rows]
    return Fraction(_core.hafnian_int(ints), den ** (n // 2))


def _bracket_int(g_int: list[list[int]], key: tuple[int, ...]) -> int:
    return _core.hafnian_int([[g_int[a][b] for b in key] for a in key])


def bracket_monomials(g: GramMatrix, indices: Sequence[int]) -> Fraction:
    """Bracket of ``x_{n_1}...x_{n_j}`` with ``x_{n_{j+1}}...x_{n_2k}``.

    Only the multiset of ``indices`` matters, so the split point is not an
    argument.
    """
    d1 = g.size
    if len(indices) % 2:
        raise ValueError("index list must have even length")
    if len(indices) > MAX_HAFNIAN_DIM:
        raise SizeLimitError(f"{len(indices)} factors exceed {MAX_HAFNIAN_DIM}")
    for i in indices:
        if not 0 <= i < d1:
            raise IndexError(f"base index {i} outside [0, {d1 - 1}]")
    g_int, den = g.integer_lift()
    key = tuple(sorted(indices))
    return Fraction(_bracket_int(g_int, key), den ** (len(key) // 2))


def _thread_count(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("SYMLAT_THREADS", "1") or 1)
    return max(1, threads)


@dataclass
class SymPowerForm:
    """The induced form on ``Sym^k V`` with its materialised Gram matrix."""

    base: GramMatrix
    k: int
    basis: list[MultiIndex]
    gram: list[list[Fraction]] = field(repr=False)

    @property
    def d(self) -> int:
        return self.base.size - 1

    @property
    def size(self) -> int:
        return len(self.basis)


def induced_gram(g: GramMatrix, k: int, threads: int | None = None) -> SymPowerForm:
    """Gram matrix of the induced form on degree-``k`` monomials.

    Entries depend only on the multiset of the ``2k`` factor indices, so each
    distinct multiset is evaluated once. ``threads`` (default from
    ``SYMLAT_THREADS``) spreads the hafnians over a thread pool; the result
    does not depend on the schedule.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    d = g.size - 1
    size = binom(k + d, d)
    if size > MAX_BASIS_SIZE:
        raise SizeLimitError(f"Sym^{k} basis of size {size} exceeds {MAX_BASIS_SIZE}")
    if 2 * k > MAX_HAFNIAN_DIM:
        raise SizeLimitError(f"2k={2 * k} exceeds the hafnian limit {MAX_HAFNIAN_DIM}")
    basis = enumerate_monomials(d, k)
    factors = [a.as_factor_list() for a in basis]
    keys = {}
    for i in range(size):
        for j in range(i, size):
            keys[(i, j)] = tuple(sorted(factors[i] + factors[j]))
    g_int, den = g.integer_lift()
    unique = sorted(set(keys.values()))
    n_threads = _thread_count(threads)
    if n_threads > 1 and len(unique) > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            values = list(pool.map(lambda key: _bracket_int(g_int, key), unique))
    else:
        values = [_bracket_int(g_int, key) for key in unique]
    scale = den**k
    cache = {key: Fraction(v, scale) for key, v in zip(unique, values)}
    gram = [[Fraction(0)] * size for _ in range(size)]
    for (i, j), key in keys.items():
        gram[i][j] = gram[j][i] = cache[key]
    return SymPowerForm(g, k, basis, gram)


def bracket_poly(g: GramMatrix, f: MultiPoly, h: MultiPoly) -> Fraction:
    """Bilinear extension of the bracket to homogeneous polynomials.

    Arguments may have different degrees; an odd total degree gives 0.
    """
    if f.nvars != g.size or h.nvars != g.size:
        raise ValueError("polynomial variable count does not match the Gram matrix")
    if f.is_zero() or h.is_zero():
        return Fraction(0)
    total = f.degree + h.degree
    if total % 2:
        return Fraction(0)
    if total > MAX_HAFNIAN_DIM:
        raise SizeLimitError(f"total degree {total} exceeds {MAX_HAFNIAN_DIM}")
    g_int, den = g.integer_lift()
    memo: dict[tuple[int, ...], int] = {}
    acc = 0
    for e1, c1 in f.terms.items():
        for e2, c2 in h.terms.items():
            key = tuple(sorted(MultiIndex(e1).as_factor_list() + MultiIndex(e2).as_factor_list()))
            if key not in memo:
                memo[key] = _bracket_int(g_int, key)
            acc += c1 * c2 * memo[key]
    return Fraction(acc) / den ** (total // 2)


def monomial_substitution_matrix(s: Sequence[Sequence[int]], k: int) -> list[list[Fraction]]:
    """Matrix ``P`` whose column ``beta`` expands ``(S x)^beta`` in degree-``k`` monomials.

    ``(S x)_j = sum_i S[i][j] x_i``, i.e. ``x_j -> sum_i S[i][j] x_i``, so that
    the Gram matrix transforms as ``G' = S^T G S`` on ``V`` and as
    ``P^T Gram P`` on ``Sym^k V``.
    """
    n = len(s)
    basis = enumerate_monomials(n - 1, k)
    pos = {a.exps: i for i, a in enumerate(basis)}
    images = [
        MultiPoly(n, {tuple(int(t == i) for t in range(n)): s[i][j] for i in range(n)})
        for j in range(n)
    ]
    cols = []
    for beta in basis:
        poly = MultiPoly.constant(1, n)
        for j, e in enumerate(beta.exps):
            poly = poly * images[j] ** e
        col = [Fraction(0)] * len(basis)
        for exps, c in poly.terms.items():
            col[pos[exps]] = c
        cols.append(col)
    return [list(row) for row in zip(*cols)]
