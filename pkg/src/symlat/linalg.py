"""Exact determinants, Smith normal form and integer kernels.

Matrices are plain lists of rows holding ``int`` or ``Fraction`` entries.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from . import _core
from .exactnum import to_fraction

__all__ = [
    "MAX_DET_SIZE",
    "SizeLimitError",
    "det_exact",
    "hermite_normal_form",
    "integer_kernel",
    "leibniz_det",
    "matmul",
    "row_echelon",
    "same_row_span",
    "saturate",
    "smith_normal_form",
    "transpose",
]

MAX_DET_SIZE = 600

Matrix = Sequence[Sequence]


class SizeLimitError(ValueError):
    """Input exceeds a documented size cap."""


def transpose(m: Matrix) -> list[list]:
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _require_integer(m: Matrix) -> list[list[int]]:
    out = []
    for row in m:
        new = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"non-integer entry {x}")
                x = x.numerator
            elif isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"non-integer entry {x!r}")
            new.append(int(x))
        out.append(new)
    return out


def det_exact(m: Matrix) -> Fraction:
    """Exact determinant of a square rational matrix.

    Each row is scaled to integers by the lcm of its denominators, the integer
    determinant is taken by Bareiss elimination, and the scaling is undone.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    if n > MAX_DET_SIZE:
        raise SizeLimitError(f"matrix size {n} exceeds {MAX_DET_SIZE}")
    scale = 1
    rows = []
    for row in m:
        row = [to_fraction(x) for x in row]
        den = math.lcm(*(x.denominator for x in row)) if row else 1
        scale *= den
        rows.append([x.numerator * (den // x.denominator) for x in row])
    return Fraction(_core.bareiss_det(rows), scale)


def leibniz_det(m: Matrix) -> Fraction:
    """Determinant as the signed sum over permutations; only for tiny matrices."""
    from itertools import permutations

    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= to_fraction(m[i][j])
        total += term
    return total


def smith_normal_form(m: Matrix) -> tuple[tuple[int, ...], int]:
    """Invariant factors ``d_1 | d_2 | ...`` (nonzero ones) and the rank.

    Plain elementary-operation reduction: move the smallest nonzero entry to
    the pivot, clear its row and column by division with remainder, and
    repair divisibility before moving on.
    """
    a = _require_integer(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    factors: list[int] = []
    t = 0
    while t < min(rows, cols):
        nonzero = [
            (abs(a[i][j]), i, j)
            for i in range(t, rows)
            for j in range(t, cols)
            if a[i][j]
        ]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                bad = next(
                    (
                        i
                        for i in range(t + 1, rows)
                        if any(a[i][j] % p for j in range(t + 1, cols))
                    ),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            # a remainder is smaller than the pivot: bring it into position
            _, pi, pj = min(
                [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
                + [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            )
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        factors.append(abs(a[t][t]))
        t += 1
    return tuple(factors), len(factors)


def row_echelon(m: Matrix) -> tuple[list[list[int]], list[list[int]]]:
    """Integer row echelon form ``E`` with unimodular ``U`` such that ``U m = E``."""
    a = _require_integer(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            live = [i for i in range(r, rows) if a[i][c]]
            if not live:
                break
            i = min(live, key=lambda i: abs(a[i][c]))
            a[r], a[i] = a[i], a[r]
            u[r], u[i] = u[i], u[r]
            others = [i for i in range(r + 1, rows) if a[i][c]]
            if not others:
                break
            for i in others:
                q = a[i][c] // a[r][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        if a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
                u[r] = [-x for x in u[r]]
            r += 1
    return a, u


def hermite_normal_form(m: Matrix) -> list[list[int]]:
    """Row-style HNF with zero rows removed; a canonical basis of the row span."""
    e, _ = row_echelon(m)
    e = [row for row in e if any(row)]
    for r, row in enumerate(e):
        c = next(j for j, x in enumerate(row) if x)
        for s in range(r):
            q = e[s][c] // row[c]
            if q:
                e[s] = [x - q * y for x, y in zip(e[s], row)]
    return e


def same_row_span(a: Matrix, b: Matrix) -> bool:
    return hermite_normal_form(a) == hermite_normal_form(b)


def integer_kernel(m: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Basis of ``{x in Z^n : m x = 0}`` as a list of row vectors.

    ``ncols`` is needed only when ``m`` has no rows.
    """
    a = _require_integer(m)
    n = len(a[0]) if a else ncols
    if n is None:
        raise ValueError("column count unknown for an empty matrix")
    if not a:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    e, u = row_echelon(transpose(a))
    return [u[i] for i in range(n) if not any(e[i])]


def saturate(rows: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Basis of ``(span(rows) (x) Q) intersected with Z^n``, in Hermite form."""
    a = _require_integer(rows)
    n = len(a[0]) if a else ncols
    if n is None:
        raise ValueError("column count unknown for an empty matrix")
    if not any(any(row) for row in a):
        return []
    perp = integer_kernel(a, n)
    return hermite_normal_form(integer_kernel(perp, n))
