"""Random instance generators and independent oracles shared by the tests."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from symlat.exactnum import double_factorial
from symlat.lattices import Embedding, random_unimodular_lattice, random_unimodular_matrix
from symlat.linalg import det_exact, matmul, saturate


def random_symmetric(rng: random.Random, n: int, lo: int = -5, hi: int = 5, nonsingular=True):
    while True:
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rng.randint(lo, hi)
        if not nonsingular or det_exact(rows) != 0:
            return rows


def random_rows(rng: random.Random, r: int, n: int, lo: int = -3, hi: int = 3):
    """``r`` linearly independent integer rows of length ``n``."""
    while True:
        rows = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(r)]
        if r == 0 or det_exact(matmul(rows, [list(c) for c in zip(*rows)])) != 0:
            return rows


def finite_index_instance(rng: random.Random, max_rank: int = 6):
    """Unimodular ``M`` with ``L = T M``, ``0 < |det T| <= 20``."""
    n = rng.randint(1, max_rank)
    m = random_unimodular_lattice(n, rng)
    while True:
        t = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        d = det_exact(t)
        if d != 0 and abs(d) <= 20:
            break
    # mix T with a unimodular factor so rows are not sparse
    t = matmul(random_unimodular_matrix(n, rng), t)
    return Embedding(m, t), abs(int(d))


def nondegenerate_embedding(rng: random.Random, max_rank: int = 6, min_corank: int = 0, primitive=False):
    """Embedding into a random unimodular lattice whose sublattice form is non-degenerate."""
    while True:
        n = rng.randint(max(1, min_corank + 1), max_rank)
        m = random_unimodular_lattice(n, rng)
        r = rng.randint(1, n - min_corank)
        rows = random_rows(rng, r, n)
        if primitive:
            rows = saturate(rows, n)
        e = Embedding(m, rows)
        if det_exact(e.source_gram()) != 0:
            return e


def gaussian_monomial_moment(exps) -> int:
    """``E[X^a]`` for independent standard normals."""
    if any(e % 2 for e in exps):
        return 0
    return math.prod(double_factorial(e - 1) for e in exps)


def diagonal_bracket(diag, a, b) -> Fraction:
    """Closed form of the bracket of ``x^a`` and ``x^b`` for ``G = diag(g_0, ..., g_d)``."""
    out = Fraction(1)
    for g, ai, bi in zip(diag, a, b):
        s = ai + bi
        if s % 2:
            return Fraction(0)
        out *= Fraction(g) ** (s // 2) * double_factorial(s - 1)
    return out


def indices_of(exps) -> list[int]:
    return [i for i, e in enumerate(exps) for _ in range(e)]
