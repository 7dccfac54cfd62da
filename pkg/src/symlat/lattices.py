"""Integral lattices, embeddings, torsion of quotients and orthogonal complements.

Forms may be indefinite throughout. An :class:`Embedding` lists a basis of
``L`` as integer row vectors in the basis of the target lattice ``M``, so the
Gram matrix of ``L`` is ``B G_M B^T``.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import FactoredInteger
from .linalg import (
    det_exact,
    integer_kernel,
    matmul,
    row_echelon,
    saturate,
    smith_normal_form,
    transpose,
)
from .symform import GramMatrix

__all__ = [
    "DegenerateLatticeError",
    "Embedding",
    "Lattice",
    "complement_discriminant",
    "discriminant",
    "double_complement",
    "hyperbolic_plane",
    "index_in",
    "orthogonal_complement",
    "quotient_torsion",
    "random_unimodular_lattice",
    "random_unimodular_matrix",
    "saturation",
]


class DegenerateLatticeError(ValueError):
    """The form has zero determinant."""


def _int_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        new = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError(f"lattice data must be integral, got {x}")
            new.append(x.numerator)
        out.append(new)
    return out


@dataclass(frozen=True)
class Lattice:
    """Free Z-module with a non-degenerate integral symmetric form."""

    gram: GramMatrix

    def __init__(self, gram):
        if not isinstance(gram, GramMatrix):
            gram = GramMatrix(gram)
        if not gram.is_integral():
            raise ValueError("lattice Gram matrix must be integral")
        if det_exact(gram.tolist()) == 0:
            raise DegenerateLatticeError("lattice form is degenerate")
        object.__setattr__(self, "gram", gram)

    @property
    def rank(self) -> int:
        return self.gram.size

    def int_gram(self) -> list[list[int]]:
        return _int_rows(self.gram.rows)

    def det(self) -> int:
        return int(det_exact(self.gram.tolist()))

    def is_unimodular(self) -> bool:
        return abs(self.det()) == 1

    @classmethod
    def direct_sum(cls, *parts: "Lattice") -> "Lattice":
        n = sum(p.rank for p in parts)
        rows = [[0] * n for _ in range(n)]
        off = 0
        for p in parts:
            g = p.int_gram()
            for i in range(p.rank):
                for j in range(p.rank):
                    rows[off + i][off + j] = g[i][j]
            off += p.rank
        return cls(rows)


def hyperbolic_plane() -> Lattice:
    return Lattice([[0, 1], [1, 0]])


def discriminant(lattice: Lattice) -> FactoredInteger:
    """``|det Gram|`` as a factored integer."""
    det = lattice.det()
    if det == 0:
        raise DegenerateLatticeError("lattice form is degenerate")
    return FactoredInteger.from_int(abs(det))


@dataclass(frozen=True)
class Embedding:
    """Sublattice ``L`` of ``target``, given by basis rows in the target's coordinates.

    Zero rows are allowed only as an empty list (rank-0 sublattice).
    """

    target: Lattice
    basis_rows: tuple[tuple[int, ...], ...]

    def __init__(self, target: Lattice, basis_rows: Sequence[Sequence[int]]):
        rows = _int_rows(basis_rows)
        n = target.rank
        if any(len(r) != n for r in rows):
            raise ValueError(f"basis rows must have length {n}")
        if rows:
            e, _ = row_echelon(rows)
            if sum(1 for r in e if any(r)) != len(rows):
                raise ValueError("basis rows are linearly dependent")
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "basis_rows", tuple(tuple(r) for r in rows))

    @property
    def rank(self) -> int:
        return len(self.basis_rows)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.basis_rows]

    def source_gram(self) -> list[list[int]]:
        """``B G_M B^T``; possibly degenerate for indefinite targets."""
        if not self.basis_rows:
            return []
        b = self.rows()
        return matmul(matmul(b, self.target.int_gram()), transpose(b))

    def source(self) -> Lattice:
        return Lattice(self.source_gram())

    def to_json(self) -> dict:
        return {
            "target_gram": self.target.gram.to_json(),
            "basis_rows": self.rows(),
        }

    @classmethod
    def from_json(cls, data) -> "Embedding":
        if isinstance(data, str):
            data = json.loads(data)
        tg = data["target_gram"]
        gram = GramMatrix.from_json(tg) if isinstance(tg, dict) else GramMatrix(tg)
        return cls(Lattice(gram), data["basis_rows"])


def quotient_torsion(e: Embedding) -> FactoredInteger:
    """Order of the torsion subgroup of ``M / L``: product of the invariant factors of ``B``.

    Equals the index ``|M : L|`` when the ranks agree.
    """
    if not e.basis_rows:
        return FactoredInteger()
    factors, _ = smith_normal_form(e.rows())
    return FactoredInteger.product(FactoredInteger.from_int(f) for f in factors)


def orthogonal_complement(e: Embedding) -> Embedding:
    """``L^perp = {x in M : <b, x> = 0 for every basis row b}``."""
    n = e.target.rank
    if not e.basis_rows:
        return Embedding(e.target, integer_kernel([], n))
    pairing = matmul(e.rows(), e.target.int_gram())
    return Embedding(e.target, integer_kernel(pairing, n))


def double_complement(e: Embedding) -> Embedding:
    """``L^perp perp``, the primitive overlattice of ``L`` (its saturation in ``M``)."""
    return orthogonal_complement(orthogonal_complement(e))


def saturation(e: Embedding) -> Embedding:
    return Embedding(e.target, saturate(e.rows(), e.target.rank) if e.basis_rows else [])


def complement_discriminant(discr_l, torsion_n) -> FactoredInteger:
    """``discr L / n^2`` for the complement and the primitive overlattice of ``L``.

    Valid for embeddings into unimodular lattices where ``n`` is the torsion
    order of ``M / L``.
    """
    discr_l = FactoredInteger.coerce(discr_l)
    torsion_n = FactoredInteger.coerce(torsion_n)
    out = discr_l / torsion_n**2
    if not out.is_integer():
        raise ValueError(f"{torsion_n}^2 does not divide {discr_l}")
    return out


def random_unimodular_matrix(n: int, rng: random.Random, steps: int | None = None) -> list[list[int]]:
    """Product of random elementary row operations with multipliers in ``[-2, 2]``."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        return [[rng.choice((1, -1))]] if n == 1 else m
    for _ in range(steps if steps is not None else 3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        if rng.random() < 0.2:
            m[i] = [-a for a in m[i]]
    return m


def random_unimodular_lattice(rank: int, rng: random.Random) -> Lattice:
    """Orthogonal sum of hyperbolic planes and ``<+-1>``, conjugated by a random unimodular matrix."""
    planes = rng.randint(0, rank // 2)
    parts = [hyperbolic_plane()] * planes
    parts += [Lattice([[rng.choice((1, -1))]]) for _ in range(rank - 2 * planes)]
    base = Lattice.direct_sum(*parts)
    p = random_unimodular_matrix(rank, rng)
    g = matmul(matmul(p, base.int_gram()), transpose(p))
    return Lattice(g)


def index_in(e_small: Embedding, e_big: Embedding) -> int:
    """``|L_big : L_small|`` for sublattices of equal rank with ``L_small`` inside ``L_big``."""
    if e_small.rank != e_big.rank:
        raise ValueError("index needs equal ranks")
    if e_small.rank == 0:
        return 1
    # coordinates of the small basis in the big basis, scaled to integers
    big = [[Fraction(x) for x in r] for r in e_big.rows()]
    gram_big = matmul(big, transpose(big))
    det_big = det_exact(gram_big)
    ratio = det_exact(matmul(e_small.rows(), transpose(e_small.rows()))) / det_big
    root = math.isqrt(ratio.numerator)
    if ratio.denominator != 1 or root * root != ratio.numerator:
        raise ValueError("small lattice is not a finite-index sublattice")
    return root
