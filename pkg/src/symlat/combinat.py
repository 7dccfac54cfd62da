"""Multi-indices, monomial enumeration and perfect matchings.

Multi-indices are compared with the *last* coordinate most significant:
``a < b`` iff ``a[-1] < b[-1]``, or the last entries agree and the truncations
compare ``a[:-1] < b[:-1]`` recursively. Every Gram matrix in the package is
laid out in this order.
"""

from __future__ import annotations

import math
from functools import total_ordering
from typing import Iterator, Sequence

from .exactnum import binom

__all__ = [
    "MAX_PAIR_PARTITION_K",
    "MultiIndex",
    "PairPartition",
    "enumerate_monomials",
    "enumerate_pair_partitions",
    "evensum_witness",
    "facprod_witness",
    "identity_witnesses",
]

MAX_PAIR_PARTITION_K = 8

PairPartition = tuple[tuple[int, int], ...]


@total_ordering
class MultiIndex:
    """Exponent vector ``(a_0, ..., a_d)`` of a monomial ``x_0^a_0 ... x_d^a_d``."""

    __slots__ = ("exps",)

    def __init__(self, exps: Sequence[int]):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        self.exps = exps

    @classmethod
    def parse(cls, text: str) -> "MultiIndex":
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError(f"multi-index must be parenthesised: {text!r}")
        body = text[1:-1].strip()
        if not body:
            return cls(())
        return cls(int(part) for part in body.split(","))

    def __len__(self) -> int:
        return len(self.exps)

    def __iter__(self):
        return iter(self.exps)

    def __getitem__(self, i):
        return self.exps[i]

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def factorial(self) -> int:
        return math.prod(math.factorial(e) for e in self.exps)

    @property
    def truncated(self) -> "MultiIndex":
        """Drop the last coordinate."""
        return MultiIndex(self.exps[:-1])

    def order_key(self) -> tuple[int, ...]:
        # reversed tuple compared lexicographically == last coordinate first
        return self.exps[::-1]

    def as_factor_list(self) -> list[int]:
        """Variable indices of the monomial with multiplicity, e.g. (2,0,1) -> [0,0,2]."""
        return [i for i, e in enumerate(self.exps) for _ in range(e)]

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        if len(other) != len(self):
            raise ValueError("multi-index length mismatch")
        return MultiIndex(a + b for a, b in zip(self.exps, other.exps))

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiIndex):
            return self.exps == other.exps
        if isinstance(other, tuple):
            return self.exps == other
        return NotImplemented

    def __lt__(self, other: "MultiIndex") -> bool:
        if len(other) != len(self):
            raise ValueError("only multi-indices of equal length are ordered")
        return self.order_key() < other.order_key()

    def __hash__(self) -> int:
        return hash(self.exps)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.exps)) + ")"

    def __repr__(self) -> str:
        return f"MultiIndex({self.exps})"


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions in ascending multi-index order (last part most significant)."""
    if parts == 1:
        yield (total,)
        return
    for last in range(total + 1):
        for head in _compositions(total - last, parts - 1):
            yield head + (last,)


def enumerate_monomials(d: int, k: int) -> list[MultiIndex]:
    """All exponent vectors of length ``d+1`` and degree ``k``, ascending.

    >>> [str(a) for a in enumerate_monomials(1, 2)]
    ['(2,0)', '(1,1)', '(0,2)']
    """
    if d < 0 or k < 0:
        raise ValueError("need d >= 0 and k >= 0")
    return [MultiIndex(c) for c in _compositions(k, d + 1)]


def enumerate_pair_partitions(k: int) -> Iterator[PairPartition]:
    """Perfect matchings of ``{1, ..., 2k}``, each exactly once.

    The smallest free element is paired with each remaining candidate in
    turn, then the rest is matched recursively.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > MAX_PAIR_PARTITION_K:
        raise ValueError(
            f"k={k} exceeds the pair-partition limit {MAX_PAIR_PARTITION_K}"
        )

    def rec(free: tuple[int, ...]) -> Iterator[PairPartition]:
        if not free:
            yield ()
            return
        first, rest = free[0], free[1:]
        for pos, partner in enumerate(rest):
            remaining = rest[:pos] + rest[pos + 1 :]
            for tail in rec(remaining):
                yield ((first, partner),) + tail

    yield from rec(tuple(range(1, 2 * k + 1)))


def facprod_witness(d: int, k: int) -> tuple[int, int]:
    """Both sides of ``prod_j (k-j)!^binom(j+d-1, d-1) = prod_i i^binom(k-i+d, d)``."""
    if d < 1 or k < 0:
        raise ValueError("facprod needs d >= 1 and k >= 0")
    lhs = 1
    for j in range(k + 1):
        lhs *= math.factorial(k - j) ** binom(j + d - 1, d - 1)
    rhs = 1
    for i in range(1, k + 1):
        rhs *= i ** binom(k - i + d, d)
    return lhs, rhs


def evensum_witness(d: int, k: int) -> tuple[int, int]:
    """Sum of ``binom(k-i+d, d-1)`` over even ``i`` in ``[1, 2k+d+1]`` and its closed form.

    The closed form is 0 for even ``d`` and ``binom(k+d, d)`` for odd ``d``.
    """
    if d < 1 or k < 0:
        raise ValueError("evensum needs d >= 1 and k >= 0")
    lhs = sum(binom(k - i + d, d - 1) for i in range(2, 2 * k + d + 2, 2))
    rhs = 0 if d % 2 == 0 else binom(k + d, d)
    return lhs, rhs


def identity_witnesses(d: int, k: int) -> dict[str, tuple[int, int]]:
    return {"facprod1": facprod_witness(d, k), "evensum": evensum_witness(d, k)}
