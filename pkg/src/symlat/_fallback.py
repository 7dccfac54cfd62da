"""Pure-Python versions of the hot kernels.

Both functions work on plain ``int`` entries; callers lift rational input to
integers first. The compiled module ``symlat._ext._kernels`` exposes the same
two functions with identical semantics.
"""

from __future__ import annotations


def hafnian_int(matrix: list[list[int]]) -> int:
    """Sum over perfect matchings of products of matched entries.

    Expands along the lowest unmatched index with a memo keyed by the bitmask
    of unmatched indices.
    """
    n = len(matrix)
    if n % 2:
        raise ValueError("hafnian needs an even dimension")
    if n == 0:
        return 1
    memo = {0: 1}

    def rec(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        row = matrix[i]
        total = 0
        r = rest
        while r:
            bit = r & -r
            a = row[bit.bit_length() - 1]
            if a:
                total += a * rec(rest ^ bit)
            r ^= bit
        memo[mask] = total
        return total

    return rec((1 << n) - 1)


def bareiss_det(matrix: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; every intermediate division is exact."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]
