# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hafnian and Bareiss kernels over Python integers.

Entries stay arbitrary-precision Python ints; the gain comes from C-level
bitmask bookkeeping, typed loop indices and a flat list memo.
"""


cdef object _haf_rec(list rows, list memo, unsigned int mask):
    cdef object hit = memo[mask]
    if hit is not None:
        return hit
    cdef unsigned int low = mask & (~mask + 1)
    cdef int i = 0
    while not (low >> i) & 1:
        i += 1
    cdef unsigned int rest = mask ^ low
    cdef unsigned int r = rest
    cdef unsigned int bit
    cdef int j
    cdef list row = <list>rows[i]
    cdef object a
    cdef object total = 0
    while r:
        bit = r & (~r + 1)
        j = 0
        while not (bit >> j) & 1:
            j += 1
        a = row[j]
        if a:
            total += a * _haf_rec(rows, memo, rest ^ bit)
        r ^= bit
    memo[mask] = total
    return total


def hafnian_int(matrix):
    cdef Py_ssize_t n = len(matrix)
    if n % 2:
        raise ValueError("hafnian needs an even dimension")
    if n == 0:
        return 1
    if n > 30:
        raise ValueError("compiled hafnian supports at most 30 rows")
    cdef list rows = [list(row) for row in matrix]
    cdef list memo = [None] * (1 << n)
    memo[0] = 1
    return _haf_rec(rows, memo, (1u << n) - 1)


def bareiss_det(matrix):
    cdef Py_ssize_t n = len(matrix)
    if n == 0:
        return 1
    cdef list a = [list(row) for row in matrix]
    cdef Py_ssize_t i, j, k, r
    cdef int sign = 1
    cdef object prev = 1
    cdef object pivot, f
    cdef list row_k, row_i
    for k in range(n - 1):
        if (<list>a[k])[k] == 0:
            for r in range(k + 1, n):
                if (<list>a[r])[k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        row_k = <list>a[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = <list>a[i]
            f = row_i[k]
            if f == 0:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j]) // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j] - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * (<list>a[n - 1])[n - 1]
