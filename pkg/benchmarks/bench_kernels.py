"""Compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the hafnian (bitmask memo) and the Bareiss determinant on random
integer matrices, checks that both backends agree, and prints the speedup.
A full induced-Gram determinant is timed under each backend as well, via a
subprocess so the backend switch happens at import.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from symlat import _fallback

try:
    from symlat._ext import _kernels
except ImportError:
    sys.exit("compiled extension not built; run `pip install -e . --no-build-isolation` first")


def sym(rng, n, lo=-9, hi=9):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = rng.randint(lo, hi)
    return m


GRAM_SNIPPET = """
import time
from symlat.symform import GramMatrix, induced_gram
from symlat.linalg import det_exact
g = GramMatrix([[2, 1, 0, -1], [1, 3, 1, 0], [0, 1, -2, 1], [-1, 0, 1, 4]])
t = time.perf_counter()
det_exact(induced_gram(g, 4).gram)
print(time.perf_counter() - t)
"""


def bench(label, fn_c, fn_py, arg, repeat):
    assert fn_c(arg) == fn_py(arg), f"{label}: backends disagree"
    t_c = min(timeit.repeat(lambda: fn_c(arg), number=1, repeat=repeat))
    t_py = min(timeit.repeat(lambda: fn_py(arg), number=1, repeat=repeat))
    print(f"{label:<28} cython {t_c * 1e3:9.3f} ms   python {t_py * 1e3:9.3f} ms   x{t_py / t_c:5.1f}")


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    for n in (8, 12, 16, 20):
        bench(f"hafnian {n}x{n}", _kernels.hafnian_int, _fallback.hafnian_int, sym(rng, n), args.repeat)
    for n in (20, 40, 80):
        m = [[rng.randint(-99, 99) for _ in range(n)] for _ in range(n)]
        bench(f"bareiss det {n}x{n}", _kernels.bareiss_det, _fallback.bareiss_det, m, args.repeat)

    times = {}
    for backend, env_extra in (("cython", {}), ("python", {"SYMLAT_PURE_PYTHON": "1"})):
        env = dict(os.environ, **env_extra)
        out = subprocess.run([sys.executable, "-c", GRAM_SNIPPET], capture_output=True, text=True, env=env, check=True)
        times[backend] = float(out.stdout)
    print(
        f"{'induced Gram d=3 k=4 + det':<28} cython {times['cython'] * 1e3:9.3f} ms   "
        f"python {times['python'] * 1e3:9.3f} ms   x{times['python'] / times['cython']:5.1f}"
    )


if __name__ == "__main__":
    main()
