"""Exact Gram determinants of induced forms on symmetric powers.

Everything is exact: rationals are :class:`fractions.Fraction`, and large
integers with small prime support are :class:`~symlat.exactnum.FactoredInteger`.
"""

from ._core import BACKEND
from .exactnum import FactoredInteger, binom, double_factorial
from .symform import GramMatrix, induced_gram
from .theta import det_closed_form, theta, verify_maintheorem

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FactoredInteger",
    "GramMatrix",
    "binom",
    "det_closed_form",
    "double_factorial",
    "induced_gram",
    "theta",
    "verify_maintheorem",
    "__version__",
]
