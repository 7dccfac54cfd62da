"""Discriminants of ``Sym^k H^2`` for the known hyperkahler deformation classes.

The lattice ``H^2(X, Z)`` enters only through its rank ``b2`` and
discriminant ``d2``; the closed-form Gram determinant then gives the
discriminant of ``Sym^k H^2`` with the induced form, optionally scaled by the
Fujiki constant ``c_X``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import FactoredInteger, binom, format_rational
from .lattices import complement_discriminant
from .theta import theta

__all__ = [
    "HKReport",
    "MANIFOLD_NAMES",
    "ManifoldData",
    "UnknownManifoldError",
    "describe",
    "hk_report",
    "prime_set_Z",
    "registry",
    "sym_discriminant",
    "sym_rank",
    "torsion_report",
    "z_set",
]

MANIFOLD_NAMES = ("K3_Hilb", "Kummer", "OG6", "OG10")


class UnknownManifoldError(ValueError):
    pass


@dataclass(frozen=True)
class ManifoldData:
    name: str
    k: int
    b2: int
    d2: FactoredInteger
    cX: Fraction

    @property
    def dim(self) -> int:
        return 2 * self.k


def registry(name: str, k: int | None = None) -> ManifoldData:
    """Row of the deformation-class table.

    ``K3_Hilb`` and ``Kummer`` need ``k >= 2``; ``OG6`` and ``OG10`` have fixed
    ``k`` (3 and 5) and reject any other value.
    """
    if name == "K3_Hilb":
        k = _need_k(name, k)
        return ManifoldData(name, k, 23, FactoredInteger.from_int(2 * (k - 1)), Fraction(1))
    if name == "Kummer":
        k = _need_k(name, k)
        return ManifoldData(name, k, 7, FactoredInteger.from_int(2 * (k + 1)), Fraction(k + 1))
    if name == "OG6":
        _fixed_k(name, k, 3)
        return ManifoldData(name, 3, 8, FactoredInteger.from_int(4), Fraction(4))
    if name == "OG10":
        _fixed_k(name, k, 5)
        return ManifoldData(name, 5, 24, FactoredInteger.from_int(3), Fraction(1))
    raise UnknownManifoldError(f"unknown manifold {name!r}; choose from {', '.join(MANIFOLD_NAMES)}")


def _need_k(name: str, k: int | None) -> int:
    if k is None or k < 2:
        raise ValueError(f"{name} needs k >= 2")
    return k


def _fixed_k(name: str, k: int | None, fixed: int) -> None:
    if k is not None and k != fixed:
        raise ValueError(f"{name} has k = {fixed}, got {k}")


def sym_rank(m: ManifoldData) -> int:
    return binom(m.b2 - 1 + m.k, m.k)


def sym_discriminant(m: ManifoldData, include_cX: bool = False) -> FactoredInteger:
    """``d2^binom(b2-1+k, b2) * theta(b2-1, k)``, times ``cX^rank`` if requested."""
    d = m.b2 - 1
    out = m.d2 ** binom(d + m.k, d + 1) * theta(d, m.k)
    if include_cX:
        if m.cX.denominator != 1:
            raise ValueError("c_X scaling needs an integral Fujiki constant")
        out = out * FactoredInteger.from_rational(m.cX) ** sym_rank(m)
    return out


def z_set(m: ManifoldData) -> set[int]:
    """The integers whose prime divisors bound the discriminant's prime support."""
    k, b2 = m.k, m.b2
    z = {int(m.cX ** b2 * m.d2.value())}
    z.update(range(1, k + 1))
    if b2 % 2:
        z.update(i for i in range(k + b2, 2 * k + b2 - 1) if i % 2)
    else:
        lo = -(-(k + b2) // 2)
        z.update(range(lo, k + b2 // 2))
    return z


def prime_set_Z(m: ManifoldData) -> set[int]:
    out: set[int] = set()
    for z in z_set(m):
        if z > 1:
            out |= FactoredInteger.from_int(z).prime_support()
    return out


@dataclass
class HKReport:
    manifold: str
    k: int
    rank: int
    discriminant: FactoredInteger
    prime_set: set[int]
    include_cX: bool = False
    torsion: FactoredInteger | None = None
    complement_discriminant: FactoredInteger | None = None
    sqrt_discriminant: FactoredInteger | None = field(default=None)

    def to_json(self) -> dict:
        out = {
            "manifold": self.manifold,
            "k": self.k,
            "rank": self.rank,
            "discriminant": str(self.discriminant),
            "prime_set": sorted(self.prime_set),
            "include_cX": self.include_cX,
        }
        if self.sqrt_discriminant is not None:
            out["sqrt_discriminant"] = str(self.sqrt_discriminant)
        if self.torsion is not None:
            out["torsion"] = str(self.torsion)
            out["complement_discriminant"] = str(self.complement_discriminant)
            out["squarefree_part"] = str(self.discriminant.squarefree_part())
            out["complement_squarefree_part"] = str(
                self.complement_discriminant.squarefree_part()
            )
        return out


def hk_report(m: ManifoldData, include_cX: bool = False) -> HKReport:
    disc = sym_discriminant(m, include_cX)
    root = disc.sqrt() if disc.is_square() else None
    return HKReport(m.name, m.k, sym_rank(m), disc, prime_set_Z(m), include_cX, sqrt_discriminant=root)


def torsion_report(m: ManifoldData, torsion_order, include_cX: bool = False) -> HKReport:
    """Discriminant of the orthogonal complement / primitive overlattice given the torsion order."""
    report = hk_report(m, include_cX)
    torsion = FactoredInteger.coerce(torsion_order)
    report.torsion = torsion
    report.complement_discriminant = complement_discriminant(report.discriminant, torsion)
    return report


def describe(m: ManifoldData) -> dict:
    return {
        "name": m.name,
        "k": m.k,
        "dim": m.dim,
        "b2": m.b2,
        "d2": str(m.d2),
        "cX": format_rational(m.cX),
    }
