"""Sparse homogeneous polynomials with exact rational coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

from .combinat import MultiIndex
from .exactnum import format_rational, parse_rational, to_fraction

__all__ = ["MultiPoly"]


class MultiPoly:
    """Homogeneous polynomial in ``nvars`` variables: exponent tuple -> coefficient.

    Zero coefficients are never stored. The zero polynomial has ``degree``
    ``None`` and is compatible with every degree.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        if nvars < 1:
            raise ValueError("need at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], Fraction] = {}
        degree = None
        for exps, coef in items:
            exps = tuple(exps.exps if isinstance(exps, MultiIndex) else exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            coef = to_fraction(coef)
            if coef == 0:
                continue
            if degree is None:
                degree = sum(exps)
            elif sum(exps) != degree:
                raise ValueError("polynomial is not homogeneous")
            clean[exps] = clean.get(exps, Fraction(0)) + coef
        self.nvars = nvars
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, exps: Iterable[int], coef=1) -> "MultiPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: coef})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        return cls.monomial(tuple(int(j == i) for j in range(nvars)))

    @classmethod
    def constant(cls, value, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value})

    @property
    def degree(self) -> int | None:
        for exps in self.terms:
            return sum(exps)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps) -> Fraction:
        exps = tuple(exps.exps if isinstance(exps, MultiIndex) else exps)
        return self.terms.get(exps, Fraction(0))

    def leading_term(self) -> tuple[MultiIndex, Fraction]:
        """Largest monomial in multi-index order (last coordinate first)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=lambda e: e[::-1])
        return MultiIndex(exps), self.terms[exps]

    def lift(self, nvars: int) -> "MultiPoly":
        """Same polynomial viewed in ``nvars >= self.nvars`` variables (x_0.. kept)."""
        pad = (0,) * (nvars - self.nvars)
        if nvars < self.nvars:
            raise ValueError("cannot drop variables")
        return MultiPoly(nvars, {e + pad: c for e, c in self.terms.items()})

    def _check(self, other: "MultiPoly"):
        if other.nvars != self.nvars:
            raise ValueError("variable-count mismatch")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = to_fraction(other)
            return MultiPoly(self.nvars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending multi-index order."""
        return sorted(self.terms.items(), key=lambda t: t[0][::-1], reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e
            )
            if not mono:
                piece = format_rational(abs(c))
            elif abs(c) == 1:
                piece = mono
            else:
                piece = f"{format_rational(abs(c))}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append((sign, piece))
        head_sign, head = out[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, piece in out[1:]:
            text += f" {sign} {piece}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "vars": self.nvars,
            "terms": [
                {"exp": list(e), "coef": format_rational(c)}
                for e, c in sorted(self.terms.items(), key=lambda t: t[0][::-1])
            ],
        }

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        if isinstance(data, str):
            data = json.loads(data)
        terms = [(t["exp"], parse_rational(str(t["coef"]))) for t in data["terms"]]
        return cls(int(data["vars"]), terms)
