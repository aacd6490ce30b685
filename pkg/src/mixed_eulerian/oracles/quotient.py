"""Reduction modulo the ideal generated by ``alpha_i * varpi_i``.

Polynomials are written in the fundamental weights. In degree ``d`` the
ideal is spanned by ``m * alpha_i * varpi_i`` for monomials ``m`` of degree
``d - 2``, with ``alpha_i = sum_j C_ij varpi_j``. Columns are ordered so that
square-free monomials come last. Gaussian elimination then never pivots on a
square-free column, and the normal form of any monomial is a combination of
square-free ones.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

from ..petring import SquareFreeClass
from ..polynomial import RationalPoly
from ..rootsys import RootSystem, all_compositions, top_class_integral


class QuotientDimensionError(AssertionError):
    """The quotient has the wrong dimension; this would contradict the basis theorem."""


def _column_key(e: tuple[int, ...]):
    square_free = all(x <= 1 for x in e)
    return (square_free, -max(e, default=0), tuple(-x for x in e))


def _mask(e: tuple[int, ...]) -> int:
    return sum(1 << k for k, x in enumerate(e) if x)


class QuotientSpace:
    """Row-echelon data for the degree-``d`` part of the ideal."""

    def __init__(self, rs: RootSystem, degree: int):
        self.rs = rs
        self.degree = degree
        n = rs.rank
        self.columns = sorted(all_compositions(degree, n), key=_column_key)
        self.index = {e: k for k, e in enumerate(self.columns)}
        self.square_free = [all(x <= 1 for x in e) for e in self.columns]
        # mpq (GMP rationals) is used internally; results are exported as Fraction
        self.pivots: dict[int, dict[int, mpq]] = {}
        if degree >= 2:
            self._eliminate()
        self.dimension = len(self.columns) - len(self.pivots)
        expected = math.comb(n, degree)
        if self.dimension != expected:
            raise QuotientDimensionError(
                f"{rs.name} degree {degree}: quotient dimension {self.dimension}, expected {expected}"
            )
        if any(self.square_free[p] for p in self.pivots):
            raise QuotientDimensionError("a square-free monomial is dependent modulo the ideal")
        self._normal_forms: dict[tuple[int, ...], dict[int, Fraction]] = {}

    def _generator_rows(self):
        n = self.rs.rank
        C = self.rs.cartan
        for m in all_compositions(self.degree - 2, n):
            for i in range(n):
                row: dict[int, mpq] = {}
                for j in range(n):
                    if C[i][j]:
                        e = list(m)
                        e[i] += 1
                        e[j] += 1
                        col = self.index[tuple(e)]
                        row[col] = row.get(col, 0) + mpq(C[i][j])
                yield {c: v for c, v in row.items() if v}

    def _reduce(self, row: dict[int, mpq], stop_at_free: bool) -> dict[int, mpq]:
        """Eliminate pivot columns from ``row`` in column order."""
        done: dict[int, mpq] = {}
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                if stop_at_free:
                    return row
                done[lead] = row.pop(lead)
                continue
            f = row[lead]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return done

    def _eliminate(self) -> None:
        for row in self._generator_rows():
            row = self._reduce(row, stop_at_free=True)
            if row:
                lead = min(row)
                f = row[lead]
                self.pivots[lead] = {c: v / f for c, v in row.items()}

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.pivots.values())

    def normal_form(self, exponent: tuple[int, ...]) -> dict[int, Fraction]:
        """Square-free representative of one monomial, keyed by vertex bitmask."""
        exponent = tuple(exponent)
        cached = self._normal_forms.get(exponent)
        if cached is None:
            reduced = self._reduce({self.index[exponent]: mpq(1)}, stop_at_free=False)
            for c in reduced:
                assert self.square_free[c], "normal form left a non-square-free monomial"
            cached = {
                _mask(self.columns[c]): Fraction(int(v.numerator), int(v.denominator))
                for c, v in reduced.items()
            }
            self._normal_forms[exponent] = cached
        return cached


@lru_cache(maxsize=None)
def quotient_space(rs: RootSystem, degree: int) -> QuotientSpace:
    return QuotientSpace(rs, degree)


def quotient_reduce(rs: RootSystem, p: RationalPoly) -> SquareFreeClass:
    """Square-free normal form of a homogeneous polynomial in ``varpi_1..varpi_n``."""
    if p.nvars != rs.rank:
        raise ValueError(f"polynomial has {p.nvars} variables, {rs.name} has rank {rs.rank}")
    if p.is_zero():
        return SquareFreeClass.zero(0)
    if not p.is_homogeneous():
        raise ValueError("quotient_reduce needs a homogeneous polynomial")
    d = p.degree()
    # above the rank the quotient is zero; the dimension check confirms it
    space = quotient_space(rs, d)
    out: dict[int, Fraction] = {}
    for e, c in p.items():
        for mask, v in space.normal_form(e).items():
            out[mask] = out.get(mask, 0) + c * v
    return SquareFreeClass(d, out)


def mixed_eulerian_quotient(rs: RootSystem, comp) -> Fraction:
    comp = tuple(int(c) for c in comp)
    if len(comp) != rs.rank or any(c < 0 for c in comp) or sum(comp) != rs.rank:
        raise ValueError(f"bad composition {comp} for {rs.name}")
    nf = quotient_space(rs, rs.rank).normal_form(comp)
    return nf.get(rs.full_mask, Fraction(0)) * top_class_integral(rs)


__all__ = [
    "QuotientDimensionError",
    "QuotientSpace",
    "quotient_space",
    "quotient_reduce",
    "mixed_eulerian_quotient",
]
