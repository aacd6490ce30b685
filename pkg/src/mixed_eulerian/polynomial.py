"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


class RationalPoly:
    """Polynomial in ``nvars`` variables stored as ``{exponent vector: Fraction}``.

    Instances are treated as immutable; zero coefficients are never stored.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
                if c:
                    clean[tuple(exp)] = clean.get(tuple(exp), Fraction(0)) + Fraction(c)
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "RationalPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, k: int) -> "RationalPoly":
        """The variable with 0-based index ``k``."""
        exp = [0] * nvars
        exp[k] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exponent: Sequence[int], c: Scalar = 1) -> "RationalPoly":
        return cls(len(exponent), {tuple(exponent): c})

    @classmethod
    def linear(cls, coeffs: Sequence[Scalar]) -> "RationalPoly":
        n = len(coeffs)
        return cls(n, {tuple(int(i == k) for i in range(n)): c for k, c in enumerate(coeffs)})

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Fraction]) -> "RationalPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        return p

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        """Copy of the terms in canonical (sorted) order."""
        return dict(sorted(self._terms.items(), reverse=True))

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: "RationalPoly | Scalar") -> "RationalPoly":
        if isinstance(other, RationalPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        return RationalPoly.constant(self.nvars, other)

    def __add__(self, other: "RationalPoly | Scalar") -> "RationalPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return RationalPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "RationalPoly | Scalar") -> "RationalPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "RationalPoly":
        return self._coerce(other) - self

    def __mul__(self, other: "RationalPoly | Scalar") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            c = Fraction(other)
            if not c:
                return RationalPoly(self.nvars)
            return RationalPoly._raw(self.nvars, {e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return RationalPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPoly":
        if k < 0:
            raise ValueError("negative power")
        result = RationalPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == RationalPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    # -- evaluation --------------------------------------------------------

    def __call__(self, point: Sequence[Scalar]) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x**k
            total += term
        return total

    def uniform_specialization(self) -> dict[int, Fraction]:
        """Image under ``x_k -> t`` for all ``k``, as ``{degree: coefficient}``."""
        out: dict[int, Fraction] = {}
        for e, c in self._terms.items():
            d = sum(e)
            out[d] = out.get(d, 0) + c
        return {d: c for d, c in out.items() if c}

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(f"x{k + 1}" + (f"^{p}" if p > 1 else "") for k, p in enumerate(e) if p)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def product(polys: Iterable[RationalPoly], nvars: int) -> RationalPoly:
    result = RationalPoly.constant(nvars, 1)
    for p in polys:
        result = result * p
    return result
