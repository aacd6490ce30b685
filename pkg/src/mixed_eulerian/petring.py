"""Square-free monomial arithmetic in the cohomology of the Peterson variety.

A class of degree ``d`` is a rational combination of monomials
``prod_{k in S} varpi_k`` with ``|S| = d``. These monomials form a basis,
so multiplying by a single ``varpi_i`` only has to rewrite products in which
``i`` is already present.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence

from .mrules import extensions, m_value
from .rootsys import (
    RootSystem,
    RootSystemError,
    WeylWord,
    component_containing,
    component_type,
    connected_components,
    num_reduced_words_v,
    popcount,
    reduced_words,
    top_class_integral,
    vertices_of,
)


@dataclass(frozen=True, eq=False)
class SquareFreeClass:
    grade: int
    terms: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        clean = {m: Fraction(c) for m, c in self.terms.items() if c}
        for m in clean:
            if popcount(m) != self.grade:
                raise ValueError(f"mask {vertices_of(m)} does not have popcount {self.grade}")
        object.__setattr__(self, "terms", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def unit(cls) -> "SquareFreeClass":
        return cls(0, {0: Fraction(1)})

    @classmethod
    def zero(cls, grade: int) -> "SquareFreeClass":
        return cls(grade, {})

    @classmethod
    def monomial(cls, vertices: Iterable[int], coefficient: Fraction | int = 1) -> "SquareFreeClass":
        vs = tuple(vertices)
        mask = 0
        for v in vs:
            mask |= 1 << (v - 1)
        return cls(len(vs), {mask: Fraction(coefficient)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mask: int) -> Fraction:
        return self.terms.get(mask, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SquareFreeClass):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.grade == other.grade and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.grade, frozenset(self.terms.items())))

    def __add__(self, other: "SquareFreeClass") -> "SquareFreeClass":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.grade != other.grade:
            raise ValueError("cannot add classes of different degree")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SquareFreeClass(self.grade, out)

    def __sub__(self, other: "SquareFreeClass") -> "SquareFreeClass":
        return self + other.scale(-1)

    def scale(self, c: Fraction | int) -> "SquareFreeClass":
        return SquareFreeClass(self.grade, {m: v * c for m, v in self.terms.items()})

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return {vertices_of(m): c for m, c in self.terms.items()}

    def __repr__(self) -> str:
        if self.is_zero():
            return f"SquareFreeClass(grade={self.grade}, 0)"
        body = " + ".join(
            f"{c}*w{''.join(map(str, vertices_of(m))) if m else '1'}" for m, c in self.terms.items()
        )
        return f"SquareFreeClass(grade={self.grade}, {body})"


def multiply_omega(
    rs: RootSystem, cls: SquareFreeClass, i: int, source: str = "table"
) -> SquareFreeClass:
    """``varpi_i * cls`` rewritten in the square-free basis."""
    if not 1 <= i <= rs.rank:
        raise RootSystemError(f"vertex {i} outside 1..{rs.rank}")
    bit = 1 << (i - 1)
    out: dict[int, Fraction] = {}
    for mask, coef in cls.terms.items():
        if not mask & bit:
            new = mask | bit
            out[new] = out.get(new, 0) + coef
            continue
        K = component_containing(rs, mask, i)
        rest = mask & ~K
        for J in extensions(rs, K):
            # the new vertex is adjacent to K, so it cannot sit in another component
            assert not (J & ~K) & rest, "square-free closure violated"
            new = rest | J
            out[new] = out.get(new, 0) + coef * m_value(rs, i, K, J, source)
    return SquareFreeClass(cls.grade + 1, out)


def multiply_word(
    rs: RootSystem, cls: SquareFreeClass, letters: Iterable[int], source: str = "table"
) -> SquareFreeClass:
    letters = list(letters)
    for k, i in enumerate(letters):
        if cls.is_zero():
            return SquareFreeClass.zero(cls.grade + len(letters) - k)
        cls = multiply_omega(rs, cls, i, source)
    return cls


def integrate(rs: RootSystem, cls: SquareFreeClass) -> Fraction:
    """Pair a top-degree class with the fundamental class."""
    if cls.grade != rs.rank:
        raise ValueError(f"not top degree: grade {cls.grade}, rank {rs.rank}")
    return cls.coefficient(rs.full_mask) * top_class_integral(rs)


def validate_composition(rs: RootSystem, comp: Sequence[int]) -> tuple[int, ...]:
    comp = tuple(int(c) for c in comp)
    if len(comp) != rs.rank:
        raise ValueError(f"composition has {len(comp)} parts, {rs.name} needs {rs.rank}")
    if any(c < 0 for c in comp):
        raise ValueError("composition entries must be non-negative")
    if sum(comp) != rs.rank:
        raise ValueError(f"composition sums to {sum(comp)}, expected {rs.rank}")
    return comp


def ascending_letters(comp: Sequence[int]) -> list[int]:
    return [i + 1 for i, c in enumerate(comp) for _ in range(c)]


def mixed_eulerian(
    rs: RootSystem,
    comp: Sequence[int],
    order: Optional[Sequence[int]] = None,
    source: str = "table",
) -> Fraction:
    """Mixed Eulerian number of ``rs`` for the composition ``comp``.

    ``order`` optionally fixes the sequence of multiplications; it must be a
    rearrangement of the multiset described by ``comp``. ``source="billey"``
    recomputes every structure constant instead of reading the table.
    """
    comp = validate_composition(rs, comp)
    letters = ascending_letters(comp)
    if order is not None:
        if sorted(order) != letters:
            raise ValueError("order is not a rearrangement of the composition")
        letters = list(order)
    cls = multiply_word(rs, SquareFreeClass.unit(), letters, source)
    if cls.is_zero():
        return Fraction(0)
    return integrate(rs, cls)


def giambelli_factor(rs: RootSystem, mask: int) -> Fraction:
    """``g`` with ``p_{v_K} = g * prod_{k in K} varpi_k``: product of ``|Red|/|K_j|!`` over components."""
    g = Fraction(1)
    for comp in connected_components(rs, mask):
        t = component_type(rs, comp).type_label
        g *= Fraction(num_reduced_words_v(t), math.factorial(popcount(comp)))
    return g


def peterson_product(rs: RootSystem, I: int, K: int) -> dict[int, Fraction]:
    """Coefficients ``c`` with ``p_{v_I} * p_{v_K} = sum_J c_J p_{v_J}``."""
    if not I or not K:
        raise RootSystemError("peterson_product needs nonempty subsets")
    cls = SquareFreeClass(popcount(K), {K: Fraction(1)})
    cls = multiply_word(rs, cls, vertices_of(I))
    scale = giambelli_factor(rs, I) * giambelli_factor(rs, K)
    return {S: c * scale / giambelli_factor(rs, S) for S, c in cls.terms.items()}


def peterson_class(rs: RootSystem, w: WeylWord) -> SquareFreeClass:
    """Average of ``varpi_{i_1} ... varpi_{i_l}`` over the reduced words of ``w``."""
    length = len(w.letters)
    words = reduced_words(rs, w)
    if length > rs.rank:
        return SquareFreeClass.zero(length)
    total = SquareFreeClass.zero(length)
    for wd in sorted(words):
        total = total + multiply_word(rs, SquareFreeClass.unit(), wd)
    return total.scale(Fraction(1, math.factorial(length)))


def expansion_paths(
    rs: RootSystem, letters: Sequence[int], source: str = "table"
) -> list[tuple[int, Fraction, tuple[Fraction, ...]]]:
    """Every branch of the multiplication tree, as ``(final mask, weight, factors)``.

    Terms are never merged, so this records each path separately; branches
    that die (no extension available) are dropped.
    """
    paths: list[tuple[int, tuple[Fraction, ...]]] = [(0, ())]
    for i in letters:
        bit = 1 << (i - 1)
        nxt = []
        for mask, factors in paths:
            if not mask & bit:
                nxt.append((mask | bit, factors))
                continue
            K = component_containing(rs, mask, i)
            rest = mask & ~K
            for J in extensions(rs, K):
                nxt.append((rest | J, factors + (m_value(rs, i, K, J, source),)))
        paths = nxt
    return [(m, math.prod(f, start=Fraction(1)), f) for m, f in paths]


__all__ = [
    "SquareFreeClass",
    "multiply_omega",
    "multiply_word",
    "integrate",
    "validate_composition",
    "ascending_letters",
    "mixed_eulerian",
    "giambelli_factor",
    "peterson_product",
    "peterson_class",
    "expansion_paths",
]
