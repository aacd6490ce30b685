"""Product identities ``varpi_i * prod_{k in S} varpi_k = sum c_T prod_{k in T} varpi_k``.

Each identity is checked by reducing both sides modulo the quotient ideal.
The classical families are swept over all parameters ``(a, i)``. For the
exceptional types every listed line is checked. ``varpi_0`` and
``varpi_{n+1}`` are zero: a right-hand term that would need one is dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from ..petring import SquareFreeClass
from ..polynomial import RationalPoly
from ..rootsys import RootSystem
from .quotient import quotient_reduce

F = Fraction


@dataclass(frozen=True)
class Identity:
    family: str
    multiplier: int
    support: tuple[int, ...]
    rhs: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def describe(self) -> str:
        lhs = f"w{self.multiplier}*(" + "".join(f"w{k}" for k in self.support) + ")"
        terms = " + ".join(f"{c}*" + "".join(f"w{k}" for k in t) for c, t in self.rhs) or "0"
        return f"{lhs} = {terms}"


@dataclass(frozen=True)
class IdentityCheck:
    identity: Identity
    passed: bool
    lhs_reduced: SquareFreeClass
    rhs_reduced: SquareFreeClass


@dataclass(frozen=True)
class AppendixReport:
    type_name: str
    checks: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total


def _interval(a: int, b: int) -> tuple[int, ...]:
    return tuple(range(a, b + 1))


def _term(n: int, coef: Fraction, support: tuple[int, ...]):
    if coef == 0 or any(k < 1 or k > n for k in support):
        return None
    return (coef, support)


def _ident(family: str, n: int, i: int, support, terms) -> Identity:
    kept = tuple(t for t in (_term(n, c, s) for c, s in terms) if t is not None)
    return Identity(family, i, tuple(support), kept)


def _type_a(n: int) -> Iterator[Identity]:
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            for i in range(a, b + 1):
                yield _ident("A", n, i, _interval(a, b), [
                    (F(b - i + 1, b - a + 2), _interval(a - 1, b)),
                    (F(i - a + 1, b - a + 2), _interval(a, b + 1)),
                ])


def _first(n: int, a: int, i: int, second: Fraction, family: str) -> Identity:
    return _ident(family, n, i, _interval(a, n - 1), [
        (F(n - i, n - a + 1), _interval(a - 1, n - 1)),
        (second, _interval(a, n)),
    ])


def _type_b(n: int) -> Iterator[Identity]:
    for a in range(1, n):
        for i in range(a, n):
            yield _first(n, a, i, F(2 * (i - a + 1), n - a + 1), "B-1")
    for a in range(1, n + 1):
        for i in range(a, n + 1):
            yield _ident("B-2", n, i, _interval(a, n), [(F(1, 2) if i == n else F(1), _interval(a - 1, n))])


def _type_c(n: int) -> Iterator[Identity]:
    for a in range(1, n):
        for i in range(a, n):
            yield _first(n, a, i, F(i - a + 1, n - a + 1), "C-1")
    for a in range(1, n + 1):
        for i in range(a, n + 1):
            yield _ident("C-2", n, i, _interval(a, n), [(F(1), _interval(a - 1, n))])


def _type_d(n: int) -> Iterator[Identity]:
    for a in range(1, n - 1):
        for i in range(a, n):
            d = F(2 * (i - a + 1), n - a + 1) if i <= n - 2 else F(n - a - 1, n - a + 1)
            yield _first(n, a, i, d, "D-1")
    for a in range(1, n - 1):
        for i in range(a, n + 1):
            d = F(1, 2) if i in (n - 1, n) else F(1)
            yield _ident("D-2", n, i, _interval(a, n), [(d, _interval(a - 1, n))])


def _block(family: str, n: int, support: Sequence[int], values: Sequence[Fraction]) -> Iterator[Identity]:
    full = _interval(1, n)
    for i, v in zip(support, values):
        yield _ident(family, n, i, support, [(F(v), full)])


_EXCEPTIONAL: dict[str, list[tuple[str, tuple[int, ...], tuple[Fraction, ...]]]] = {
    "G2": [
        ("G2-1", (1,), (F(1, 2),)),
        ("G2-2", (2,), (F(3, 2),)),
    ],
    "F4": [
        ("F4-1", (1, 2, 3), (F(1), F(2), F(3, 2))),
        ("F4-2", (2, 3, 4), (F(3, 2), F(1), F(1, 2))),
    ],
    "E6": [
        ("E6-1", (1, 3, 4, 5, 6), (F(1, 2), F(1), F(3, 2), F(1), F(1, 2))),
        ("E6-2", (1, 2, 3, 4, 5), (F(1, 2), F(3, 4), F(1), F(3, 2), F(5, 4))),
    ],
    "E7": [
        ("E7-1", (1, 3, 4, 5, 6, 7), (F(4, 7), F(8, 7), F(12, 7), F(9, 7), F(6, 7), F(3, 7))),
        ("E7-2", (2, 3, 4, 5, 6, 7), (F(1), F(3, 2), F(2), F(3, 2), F(1), F(1, 2))),
        ("E7-3", (1, 2, 3, 4, 5, 6), (F(2, 3), F(1), F(4, 3), F(2), F(5, 3), F(4, 3))),
    ],
    "E8": [
        ("E8-1", (1, 3, 4, 5, 6, 7, 8), (F(5, 8), F(5, 4), F(15, 8), F(3, 2), F(9, 8), F(3, 4), F(3, 8))),
        ("E8-2", (2, 3, 4, 5, 6, 7, 8), (F(5, 4), F(7, 4), F(5, 2), F(2), F(3, 2), F(1), F(1, 2))),
        ("E8-3", (1, 2, 3, 4, 5, 6, 7), (F(1), F(3, 2), F(2), F(3), F(5, 2), F(2), F(3, 2))),
    ],
}


def appendix_identities(rs: RootSystem) -> list[Identity]:
    n = rs.rank
    t = rs.type_label
    if t == "A":
        return list(_type_a(n))
    if t == "B":
        return list(_type_b(n))
    if t == "C":
        return list(_type_c(n))
    if t == "D":
        return list(_type_d(n))
    out: list[Identity] = []
    for family, support, values in _EXCEPTIONAL[rs.name]:
        out.extend(_block(family, n, support, values))
    return out


def _monomial_poly(n: int, vertices: Sequence[int]) -> RationalPoly:
    e = [0] * n
    for v in vertices:
        e[v - 1] += 1
    return RationalPoly.monomial(e)


def check_identity(rs: RootSystem, ident: Identity) -> IdentityCheck:
    n = rs.rank
    grade = len(ident.support) + 1
    lhs = quotient_reduce(rs, _monomial_poly(n, (ident.multiplier,) + ident.support))
    rhs = SquareFreeClass.zero(grade)
    for c, support in ident.rhs:
        rhs = rhs + quotient_reduce(rs, _monomial_poly(n, support) * c)
    return IdentityCheck(ident, lhs == rhs, lhs, rhs)


def verify_appendix(rs: RootSystem) -> AppendixReport:
    checks = tuple(check_identity(rs, ident) for ident in appendix_identities(rs))
    return AppendixReport(rs.name, checks)


__all__ = [
    "Identity",
    "IdentityCheck",
    "AppendixReport",
    "appendix_identities",
    "check_identity",
    "verify_appendix",
]
