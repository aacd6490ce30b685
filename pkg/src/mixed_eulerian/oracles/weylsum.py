"""Mixed Eulerian numbers as a sum over the Weyl group.

Expanding the volume of the weight polytope of ``sum_i u_i varpi_i`` gives

    A_c = sum_{w in W} prod_i (t, w varpi_i)^{c_i} / prod_j (t, w alpha_j)

for any regular ``t``. Writing ``y = w^{-1} t`` turns this into a sum over
the orbit of ``t``. Each ``(y, alpha_j^vee)`` is plus or minus
``(t, beta^vee)`` for a positive coroot ``beta^vee``, so the product of the
positive coroot pairings is a common denominator and the sum stays in
integers.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Sequence

from ..rootsys import (
    DEFAULT_ENUMERATION_CAP,
    RootSystem,
    RootSystemError,
    _closed_form_order,
    _positive_roots,
    weyl_orbit,
)
from .divsym import POINT_RANGE, OracleDisagreement


class EnumerationCapExceeded(RootSystemError):
    pass


def _positive_coroots(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    transpose = tuple(tuple(rs.cartan[j][i] for j in range(rs.rank)) for i in range(rs.rank))
    return _positive_roots(transpose)


def weylsum_at(rs: RootSystem, comp: Sequence[int], t: Sequence[int]) -> Fraction:
    """The Weyl sum for a strictly dominant ``t`` given in fundamental-weight coordinates."""
    n = rs.rank
    if len(t) != n or any(x <= 0 for x in t):
        raise ValueError("t must be strictly dominant")
    gram = rs.weight_gram
    L = math.lcm(*(g.denominator for row in gram for g in row))
    gs = [[int(g * L) for g in row] for row in gram]
    halves = [nrm / 2 for nrm in rs.root_norms]
    P = 1
    for gamma in _positive_coroots(rs):
        P *= sum(g * x for g, x in zip(gamma, t))
    cols = [[gs[k][i] for k in range(n)] for i in range(n)]
    active = [(i, c) for i, c in enumerate(comp) if c]
    total = 0
    for y in weyl_orbit(rs, list(t)).tolist():
        D = 1
        for yj in y:
            D *= yj
        N = 1
        for i, c in active:
            N *= sum(a * b for a, b in zip(y, cols[i])) ** c
        total += N * (P // D)
    scale = Fraction(L) ** n * math.prod(halves, start=Fraction(1))
    return Fraction(total, P) / scale


def mixed_eulerian_weylsum(
    rs: RootSystem,
    comp: Sequence[int],
    *,
    seed: int = 0,
    points: int = 2,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Fraction:
    comp = tuple(int(c) for c in comp)
    if len(comp) != rs.rank or any(c < 0 for c in comp) or sum(comp) != rs.rank:
        raise ValueError(f"bad composition {comp} for {rs.name}")
    order = _closed_form_order(rs.type_label, rs.rank)
    if order > cap:
        raise EnumerationCapExceeded(
            f"|W({rs.name})| = {order} exceeds the cap {cap}; use the quotient-ring oracle instead"
        )
    rng = random.Random(seed)
    lo, hi = POINT_RANGE
    values = []
    for _ in range(points):
        t = [rng.randint(lo, hi) for _ in range(rs.rank)]
        values.append(weylsum_at(rs, comp, t))
    if len(set(values)) != 1:
        raise OracleDisagreement(f"generic points disagree: {values}")
    return values[0]


__all__ = ["EnumerationCapExceeded", "weylsum_at", "mixed_eulerian_weylsum"]
