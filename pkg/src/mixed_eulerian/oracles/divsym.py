"""Divided symmetrization by exact evaluation at generic integer points.

For ``f`` homogeneous of degree ``n - 1`` in ``t_1..t_n`` the sum

    <f> = sum over permutations w of  w( f / prod_k (t_k - t_{k+1}) )

is a constant. We evaluate it at a random point with distinct integer
coordinates. Every chain denominator divides ``P = prod_{a<b} (t_a - t_b)``,
so the whole sum is accumulated as an integer over the common denominator
``P``.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from ..polynomial import RationalPoly

Evaluator = Callable[[Sequence[int]], Union[int, Fraction]]

POINT_RANGE = (1, 10**6)


class OracleDisagreement(AssertionError):
    """Two generic points gave different answers; the input was not a valid instance."""


def generic_point(rng: random.Random, n: int) -> tuple[int, ...]:
    """``n`` distinct integers drawn from ``POINT_RANGE`` (distinctness makes every difference nonzero)."""
    lo, hi = POINT_RANGE
    return tuple(rng.sample(range(lo, hi + 1), n))


def symmetrize_at(f: Evaluator, point: Sequence[int]) -> Fraction:
    """Value of the symmetrized rational function at one point (no degree check)."""
    n = len(point)
    if len(set(point)) != n:
        raise ZeroDivisionError("point has repeated coordinates")
    P = 1
    for a in range(n):
        for b in range(a + 1, n):
            P *= point[a] - point[b]
    num_int = 0
    num_frac = Fraction(0)
    for perm in itertools.permutations(point):
        D = 1
        for k in range(n - 1):
            D *= perm[k] - perm[k + 1]
        val = f(perm)
        q = P // D
        if isinstance(val, int):
            num_int += val * q
        else:
            num_frac += val * q
    return (num_frac + num_int) / P


def _as_evaluator(f: Union[RationalPoly, Evaluator], n: int, degree: Optional[int]) -> Evaluator:
    if isinstance(f, RationalPoly):
        if f.nvars != n:
            raise ValueError(f"polynomial has {f.nvars} variables, expected {n}")
        if not f.is_homogeneous(n - 1) and not f.is_zero():
            raise ValueError(f"need a homogeneous polynomial of degree {n - 1}")
        return f.evaluate
    if degree is None:
        raise ValueError("a callable needs its homogeneous degree declared")
    if degree != n - 1:
        raise ValueError(f"degree {degree} given, divided symmetrization needs {n - 1}")
    return f


def divided_symmetrization(
    f: Union[RationalPoly, Evaluator],
    n: int,
    *,
    degree: Optional[int] = None,
    seed: int = 0,
    points: int = 2,
) -> Fraction:
    """``<f>`` for ``f`` of degree ``n - 1``, checked at ``points`` independent generic points."""
    ev = _as_evaluator(f, n, degree)
    rng = random.Random(seed)
    values = []
    for _ in range(points):
        while True:
            pt = generic_point(rng, n)
            try:
                values.append(symmetrize_at(ev, pt))
                break
            except ZeroDivisionError:  # pragma: no cover - sample() gives distinct values
                continue
    if len(set(values)) != 1:
        raise OracleDisagreement(f"generic points disagree: {values}")
    return values[0]


def composition_evaluator(comp: Sequence[int]) -> Evaluator:
    """``t -> prod_i (t_1 + ... + t_i) ** c_i``."""
    comp = tuple(comp)

    def f(t: Sequence[int]) -> int:
        s = 0
        out = 1
        for ti, c in zip(t, comp):
            s += ti
            if c:
                out *= s**c
        return out

    return f


def mixed_eulerian_divsym(comp: Sequence[int], *, seed: int = 0, points: int = 2) -> Fraction:
    """Type A mixed Eulerian number of a composition of ``n - 1`` into ``n - 1`` parts."""
    comp = tuple(int(c) for c in comp)
    if any(c < 0 for c in comp) or sum(comp) != len(comp):
        raise ValueError(f"bad composition {comp}")
    n = len(comp) + 1
    return divided_symmetrization(
        composition_evaluator(comp), n, degree=n - 1, seed=seed, points=points
    )


def permutohedron_volume(a: Sequence[Union[int, Fraction]], *, seed: int = 0, points: int = 2) -> Fraction:
    """Normalized volume of the permutohedron with vertex coordinates ``a``.

    The result is the volume polynomial evaluated at ``a``. It is the
    geometric volume when ``a`` is weakly decreasing; other orders give the
    polynomial's signed value.
    """
    a = [Fraction(x) for x in a]
    n = len(a)
    if n == 1:
        return Fraction(1)
    den = math.lcm(*(x.denominator for x in a))
    scaled = [int(x * den) for x in a]

    def f(t: Sequence[int]) -> int:
        return sum(ai * ti for ai, ti in zip(scaled, t)) ** (n - 1)

    total = divided_symmetrization(f, n, degree=n - 1, seed=seed, points=points)
    return total / (math.factorial(n - 1) * Fraction(den) ** (n - 1))


__all__ = [
    "OracleDisagreement",
    "generic_point",
    "symmetrize_at",
    "divided_symmetrization",
    "composition_evaluator",
    "mixed_eulerian_divsym",
    "permutohedron_volume",
]
