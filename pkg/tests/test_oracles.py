import math
import random
from fractions import Fraction

import pytest

from mixed_eulerian.oracles import (
    EnumerationCapExceeded,
    OracleDisagreement,
    QuotientDimensionError,
    appendix_identities,
    divided_symmetrization,
    mixed_eulerian_divsym,
    mixed_eulerian_quotient,
    mixed_eulerian_weylsum,
    permutohedron_volume,
    quotient_reduce,
    quotient_space,
    symmetrize_at,
    verify_appendix,
    weylsum_at,
)
from mixed_eulerian.oracles.divsym import composition_evaluator
from mixed_eulerian.petring import SquareFreeClass, mixed_eulerian
from mixed_eulerian.polynomial import RationalPoly
from mixed_eulerian.rootsys import all_compositions, build_root_system, mask_of

# ---------------------------------------------------------------- divided symmetrization


def test_divsym_two_variables():
    assert divided_symmetrization(RationalPoly.variable(2, 0), 2) == 1
    assert divided_symmetrization(RationalPoly.variable(2, 1), 2) == -1


def test_divsym_degree_check():
    with pytest.raises(ValueError):
        divided_symmetrization(RationalPoly.variable(3, 0), 3)
    with pytest.raises(ValueError):
        divided_symmetrization(lambda t: t[0], 3, degree=1)
    with pytest.raises(ValueError):
        divided_symmetrization(lambda t: t[0], 3)


def test_divsym_lower_degree_vanishes():
    rng = random.Random(1)
    for n in range(3, 6):
        for deg in range(n - 1):
            f = composition_evaluator([deg] + [0] * (n - 2))
            pt = tuple(rng.sample(range(1, 1000), n))
            assert symmetrize_at(f, pt) == 0


def test_divsym_golden_a8():
    assert mixed_eulerian_divsym((1, 0, 2, 3, 0, 0, 1, 1)) == 23616


def test_divsym_rejects_bad_composition():
    with pytest.raises(ValueError):
        mixed_eulerian_divsym((1, 2))


def test_divsym_detects_non_constant_input():
    # degree n-1 but not a polynomial: the value depends on the point
    with pytest.raises(OracleDisagreement):
        divided_symmetrization(lambda t: Fraction(t[0] ** 2, t[1]), 2, degree=1)


@pytest.mark.parametrize("n", range(2, 7))
def test_divsym_matches_reduction_exhaustive(n):
    rs = build_root_system("A", n - 1)
    for comp in all_compositions(n - 1, n - 1):
        assert mixed_eulerian_divsym(comp, seed=n) == mixed_eulerian(rs, comp)


def test_permutohedron_small():
    assert permutohedron_volume([1, 0]) == 1
    assert permutohedron_volume([2, 1, 0]) == 3
    assert permutohedron_volume([5]) == 1


def test_permutohedron_scaling_and_symmetry():
    a = [Fraction(7, 2), Fraction(1, 3), 0, -1]
    v = permutohedron_volume(a)
    assert permutohedron_volume([2 * x for x in a]) == 8 * v
    # a polynomial in a of degree n-1: reversing a is the same as negating it
    assert permutohedron_volume(list(reversed(a))) == (-1) ** (len(a) - 1) * v
    assert permutohedron_volume([x + 5 for x in a]) == v


# ---------------------------------------------------------------- Weyl sum


def test_weylsum_golden():
    assert mixed_eulerian_weylsum(build_root_system("G", 2), (1, 1)) == 12
    assert mixed_eulerian_weylsum(build_root_system("E", 6), (0, 1, 0, 2, 3, 0)) == 34992


def test_weylsum_rank_two_by_hand():
    # G_2: (2,0) -> 6 and (0,2) -> 18 from the two quadratic relations
    rs = build_root_system("G", 2)
    assert mixed_eulerian_weylsum(rs, (2, 0)) == 6
    assert mixed_eulerian_weylsum(rs, (0, 2)) == 18


def test_weylsum_point_independent():
    rs = build_root_system("B", 3)
    values = {weylsum_at(rs, (1, 0, 2), t) for t in [(1, 1, 1), (3, 7, 2), (100, 1, 55)]}
    assert values == {12}


def test_weylsum_cap():
    with pytest.raises(EnumerationCapExceeded):
        mixed_eulerian_weylsum(build_root_system("E", 8), (1,) * 8)
    with pytest.raises(EnumerationCapExceeded):
        mixed_eulerian_weylsum(build_root_system("D", 4), (1,) * 4, cap=100)


def test_weylsum_requires_dominant_point():
    with pytest.raises(ValueError):
        weylsum_at(build_root_system("A", 2), (1, 1), (1, 0))


@pytest.mark.parametrize("n", range(2, 6))
def test_weylsum_agrees_with_divsym_type_a(n):
    rs = build_root_system("A", n - 1)
    for comp in all_compositions(n - 1, n - 1):
        assert mixed_eulerian_weylsum(rs, comp) == mixed_eulerian_divsym(comp)


# ---------------------------------------------------------------- quotient ring


def _mono(n, exps):
    return RationalPoly.monomial(exps)


def test_quotient_examples():
    f4 = build_root_system("F", 4)
    assert quotient_reduce(f4, _mono(4, (2, 1, 1, 0))) == SquareFreeClass.monomial([1, 2, 3, 4])
    g2 = build_root_system("G", 2)
    assert quotient_reduce(g2, _mono(2, (0, 2))) == SquareFreeClass.monomial([1, 2], Fraction(3, 2))
    for n in range(3, 7):
        b = build_root_system("B", n)
        exps = [0] * n
        exps[n - 2] = 2
        expected = SquareFreeClass.monomial([n - 2, n - 1], Fraction(1, 2)) + SquareFreeClass.monomial([n - 1, n])
        assert quotient_reduce(b, _mono(n, exps)) == expected


def test_quotient_square_free_is_fixed():
    rs = build_root_system("D", 5)
    for S in [(1, 2), (2, 4, 5), (1, 3, 5)]:
        exps = [int(k + 1 in S) for k in range(5)]
        assert quotient_reduce(rs, _mono(5, exps)) == SquareFreeClass.monomial(S)


def test_quotient_kills_generators():
    rs = build_root_system("C", 4)
    n = 4
    for i in range(n):
        alpha = RationalPoly.linear(list(rs.cartan[i]))
        p = alpha * RationalPoly.variable(n, i) * RationalPoly.variable(n, (i + 2) % n)
        assert quotient_reduce(rs, p).is_zero()


def test_quotient_rejects_inhomogeneous():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError):
        quotient_reduce(rs, RationalPoly.variable(2, 0) + 1)


def test_quotient_above_rank_is_zero():
    rs = build_root_system("A", 2)
    assert quotient_reduce(rs, _mono(2, (2, 1))).is_zero()


def test_quotient_golden():
    assert mixed_eulerian_quotient(build_root_system("E", 6), (0, 1, 0, 2, 3, 0)) == 34992
    assert mixed_eulerian_quotient(build_root_system("A", 8), (1, 0, 2, 3, 0, 0, 1, 1)) == 23616


def test_quotient_e8_top_class():
    assert mixed_eulerian_quotient(build_root_system("E", 8), (1,) * 8) == 696729600


@pytest.mark.parametrize("t,n", [("A", 4), ("B", 4), ("D", 4), ("G", 2), ("F", 4)])
def test_quotient_dimensions(t, n):
    rs = build_root_system(t, n)
    for d in range(n + 2):
        assert quotient_space(rs, d).dimension == math.comb(n, d)


def test_quotient_reduction_is_multiplicative():
    rs = build_root_system("B", 4)
    rng = random.Random(5)
    for _ in range(10):
        p = RationalPoly.monomial([rng.randint(0, 1) for _ in range(4)])
        while p.degree() < 2:
            p = p * RationalPoly.variable(4, rng.randrange(4))
        q = RationalPoly.variable(4, rng.randrange(4)) * RationalPoly.variable(4, rng.randrange(4))
        if p.degree() + q.degree() > 4:
            continue
        red = quotient_reduce(rs, p)
        back = RationalPoly(4)
        for mask, c in red.terms.items():
            back = back + RationalPoly.monomial([mask >> k & 1 for k in range(4)], c)
        assert quotient_reduce(rs, p * q) == quotient_reduce(rs, back * q)


def test_dimension_error_type():
    assert issubclass(QuotientDimensionError, AssertionError)


# ---------------------------------------------------------------- appendix identities


@pytest.mark.parametrize(
    "t,n,count",
    [("A", 4, 20), ("B", 4, 16), ("C", 4, 16), ("D", 5, 21), ("F", 4, 6), ("G", 2, 2), ("E", 6, 10), ("E", 7, 18), ("E", 8, 21)],
)
def test_appendix_identities_hold(t, n, count):
    rep = verify_appendix(build_root_system(t, n))
    assert rep.total == count
    assert rep.ok, [c.identity.describe() for c in rep.checks if not c.passed]


def test_appendix_b_includes_base_case():
    rs = build_root_system("B", 4)
    idents = appendix_identities(rs)
    base = [i for i in idents if i.family == "B-1" and i.multiplier == 3 and i.support == (3,)]
    assert len(base) == 1
    assert base[0].rhs == ((Fraction(1, 2), (2, 3)), (Fraction(1), (3, 4)))


def test_appendix_detects_a_wrong_identity():
    from mixed_eulerian.oracles.appendix import Identity, check_identity

    rs = build_root_system("G", 2)
    wrong = Identity("bogus", 1, (1,), ((Fraction(1), (1, 2)),))
    assert not check_identity(rs, wrong).passed
