import math
import random
from fractions import Fraction

import pytest

from mixed_eulerian.oracles import quotient_reduce
from mixed_eulerian.petring import (
    SquareFreeClass,
    ascending_letters,
    expansion_paths,
    giambelli_factor,
    integrate,
    mixed_eulerian,
    multiply_omega,
    peterson_class,
    peterson_product,
)
from mixed_eulerian.polynomial import RationalPoly
from mixed_eulerian.rootsys import (
    build_root_system,
    connected_subsets,
    longest_element,
    mask_of,
    word,
)


def sf(*vertices, c=1):
    return SquareFreeClass.monomial(vertices, c)


def test_class_validation():
    with pytest.raises(ValueError):
        SquareFreeClass(2, {0b111: Fraction(1)})
    assert SquareFreeClass(1, {0b1: 0}).is_zero()
    assert sf(1, 2) + sf(1, 2) == sf(1, 2, c=2)
    assert sf(1) - sf(1) == SquareFreeClass.zero(1)


def test_multiply_a8_example():
    rs = build_root_system("A", 8)
    out = multiply_omega(rs, sf(1, 3, 4, 7, 8), 3)
    assert out == sf(1, 2, 3, 4, 7, 8, c=Fraction(2, 3)) + sf(1, 3, 4, 5, 7, 8, c=Fraction(1, 3))


def test_multiply_g2_squares():
    rs = build_root_system("G", 2)
    assert multiply_omega(rs, sf(1), 1) == sf(1, 2, c=Fraction(1, 2))
    assert multiply_omega(rs, sf(2), 2) == sf(1, 2, c=Fraction(3, 2))


def test_multiply_past_top_degree_vanishes():
    rs = build_root_system("A", 2)
    out = multiply_omega(rs, sf(1, 2), 1)
    assert out.is_zero() and out.grade == 3


def test_multiply_new_vertex_and_grade():
    rs = build_root_system("D", 5)
    out = multiply_omega(rs, sf(1, 5), 3)
    assert out == sf(1, 3, 5) and out.grade == 3


def test_type_a_two_term_rule():
    rs = build_root_system("A", 7)
    for a in range(1, 8):
        for b in range(a, 8):
            for i in range(a, b + 1):
                expected = SquareFreeClass.zero(b - a + 2)
                if a > 1:
                    expected += sf(*range(a - 1, b + 1), c=Fraction(b - i + 1, b - a + 2))
                if b < 7:
                    expected += sf(*range(a, b + 2), c=Fraction(i - a + 1, b - a + 2))
                assert multiply_omega(rs, sf(*range(a, b + 1)), i) == expected


def test_integrate():
    assert integrate(build_root_system("A", 4), sf(1, 2, 3, 4)) == math.factorial(4)
    assert integrate(build_root_system("B", 3), sf(1, 2, 3)) == 24
    assert integrate(build_root_system("F", 4), sf(1, 2, 3, 4)) == 1152
    with pytest.raises(ValueError, match="not top degree"):
        integrate(build_root_system("A", 3), sf(1, 2))


@pytest.mark.parametrize(
    "t,n,comp,value",
    [
        ("A", 8, (1, 0, 2, 3, 0, 0, 1, 1), 23616),
        ("E", 6, (0, 1, 0, 2, 3, 0), 34992),
        ("B", 3, (1, 0, 2), 12),
        ("G", 2, (2, 0), 6),
        ("G", 2, (1, 1), 12),
        ("G", 2, (0, 2), 18),
    ],
)
def test_golden_values(t, n, comp, value):
    assert mixed_eulerian(build_root_system(t, n), comp) == value


@pytest.mark.parametrize("n", range(2, 7))
def test_b_closed_form(n):
    rs = build_root_system("B", n)
    for k in range(n + 1):
        comp = (k,) + (0,) * (n - 2) + (n - k,)
        assert mixed_eulerian(rs, comp) == math.comb(n, k) * math.factorial(n - k) * 2**k


def test_bad_compositions():
    rs = build_root_system("A", 3)
    for comp in [(1, 1), (1, 1, 2), (-1, 2, 2)]:
        with pytest.raises(ValueError):
            mixed_eulerian(rs, comp)
    with pytest.raises(ValueError):
        mixed_eulerian(rs, (1, 1, 1), order=[1, 1, 2])


@pytest.mark.parametrize("t,n", [("A", 5), ("B", 4), ("C", 4), ("D", 5), ("E", 6), ("F", 4), ("G", 2)])
def test_order_independence(t, n):
    rs = build_root_system(t, n)
    rng = random.Random(7)
    for _ in range(5):
        comp = [0] * n
        for _ in range(n):
            comp[rng.randrange(n)] += 1
        letters = ascending_letters(comp)
        base = mixed_eulerian(rs, comp)
        for _ in range(4):
            rng.shuffle(letters)
            assert mixed_eulerian(rs, comp, order=letters) == base


@pytest.mark.parametrize("t,n", [("A", 4), ("C", 3), ("D", 4), ("G", 2), ("F", 4)])
def test_billey_source_gives_same_numbers(t, n):
    rs = build_root_system(t, n)
    comp = (0,) * (n - 1) + (n,)
    assert mixed_eulerian(rs, comp, source="billey") == mixed_eulerian(rs, comp)


def test_giambelli_factor():
    assert giambelli_factor(build_root_system("G", 2), 0b11) == Fraction(1, 2)
    assert giambelli_factor(build_root_system("D", 4), 0b1111) == Fraction(2, 24)
    assert giambelli_factor(build_root_system("A", 5), mask_of([1, 2, 4])) == Fraction(1, 2)


def test_peterson_product_g2():
    assert peterson_product(build_root_system("G", 2), 0b01, 0b01) == {0b11: 1}


def test_peterson_product_disjoint_untouched():
    rs = build_root_system("A", 5)
    out = peterson_product(rs, mask_of([1]), mask_of([4, 5]))
    assert out == {mask_of([1, 4, 5]): 1}


@pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("C", 3), ("G", 2), ("B", 2)])
def test_peterson_product_matches_quotient(t, n):
    # both factors converted through monomials and reduced independently
    rs = build_root_system(t, n)
    for I in connected_subsets(rs):
        for K in connected_subsets(rs):
            if bin(I).count("1") + bin(K).count("1") > n:
                continue
            exps = [0] * n
            for m in (I, K):
                for v in range(n):
                    exps[v] += m >> v & 1
            red = quotient_reduce(rs, RationalPoly.monomial(exps))
            gI, gK = giambelli_factor(rs, I), giambelli_factor(rs, K)
            expected = {S: c * gI * gK / giambelli_factor(rs, S) for S, c in red.terms.items()}
            assert peterson_product(rs, I, K) == expected


def test_peterson_class_examples():
    rs = build_root_system("A", 2)
    assert peterson_class(rs, word(rs, "1")) == sf(1)
    # s_1 s_2 has the single reduced word 12, so the average is varpi_1 varpi_2 / 2!
    assert peterson_class(rs, word(rs, "12")) == sf(1, 2, c=Fraction(1, 2))
    assert peterson_class(rs, longest_element(rs, 0b11)).is_zero()


def test_peterson_class_of_v_k_matches_giambelli():
    rs = build_root_system("D", 4)
    w = word(rs, "1234")
    assert peterson_class(rs, w) == sf(1, 2, 3, 4, c=Fraction(2, 24))


def test_expansion_paths_sum_to_product():
    rs = build_root_system("A", 8)
    comp = (1, 0, 2, 3, 0, 0, 1, 1)
    game_order = [1, 3, 4, 7, 8, 3, 4, 4]
    paths = expansion_paths(rs, game_order)
    assert len(paths) == 3
    assert sum(w for _, w, _ in paths) * math.factorial(8) == 23616
    # another order branches differently but sums to the same number
    paths = expansion_paths(rs, ascending_letters(comp))
    assert sum(w for _, w, _ in paths) * math.factorial(8) == 23616
