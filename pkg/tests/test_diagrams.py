import math
import random
import xml.etree.ElementTree as ET
from collections import Counter
from fractions import Fraction

import pytest

from mixed_eulerian.diagrams import (
    Move,
    enumerate_diagrams,
    mixed_eulerian_diagrams,
    render_diagram,
    setup,
    weight,
)
from mixed_eulerian.petring import ascending_letters, expansion_paths, mixed_eulerian
from mixed_eulerian.rootsys import all_compositions, build_root_system

EXAMPLE = (1, 0, 2, 3, 0, 0, 1, 1)


def test_setup_example():
    st = setup(EXAMPLE)
    assert st.M == (1, 3, 3, 4, 4, 4, 7, 8)
    assert st.J == (1, 3, 4, 7, 8)
    assert st.I == (3, 4, 4)


def test_setup_edge_cases():
    assert setup((1, 1, 1)).I == ()
    st = setup((0, 0, 3))
    assert st.J == (3,) and st.I == (3, 3)
    with pytest.raises(ValueError):
        setup((1, 2))
    with pytest.raises(ValueError):
        setup((3, -1, 1))
    with pytest.raises(ValueError):
        setup(())


def test_example_diagrams_and_weights():
    ds = enumerate_diagrams(setup(EXAMPLE))
    assert len(ds) == 3
    F = Fraction
    expected = [F(2, 3) * F(4, 5) * F(4, 6), F(1, 3) * F(2, 4) * F(4, 6), F(1, 3) * F(2, 4) * F(5, 7)]
    assert [weight(d) for d in ds] == expected
    assert [math.factorial(8) * w for w in expected] == [14336, 4480, 4800]
    assert mixed_eulerian_diagrams(EXAMPLE) == 23616


def test_diagram_rows_are_consistent():
    for d in enumerate_diagrams(setup(EXAMPLE)):
        assert d.shaded[0] == frozenset(d.setup.J)
        for k, step in enumerate(d.steps):
            before, after = d.shaded[k], d.shaded[k + 1]
            assert after - before == {step.added}
            assert step.added in (step.a - 1, step.b + 1)
            a, b, i = step.a, step.b, step.marked
            if step.move.is_left:
                assert step.factor == Fraction(b - i + 1, b - a + 2)
            else:
                assert step.factor == Fraction(i - a + 1, b - a + 2)
            assert 0 < step.factor <= 1


def test_left_branch_first():
    ds = enumerate_diagrams(setup(EXAMPLE))
    assert ds[0].choices[0] == Move.LEFT
    assert ds[1].choices[0] == Move.RIGHT


def test_all_ones_single_empty_game():
    ds = enumerate_diagrams(setup((1,) * 5))
    assert len(ds) == 1 and ds[0].steps == ()
    assert weight(ds[0]) == 1
    assert mixed_eulerian_diagrams((1,) * 5) == math.factorial(5)


def test_dead_branches_are_pruned():
    # the marked string can fill the whole row and then has nowhere to grow
    assert enumerate_diagrams(setup((3, 0, 0))) != []
    assert mixed_eulerian_diagrams((3, 0, 0)) == mixed_eulerian(build_root_system("A", 3), (3, 0, 0))


@pytest.mark.parametrize("n", range(2, 8))
def test_matches_reduction_engine_exhaustive(n):
    rs = build_root_system("A", n - 1)
    for comp in all_compositions(n - 1, n - 1):
        assert mixed_eulerian_diagrams(comp) == mixed_eulerian(rs, comp)


def test_bijection_with_expansion_paths():
    rng = random.Random(3)
    for _ in range(40):
        m = rng.randint(2, 8)
        comp = [0] * m
        for _ in range(m):
            comp[rng.randrange(m)] += 1
        st = setup(comp)
        rs = build_root_system("A", m)
        # J first (each once), then the repeats: the same order as the game
        letters = list(st.J) + list(st.I)
        paths = expansion_paths(rs, letters)
        ds = enumerate_diagrams(st)
        assert len(paths) == len(ds)
        assert Counter(w for _, w, _ in paths) == Counter(weight(d) for d in ds)
        assert all(mask == rs.full_mask for mask, _, _ in paths)
        assert sorted(ascending_letters(comp)) == sorted(letters)


def test_ascii_render():
    ds = enumerate_diagrams(setup(EXAMPLE))
    text = render_diagram(ds[0], "ascii")
    lines = text.splitlines()
    assert len(lines) == 1 + 4 + 1  # header, four rows, weight
    assert lines[1].strip().startswith("J [#][ ][#][#]")
    assert "[x]" in lines[2]
    assert render_diagram(ds[0]) == text  # byte-stable


def test_ascii_render_empty_game():
    d = enumerate_diagrams(setup((1, 1)))[0]
    lines = render_diagram(d).splitlines()
    assert len(lines) == 3 and "[#][#]" in lines[1]


def test_svg_render_is_xml():
    d = enumerate_diagrams(setup(EXAMPLE))[2]
    root = ET.fromstring(render_diagram(d, "svg"))
    assert root.tag.endswith("svg")
    assert len([e for e in root.iter() if e.tag.endswith("rect")]) == 4 * 8


def test_unknown_format():
    d = enumerate_diagrams(setup((1, 1)))[0]
    with pytest.raises(ValueError):
        render_diagram(d, "png")
