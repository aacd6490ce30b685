"""Left-right diagrams for type A.

A composition ``c`` of ``n - 1`` into ``n - 1`` parts sets up a grid with
``n - 1`` columns. The first row shades the columns ``J = {j : c_j >= 1}``.
Each further row copies the previous shading, marks the next column of the
multiset ``I`` (the repeats), and shades one more box next to the maximal
shaded string through the mark. Choosing the left neighbour of the string
``[a, b]`` marked at ``i`` weighs ``(b - i + 1)/(b - a + 2)``; choosing the
right neighbour weighs ``(i - a + 1)/(b - a + 2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import escape


class Move(str, Enum):
    LEFT = "Left"
    RIGHT = "Right"
    FORCED_LEFT = "Forced-Left"
    FORCED_RIGHT = "Forced-Right"

    @property
    def is_left(self) -> bool:
        return self in (Move.LEFT, Move.FORCED_LEFT)


@dataclass(frozen=True)
class DiagramSetup:
    width: int  # n - 1
    comp: tuple[int, ...]
    M: tuple[int, ...]
    J: tuple[int, ...]
    I: tuple[int, ...]

    @property
    def rows(self) -> int:
        return len(self.I) + 1


@dataclass(frozen=True)
class RowStep:
    marked: int
    a: int
    b: int
    move: Move
    added: int
    factor: Fraction


@dataclass(frozen=True)
class LeftRightDiagram:
    setup: DiagramSetup
    steps: tuple[RowStep, ...]
    shaded: tuple[frozenset[int], ...]  # one entry per row, row 1 first

    @property
    def choices(self) -> tuple[Move, ...]:
        return tuple(s.move for s in self.steps)


def setup(comp: Sequence[int]) -> DiagramSetup:
    comp = tuple(int(c) for c in comp)
    width = len(comp)
    if width == 0 or any(c < 0 for c in comp) or sum(comp) != width:
        raise ValueError(f"need {width} non-negative parts summing to {width}, got {comp}")
    M = tuple(j + 1 for j, c in enumerate(comp) for _ in range(c))
    J = tuple(j + 1 for j, c in enumerate(comp) if c >= 1)
    I = tuple(j + 1 for j, c in enumerate(comp) for _ in range(c - 1))
    return DiagramSetup(width, comp, M, J, I)


def _string_through(shaded: frozenset[int], i: int) -> tuple[int, int]:
    a = b = i
    while a - 1 in shaded:
        a -= 1
    while b + 1 in shaded:
        b += 1
    return a, b


def enumerate_diagrams(st: DiagramSetup) -> list[LeftRightDiagram]:
    """Every surviving diagram, depth first with the left branch explored first."""
    out: list[LeftRightDiagram] = []

    def grow(k: int, rows: list[frozenset[int]], steps: list[RowStep]) -> None:
        if k == len(st.I):
            out.append(LeftRightDiagram(st, tuple(steps), tuple(rows)))
            return
        cur = rows[-1]
        i = st.I[k]
        a, b = _string_through(cur, i)
        options = []
        if a - 1 >= 1:
            options.append((a - 1, Fraction(b - i + 1, b - a + 2), True))
        if b + 1 <= st.width:
            options.append((b + 1, Fraction(i - a + 1, b - a + 2), False))
        forced = len(options) == 1
        for col, factor, left in options:
            if forced:
                move = Move.FORCED_LEFT if left else Move.FORCED_RIGHT
            else:
                move = Move.LEFT if left else Move.RIGHT
            steps.append(RowStep(i, a, b, move, col, factor))
            rows.append(cur | {col})
            grow(k + 1, rows, steps)
            rows.pop()
            steps.pop()

    grow(0, [frozenset(st.J)], [])
    return out


def weight(diagram: LeftRightDiagram) -> Fraction:
    return math.prod((s.factor for s in diagram.steps), start=Fraction(1))


def mixed_eulerian_diagrams(comp: Sequence[int]) -> Fraction:
    st = setup(comp)
    total = sum((weight(d) for d in enumerate_diagrams(st)), Fraction(0))
    value = math.factorial(st.width) * total
    if value.denominator != 1 or value <= 0:
        raise AssertionError(f"diagram sum {value} is not a positive integer")
    return value


def render_diagram(diagram: LeftRightDiagram, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return _render_ascii(diagram)
    if fmt == "svg":
        return _render_svg(diagram)
    raise ValueError(f"unknown format {fmt!r}; use ascii or svg")


def _render_ascii(d: LeftRightDiagram) -> str:
    w = d.setup.width
    lines = ["      " + "".join(f"{c:>3}" for c in range(1, w + 1))]
    for r, shaded in enumerate(d.shaded):
        mark = d.steps[r - 1].marked if r else None
        cells = []
        for c in range(1, w + 1):
            if c == mark:
                cells.append("[x]" if c in shaded else " x ")
            else:
                cells.append("[#]" if c in shaded else "[ ]")
        label = "J" if r == 0 else f"i={mark}"
        note = ""
        if r:
            s = d.steps[r - 1]
            note = f"  {s.move.value} {s.factor}"
        lines.append(f"{label:>5} " + "".join(cells) + note)
    lines.append(f"weight {weight(d)}")
    return "\n".join(lines) + "\n"


def _render_svg(d: LeftRightDiagram) -> str:
    size, margin = 24, 40
    w = d.setup.width
    width = margin + w * size + 10
    height = margin + len(d.shaded) * size + 10
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for c in range(1, w + 1):
        x = margin + (c - 1) * size + size // 2
        parts.append(f'<text x="{x}" y="{margin - 8}" text-anchor="middle" font-size="12">{c}</text>')
    for r, shaded in enumerate(d.shaded):
        y = margin + r * size
        label = "J" if r == 0 else str(d.steps[r - 1].marked)
        parts.append(
            f'<text x="{margin - 6}" y="{y + size * 2 // 3}" text-anchor="end" font-size="12">'
            f"{escape(label)}</text>"
        )
        mark = d.steps[r - 1].marked if r else None
        for c in range(1, w + 1):
            x = margin + (c - 1) * size
            fill = "#999999" if c in shaded else "#ffffff"
            parts.append(
                f'<rect x="{x}" y="{y}" width="{size}" height="{size}" fill="{fill}" stroke="#000000"/>'
            )
            if c == mark:
                parts.append(
                    f'<path d="M{x + 4} {y + 4} L{x + size - 4} {y + size - 4} '
                    f'M{x + size - 4} {y + 4} L{x + 4} {y + size - 4}" stroke="#000000"/>'
                )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


__all__ = [
    "Move",
    "DiagramSetup",
    "RowStep",
    "LeftRightDiagram",
    "setup",
    "enumerate_diagrams",
    "weight",
    "mixed_eulerian_diagrams",
    "render_diagram",
]
