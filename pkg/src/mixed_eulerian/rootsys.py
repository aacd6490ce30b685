"""Root systems, Weyl groups and connected subsets of Dynkin diagrams.

Vertices are numbered 1..n following Bourbaki (in the E series the branch
vertex 2 hangs off vertex 4). A subset of vertices is an ``int`` bitmask
with bit ``i - 1`` standing for vertex ``i``.

Most group computations run in fundamental-weight coordinates: a weight
``x`` is stored as the integer vector of pairings ``<x, alpha_k^vee>``, on
which ``s_j`` acts by ``x -> x - x_j * cartan[j]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

TYPE_LABELS = "ABCDEFG"
DEFAULT_ENUMERATION_CAP = 10**7


class RootSystemError(ValueError):
    """Raised for invalid root system input (bad type/rank, bad word, ...)."""


# --------------------------------------------------------------------------
# construction


def _check_rank(type_label: str, rank: int) -> None:
    if type_label not in TYPE_LABELS:
        raise RootSystemError(f"unknown Lie type {type_label!r}")
    if not isinstance(rank, int) or rank < 1:
        raise RootSystemError(f"rank must be a positive integer, got {rank!r}")
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[type_label]
    if not valid:
        hint = {
            "B": "B_n needs n >= 2",
            "C": "C_n needs n >= 2",
            "D": "D_n needs n >= 4 (D_2 = A_1 x A_1, D_3 = A_3)",
            "E": "E_n exists only for n = 6, 7, 8",
            "F": "F_n exists only for n = 4",
            "G": "G_n exists only for n = 2",
        }.get(type_label, "")
        raise RootSystemError(f"invalid root system {type_label}{rank}: {hint}")


def _unit(dim: int, k: int, scale: Fraction = Fraction(1)) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[k] = scale
    return v


def _diff(dim: int, a: int, b: int) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[a] += 1
    v[b] -= 1
    return v


def _standard_simple_roots(type_label: str, n: int) -> list[list[Fraction]]:
    """Orthonormal-coordinate simple roots in Bourbaki numbering."""
    half = Fraction(1, 2)
    if type_label == "A":
        return [_diff(n + 1, i, i + 1) for i in range(n)]
    if type_label in "BCD":
        roots = [_diff(n, i, i + 1) for i in range(n - 1)]
        if type_label == "B":
            roots.append(_unit(n, n - 1))
        elif type_label == "C":
            roots.append(_unit(n, n - 1, Fraction(2)))
        else:
            last = [Fraction(0)] * n
            last[n - 2] = last[n - 1] = Fraction(1)
            roots.append(last)
        return roots
    if type_label == "G":
        # alpha_1 short, alpha_2 long, inside the plane x + y + z = 0
        return [
            [Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(-2), Fraction(1), Fraction(1)],
        ]
    if type_label == "F":
        return [
            _diff(4, 1, 2),
            _diff(4, 2, 3),
            _unit(4, 3),
            [half, -half, -half, -half],
        ]
    # E_6, E_7, E_8 as the first n simple roots of E_8 in R^8
    e8 = [
        [half, -half, -half, -half, -half, -half, -half, half],
        [Fraction(1), Fraction(1)] + [Fraction(0)] * 6,
    ]
    e8 += [_diff(8, k + 1, k) for k in range(6)]
    return e8[:n]


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _solve_rational(matrix: list[list[Fraction]], rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve ``matrix @ X = rhs`` exactly (square, nonsingular)."""
    n = len(matrix)
    aug = [list(matrix[i]) + list(rhs[i]) for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class RootSystem:
    """An irreducible crystallographic root system with a fixed simple system.

    ``cartan[i][j] = <alpha_i, alpha_j^vee>`` (0-based indices), so that
    ``alpha_i = sum_j cartan[i][j] * varpi_j``.
    """

    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    simple_roots: tuple[tuple[Fraction, ...], ...] = field(compare=False, repr=False)
    fund_weights: tuple[tuple[Fraction, ...], ...] = field(compare=False, repr=False)
    ambient_dim: int = field(compare=False, repr=False)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def n(self) -> int:
        return self.rank

    @property
    def full_mask(self) -> int:
        return (1 << self.rank) - 1

    def inner(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        """The (W-invariant) standard inner product of the ambient space."""
        return _dot(u, v)

    @cached_property
    def root_norms(self) -> tuple[Fraction, ...]:
        """``(alpha_i, alpha_i)`` for each simple root."""
        return tuple(_dot(a, a) for a in self.simple_roots)

    @cached_property
    def weight_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix ``(varpi_i, varpi_j)`` of the fundamental weights."""
        w = self.fund_weights
        return tuple(tuple(_dot(w[i], w[j]) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbour bitmask of each vertex (0-based index)."""
        n = self.rank
        return tuple(
            sum(1 << j for j in range(n) if j != i and self.cartan[i][j] != 0) for i in range(n)
        )

    @cached_property
    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64)

    def braid_order(self, i: int, j: int) -> int:
        """Order of ``s_i s_j`` (1-based vertices)."""
        if i == j:
            return 1
        prod = self.cartan[i - 1][j - 1] * self.cartan[j - 1][i - 1]
        return {0: 2, 1: 3, 2: 4, 3: 6}[prod]

    @cached_property
    def chain_order(self) -> tuple[int, ...]:
        """Vertices listed along the main chain of the diagram.

        For E types this is 1,3,4,...,n followed by the branch vertex 2;
        for every other type it is 1..n. Used to pick canonical labelings.
        """
        if self.type_label == "E":
            return (1,) + tuple(range(3, self.rank + 1)) + (2,)
        return tuple(range(1, self.rank + 1))

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates, sorted by height then lexicographically."""
        return _positive_roots(self.cartan)

    def __str__(self) -> str:
        return self.name


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Construct the root system ``type_label`` of the given rank."""
    type_label = type_label.upper()
    _check_rank(type_label, rank)
    roots = _standard_simple_roots(type_label, rank)
    n = rank
    norms = [_dot(a, a) for a in roots]
    cartan = []
    for i in range(n):
        row = []
        for j in range(n):
            value = 2 * _dot(roots[i], roots[j]) / norms[j]
            assert value.denominator == 1
            row.append(int(value))
        cartan.append(tuple(row))
    # alpha = C varpi  =>  varpi = C^{-1} alpha
    c_frac = [[Fraction(x) for x in row] for row in cartan]
    weights = _solve_rational(c_frac, [list(r) for r in roots])
    return RootSystem(
        type_label=type_label,
        rank=n,
        cartan=tuple(cartan),
        simple_roots=tuple(tuple(r) for r in roots),
        fund_weights=tuple(tuple(w) for w in weights),
        ambient_dim=len(roots[0]),
    )


def parse_type(text: str) -> RootSystem:
    """Parse ``"E6"``, ``"a8"``, ``"B_3"`` into a root system."""
    t = text.strip().replace("_", "")
    if len(t) < 2 or not t[1:].isdigit():
        raise RootSystemError(f"cannot parse root system {text!r}; expected e.g. A8, E6, G2")
    return build_root_system(t[0].upper(), int(t[1:]))


def cartan_det(rs: RootSystem) -> int:
    """Exact determinant of the Cartan matrix (fraction-free Bareiss elimination)."""
    m = [list(row) for row in rs.cartan]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# --------------------------------------------------------------------------
# roots and Weyl group


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    simple = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for j in range(n):
                pairing = sum(beta[i] * cartan[i][j] for i in range(n))
                image = tuple(b - pairing * (i == j) for i, b in enumerate(beta))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    pos = [r for r in seen if all(c >= 0 for c in r)]
    pos.sort(key=lambda r: (sum(r), r))
    return tuple(pos)


def reflect_root(rs: RootSystem, j: int, beta: Sequence[int]) -> tuple[int, ...]:
    """``s_j(beta)`` for ``beta`` in simple-root coordinates (``j`` 1-based)."""
    c = rs.cartan
    jj = j - 1
    pairing = sum(b * c[i][jj] for i, b in enumerate(beta))
    out = list(beta)
    out[jj] -= pairing
    return tuple(out)


def reflect_weight(rs: RootSystem, j: int, x: Sequence[int]) -> tuple[int, ...]:
    """``s_j(x)`` for ``x`` in fundamental-weight coordinates (``j`` 1-based)."""
    row = rs.cartan[j - 1]
    xj = x[j - 1]
    return tuple(a - xj * r for a, r in zip(x, row))


def _is_positive(beta: Sequence[int]) -> bool:
    return any(b > 0 for b in beta)


def _layers(rs: RootSystem, start: Sequence[int], generators: Sequence[int]) -> Iterator[np.ndarray]:
    """Orbit of a point, dominant for the given generators, split by length.

    ``s_j`` raises the length of ``w`` exactly when the current point has
    positive ``j``-th coordinate, so each layer is computed from the previous
    one alone.
    """
    cartan = rs.cartan_array
    layer = np.array([list(start)], dtype=np.int64)
    gens = [g - 1 for g in generators]
    while len(layer):
        yield layer
        pieces = []
        for j in gens:
            sel = layer[layer[:, j] > 0]
            if len(sel):
                pieces.append(sel - np.outer(sel[:, j], cartan[j]))
        if not pieces:
            break
        layer = _unique_rows(np.concatenate(pieces))


def _unique_rows(rows: np.ndarray) -> np.ndarray:
    """Row-wise ``np.unique``; packs rows into one int64 key when they fit."""
    lo = int(rows.min())
    span = int(rows.max()) - lo + 1
    bits = max(span - 1, 1).bit_length()
    if bits * rows.shape[1] > 62:
        return np.unique(rows, axis=0)
    shifted = rows - lo
    keys = np.zeros(len(rows), dtype=np.int64)
    for col in range(rows.shape[1]):
        keys = (keys << bits) | shifted[:, col]
    _, idx = np.unique(keys, return_index=True)
    return rows[idx]


def weyl_orbit(rs: RootSystem, point: Sequence[int], generators: Sequence[int] | None = None) -> np.ndarray:
    """Orbit of a dominant weight under ``W`` (or the parabolic subgroup on ``generators``)."""
    gens = list(range(1, rs.rank + 1)) if generators is None else list(generators)
    if any(point[g - 1] < 0 for g in gens):
        raise RootSystemError("orbit enumeration needs a dominant starting point")
    return np.concatenate(list(_layers(rs, point, gens)))


def _closed_form_order(type_label: str, n: int) -> int:
    if type_label == "A":
        return math.factorial(n + 1)
    if type_label in "BC":
        return 2**n * math.factorial(n)
    if type_label == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[
        (type_label, n)
    ]


class WeylOrder(NamedTuple):
    order: int
    enumerated: bool  # False when taken from the product-of-degrees formula


@lru_cache(maxsize=None)
def length_distribution(rs: RootSystem) -> tuple[int, ...]:
    """Number of elements of ``W`` of each length, by breadth-first enumeration."""
    return tuple(len(layer) for layer in _layers(rs, (1,) * rs.rank, range(1, rs.rank + 1)))


@lru_cache(maxsize=None)
def weyl_order(rs: RootSystem, cap: int = DEFAULT_ENUMERATION_CAP) -> WeylOrder:
    """``|W|``: enumerated when the group is within ``cap``, else from the degree formula."""
    formula = _closed_form_order(rs.type_label, rs.rank)
    if formula <= cap:
        counted = sum(length_distribution(rs))
        assert counted == formula, (rs.name, counted, formula)
        return WeylOrder(counted, True)
    return WeylOrder(formula, False)


def top_class_integral(rs: RootSystem, cap: int = DEFAULT_ENUMERATION_CAP) -> Fraction:
    """``|W| / det(C)``, the integral of the product of all fundamental weights."""
    return Fraction(weyl_order(rs, cap).order, cartan_det(rs))


# --------------------------------------------------------------------------
# subsets of the Dynkin diagram


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def component_containing(rs: RootSystem, mask: int, vertex: int) -> int:
    """The connected component of ``mask`` that contains ``vertex``."""
    bit = 1 << (vertex - 1)
    if not mask & bit:
        raise RootSystemError(f"vertex {vertex} not in subset {vertices_of(mask)}")
    comp, frontier = bit, bit
    adj = rs.adjacency
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nb = adj[low.bit_length() - 1] & mask & ~comp
        comp |= nb
        frontier |= nb
    return comp


def connected_components(rs: RootSystem, mask: int) -> list[int]:
    """Components of ``mask`` ordered by their smallest vertex."""
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = component_containing(rs, rest, low.bit_length())
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(rs: RootSystem, mask: int) -> bool:
    return mask != 0 and len(connected_components(rs, mask)) == 1


@lru_cache(maxsize=None)
def connected_subsets(rs: RootSystem) -> tuple[int, ...]:
    """All nonempty connected subsets, ordered by size then bitmask value."""
    found = [m for m in range(1, 1 << rs.rank) if is_connected(rs, m)]
    found.sort(key=lambda m: (popcount(m), m))
    return tuple(found)


def submatrix(rs: RootSystem, labeling: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of the vertices in ``labeling``, in that order."""
    return tuple(tuple(rs.cartan[a - 1][b - 1] for b in labeling) for a in labeling)


def diagram_isomorphisms(
    rs: RootSystem, mask: int, target: tuple[tuple[int, ...], ...]
) -> list[tuple[int, ...]]:
    """All orderings of ``mask``'s vertices whose Cartan submatrix equals ``target``.

    An ordering ``(v_1, ..., v_r)`` sends target vertex ``k`` to ambient
    vertex ``v_k``.
    """
    verts = vertices_of(mask)
    r = len(target)
    if len(verts) != r:
        return []
    c = rs.cartan
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], used: int) -> None:
        k = len(prefix)
        if k == r:
            out.append(tuple(prefix))
            return
        for v in verts:
            bit = 1 << (v - 1)
            if used & bit:
                continue
            if c[v - 1][v - 1] != target[k][k]:
                continue
            if all(
                c[v - 1][prefix[m] - 1] == target[k][m] and c[prefix[m] - 1][v - 1] == target[m][k]
                for m in range(k)
            ):
                prefix.append(v)
                extend(prefix, used | bit)
                prefix.pop()

    extend([], 0)
    return out


class ComponentType(NamedTuple):
    type_label: str
    rank: int
    labeling: tuple[int, ...]  # ambient vertex carrying standard index 1, 2, ...


def _candidate_types(r: int, prefer: str) -> list[tuple[str, int]]:
    order = [prefer] + [t for t in TYPE_LABELS if t != prefer]
    out = []
    for t in order:
        try:
            _check_rank(t, r)
        except RootSystemError:
            continue
        out.append((t, r))
    return out


def _chain_key(rs: RootSystem, labeling: Sequence[int]) -> tuple[int, ...]:
    pos = {v: k for k, v in enumerate(rs.chain_order)}
    return tuple(pos[v] for v in labeling)


@lru_cache(maxsize=None)
def component_type(rs: RootSystem, mask: int) -> ComponentType:
    """Lie type of a connected subset together with its canonical labeling.

    Among the isomorphisms onto the standard diagram, the one whose word is
    smallest with respect to ``rs.chain_order`` is returned. Two-vertex
    double bonds are reported as the ambient letter when that is B or C
    (otherwise B); a three-vertex chain is always A_3, never D_3.
    """
    if not is_connected(rs, mask):
        raise RootSystemError(f"subset {vertices_of(mask)} is not connected")
    r = popcount(mask)
    prefer = rs.type_label if rs.type_label in "BC" else "A"
    for t, rank in _candidate_types(r, prefer):
        std = build_root_system(t, rank)
        isos = diagram_isomorphisms(rs, mask, std.cartan)
        if isos:
            best = min(isos, key=lambda lab: _chain_key(rs, lab))
            return ComponentType(t, rank, best)
    raise AssertionError(f"unclassifiable connected subset {vertices_of(mask)} of {rs.name}")


# --------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class WeylWord:
    """A Weyl group element written as a word ``s_{l_1} s_{l_2} ... s_{l_k}``."""

    rs: RootSystem = field(repr=False)
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        for a in self.letters:
            if not 1 <= a <= self.rs.rank:
                raise RootSystemError(f"letter {a} outside 1..{self.rs.rank}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        sep = "" if self.rs.rank < 10 else ","
        return sep.join(map(str, self.letters)) or "e"

    def act_weight(self, x: Sequence[int]) -> tuple[int, ...]:
        """Apply the element to a weight in fundamental-weight coordinates."""
        out = tuple(x)
        for a in reversed(self.letters):
            out = reflect_weight(self.rs, a, out)
        return out

    def act_root(self, beta: Sequence[int]) -> tuple[int, ...]:
        out = tuple(beta)
        for a in reversed(self.letters):
            out = reflect_root(self.rs, a, out)
        return out

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Row ``k`` holds ``w(varpi_k)`` in fundamental-weight coordinates."""
        n = self.rs.rank
        return tuple(self.act_weight(tuple(int(i == k) for i in range(n))) for k in range(n))

    @cached_property
    def length(self) -> int:
        """Coxeter length of the element (number of positive roots sent negative)."""
        return sum(1 for beta in self.rs.positive_roots if not _is_positive(self.act_root(beta)))

    def is_reduced(self) -> bool:
        # appending s_j to u raises the length iff u(alpha_j) > 0
        prefix = WeylWord(self.rs, ())
        for k, a in enumerate(self.letters):
            prefix = WeylWord(self.rs, self.letters[:k])
            simple = tuple(int(i == a - 1) for i in range(self.rs.rank))
            if not _is_positive(prefix.act_root(simple)):
                return False
        return True

    def inverse(self) -> "WeylWord":
        return WeylWord(self.rs, tuple(reversed(self.letters)))

    def same_element(self, other: "WeylWord") -> bool:
        return self.matrix == other.matrix


def word(rs: RootSystem, letters: Iterable[int] | str) -> WeylWord:
    """Build a word from letters or a string such as ``"121"`` or ``"1,10,2"``."""
    if isinstance(letters, str):
        text = letters.replace(" ", ",")
        letters = [int(t) for t in text.split(",") if t] if "," in text else [int(ch) for ch in text]
    return WeylWord(rs, tuple(letters))


def longest_element(rs: RootSystem, mask: int) -> WeylWord:
    """Lexicographically smallest reduced word of the longest element of ``W_K``.

    Greedy descent: starting from a weight that is regular dominant for
    ``W_K``, repeatedly reflect in the smallest ``j`` in ``K`` with positive
    pairing. Every such step extends a reduced word, and the walk stops
    exactly at ``w_K``. No group enumeration is needed, so this also covers
    E_7 and E_8.
    """
    if mask == 0:
        raise RootSystemError("longest element of an empty subset requested")
    gens = vertices_of(mask)
    x = [int(k in gens) for k in range(1, rs.rank + 1)]
    cartan = rs.cartan
    letters = []
    while True:
        j = next((g for g in gens if x[g - 1] > 0), None)
        if j is None:
            break
        xj = x[j - 1]
        row = cartan[j - 1]
        x = [a - xj * r for a, r in zip(x, row)]
        letters.append(j)
    return WeylWord(rs, tuple(letters))


def reduced_words(rs: RootSystem, w: WeylWord, limit: int | None = None) -> frozenset[tuple[int, ...]]:
    """All reduced words of ``w``: the closure of one reduced word under braid moves."""
    if not w.is_reduced():
        raise RootSystemError(f"word {w} is not reduced")
    start = w.letters
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for wd in frontier:
            for pos in range(len(wd) - 1):
                a, b = wd[pos], wd[pos + 1]
                if a == b:
                    continue
                m = rs.braid_order(a, b)
                if pos + m > len(wd):
                    continue
                seg = wd[pos : pos + m]
                if all(seg[k] == (a if k % 2 == 0 else b) for k in range(m)):
                    swapped = tuple(b if k % 2 == 0 else a for k in range(m))
                    new = wd[:pos] + swapped + wd[pos + m :]
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
                        if limit is not None and len(seen) > limit:
                            raise RootSystemError(f"more than {limit} reduced words")
        frontier = nxt
    return frozenset(seen)


def canonical_labeling(rs: RootSystem, mask: int) -> tuple[int, ...]:
    """Ambient vertices of a connected subset in its own standard order."""
    return component_type(rs, mask).labeling


def v_K(rs: RootSystem, mask: int) -> WeylWord:
    """The Coxeter element ``v_K``: one letter per vertex, in canonical per-component order."""
    if mask == 0:
        raise RootSystemError("v_K needs a nonempty subset")
    letters: list[int] = []
    for comp in connected_components(rs, mask):
        letters.extend(canonical_labeling(rs, comp))
    return WeylWord(rs, tuple(letters))


def num_reduced_words_v(type_label: str) -> int:
    """``|Red(v_K)|`` for a connected ``K`` of the given type."""
    return {"D": 2, "E": 3}.get(type_label, 1)


def all_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in all_compositions(total - first, parts - 1):
            yield (first,) + rest


__all__ = [
    "RootSystem",
    "RootSystemError",
    "WeylWord",
    "WeylOrder",
    "ComponentType",
    "build_root_system",
    "parse_type",
    "cartan_det",
    "weyl_order",
    "length_distribution",
    "top_class_integral",
    "weyl_orbit",
    "connected_subsets",
    "connected_components",
    "component_containing",
    "component_type",
    "canonical_labeling",
    "diagram_isomorphisms",
    "is_connected",
    "longest_element",
    "reduced_words",
    "v_K",
    "num_reduced_words_v",
    "mask_of",
    "vertices_of",
    "popcount",
    "reflect_root",
    "reflect_weight",
    "submatrix",
    "word",
    "all_compositions",
]

