"""Structure constants for multiplying a fundamental weight into a connected monomial.

Two independent sources are provided:

* :func:`m_lookup` is a hardcoded table indexed by the isomorphism type of
  the pair of sub-diagrams ``(K, J)`` and the position ``i'`` of the
  multiplied vertex in a fixed labeling of ``J``;
* :func:`m_derive` recomputes the same number from localizations of
  Schubert classes, evaluated by a subsequence DP over a reduced word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence

from .polynomial import RationalPoly
from .rootsys import (
    RootSystem,
    RootSystemError,
    WeylWord,
    build_root_system,
    component_type,
    diagram_isomorphisms,
    is_connected,
    longest_element,
    mask_of,
    num_reduced_words_v,
    popcount,
    reduced_words,
    reflect_root,
    v_K,
    vertices_of,
)


class PairClassificationError(AssertionError):
    """A (K, J) pair that matches no row of the table. Signals a bug."""


# --------------------------------------------------------------------------
# pair templates

F = Fraction


def _identity(r: int) -> tuple[int, ...]:
    return tuple(range(1, r + 1))


def _e_type_a(r: int) -> tuple[int, ...]:
    # beta_1..beta_{r-1} run along the long chain 1,3,4,...; beta_r is the branch node 2
    return (1,) + tuple(range(3, r + 1)) + (2,)


def _piecewise(cut: int, low: Callable[[int], Fraction], high: Callable[[int], Fraction]):
    return lambda ip, r: low(ip) if ip <= cut else high(ip)


@dataclass(frozen=True)
class PairKind:
    """One row of the coefficient table."""

    name: str
    k_label: str  # e.g. "A_{r-1}" or "D_5"
    j_type: str
    fixed_rank: Optional[int]  # None for the classical series
    min_rank: int
    beta_to_std: Callable[[int], tuple[int, ...]] = field(repr=False, compare=False)
    k_betas: Callable[[int], tuple[int, ...]] = field(repr=False, compare=False)
    value: Callable[[int, int], Fraction] = field(repr=False, compare=False)

    def admits(self, r: int) -> bool:
        if self.fixed_rank is not None:
            return r == self.fixed_rank
        return r >= self.min_rank

    def template(self, r: int) -> tuple[tuple[int, ...], ...]:
        """Cartan matrix of ``J`` written in beta order."""
        std = build_root_system(self.j_type, r).cartan
        p = self.beta_to_std(r)
        return tuple(tuple(std[p[a] - 1][p[b] - 1] for b in range(r)) for a in range(r))


def _drop_last(r: int) -> tuple[int, ...]:
    return tuple(range(1, r))


def _drop_first(r: int) -> tuple[int, ...]:
    return tuple(range(2, r + 1))


def _only(*betas: int) -> Callable[[int], tuple[int, ...]]:
    return lambda r: betas


PAIR_KINDS: tuple[PairKind, ...] = (
    PairKind("(A_{r-1},A_r)", "A_{r-1}", "A", None, 2, _identity, _drop_last, lambda ip, r: F(ip, r)),
    PairKind("(A_{r-1},B_r)", "A_{r-1}", "B", None, 2, _identity, _drop_last, lambda ip, r: F(2 * ip, r)),
    PairKind(
        "(B_{r-1},B_r)", "B_{r-1}", "B", None, 3, _identity, _drop_first,
        lambda ip, r: F(1, 2) if ip == r else F(1),
    ),
    PairKind("(A_{r-1},C_r)", "A_{r-1}", "C", None, 2, _identity, _drop_last, lambda ip, r: F(ip, r)),
    PairKind("(C_{r-1},C_r)", "C_{r-1}", "C", None, 3, _identity, _drop_first, lambda ip, r: F(1)),
    PairKind(
        "(A_{r-1},D_r)", "A_{r-1}", "D", None, 4, _identity, _drop_last,
        lambda ip, r: F(r - 2, r) if ip == r - 1 else F(2 * ip, r),
    ),
    PairKind(
        "(D_{r-1},D_r)", "D_{r-1}", "D", None, 5, _identity, _drop_first,
        lambda ip, r: F(1, 2) if ip in (r - 1, r) else F(1),
    ),
    PairKind(
        "(A_5,E_6)", "A_5", "E", 6, 6, _e_type_a, _drop_last,
        _piecewise(3, lambda ip: F(ip, 2), lambda ip: F(6 - ip, 2)),
    ),
    PairKind(
        "(D_5,E_6)", "D_5", "E", 6, 6, _identity, _drop_last,
        _piecewise(3, lambda ip: F(ip + 1, 4), lambda ip: F(10 - ip, 4)),
    ),
    PairKind(
        "(A_6,E_7)", "A_6", "E", 7, 7, _e_type_a, _drop_last,
        _piecewise(3, lambda ip: F(4 * ip, 7), lambda ip: F(3 * (7 - ip), 7)),
    ),
    PairKind(
        "(D_6,E_7)", "D_6", "E", 7, 7, _identity, _drop_first,
        _piecewise(3, lambda ip: F(ip, 2), lambda ip: F(8 - ip, 2)),
    ),
    PairKind(
        "(E_6,E_7)", "E_6", "E", 7, 7, _identity, _drop_last,
        _piecewise(3, lambda ip: F(ip + 1, 3), lambda ip: F(10 - ip, 3)),
    ),
    PairKind(
        "(A_7,E_8)", "A_7", "E", 8, 8, _e_type_a, _drop_last,
        _piecewise(3, lambda ip: F(5 * ip, 8), lambda ip: F(3 * (8 - ip), 8)),
    ),
    PairKind(
        "(D_7,E_8)", "D_7", "E", 8, 8, _identity, _drop_first,
        _piecewise(3, lambda ip: F(2 * ip + 1, 4), lambda ip: F(9 - ip, 2)),
    ),
    PairKind(
        "(E_7,E_8)", "E_7", "E", 8, 8, _identity, _drop_last,
        _piecewise(3, lambda ip: F(ip + 1, 2), lambda ip: F(10 - ip, 2)),
    ),
    PairKind(
        "(B_3,F_4)", "B_3", "F", 4, 4, _identity, _drop_last,
        lambda ip, r: F(ip) if ip <= 2 else F(3, 2),
    ),
    PairKind("(C_3,F_4)", "C_3", "F", 4, 4, _identity, _drop_first, lambda ip, r: F(5 - ip, 2)),
    PairKind("(A_1,G_2)-(i)", "A_1", "G", 2, 2, _identity, _only(1), lambda ip, r: F(1, 2)),
    PairKind("(A_1,G_2)-(ii)", "A_1", "G", 2, 2, _identity, _only(2), lambda ip, r: F(3, 2)),
)

PAIR_KIND_BY_NAME = {k.name: k for k in PAIR_KINDS}


@dataclass(frozen=True)
class PairType:
    """A classified pair: table row, rank of ``J`` and the beta-relabeling.

    ``relabel[k]`` is the ambient vertex carrying ``beta_{k+1}``.
    """

    kind: PairKind
    r: int
    relabel: tuple[int, ...]

    @property
    def name(self) -> str:
        return self.kind.name

    def beta_of(self, vertex: int) -> int:
        return self.relabel.index(vertex) + 1


@dataclass(frozen=True)
class MTableEntry:
    pair: PairType
    i_prime: int
    value: Fraction


def _check_triple(rs: RootSystem, i: int, K: int, J: int) -> None:
    if not (is_connected(rs, K) and is_connected(rs, J)):
        raise RootSystemError("K and J must be connected")
    if K & ~J or popcount(J) != popcount(K) + 1:
        raise RootSystemError("need K inside J with exactly one extra vertex")
    if not K >> (i - 1) & 1:
        raise RootSystemError(f"vertex {i} is not in K")


def pair_matches(rs: RootSystem, K: int, J: int, i: int) -> list[tuple[PairType, int]]:
    """Every (row, relabeling) under which ``(K, J)`` fits the table, with its ``i'``.

    Rows come in table order; within a row, relabelings in lexicographic order.
    """
    r = popcount(J)
    found = []
    for kind in PAIR_KINDS:
        if not kind.admits(r):
            continue
        for lab in diagram_isomorphisms(rs, J, kind.template(r)):
            if mask_of(lab[b - 1] for b in kind.k_betas(r)) != K:
                continue
            found.append((PairType(kind, r, lab), lab.index(i) + 1))
    return found


def classify_pair(rs: RootSystem, K: int, J: int, i: int) -> tuple[PairType, int]:
    """Table row and translated index ``i'`` for multiplying ``varpi_i`` into ``K`` toward ``J``.

    When several relabelings fit (diagram automorphisms), the first matching
    row wins and within it the smallest ``i'``.
    """
    _check_triple(rs, i, K, J)
    matches = pair_matches(rs, K, J, i)
    if not matches:
        raise PairClassificationError(
            f"no table row for K={vertices_of(K)} J={vertices_of(J)} in {rs.name}"
        )
    first = matches[0][0].kind
    return min((m for m in matches if m[0].kind is first), key=lambda m: m[1])


def m_lookup(pair: PairType, i_prime: int) -> Fraction:
    if not 1 <= i_prime <= pair.r or i_prime not in pair.kind.k_betas(pair.r):
        raise RootSystemError(f"beta_{i_prime} is not a vertex of K for {pair.name}")
    return pair.kind.value(i_prime, pair.r)


def table_entry(rs: RootSystem, i: int, K: int, J: int) -> MTableEntry:
    pair, ip = classify_pair(rs, K, J, i)
    return MTableEntry(pair, ip, m_lookup(pair, ip))


# --------------------------------------------------------------------------
# Billey restriction


@dataclass(frozen=True)
class BilleyEvaluation:
    """Localization ``p_v(w)``.

    ``value_t`` is the coefficient of ``t**degree`` after every simple root is
    sent to ``t``. ``value_poly`` (in the simple roots) is only filled in
    when requested, since it is expensive for long words.
    """

    v: WeylWord
    w: WeylWord
    degree: int
    value_t: int
    value_poly: Optional[RationalPoly] = None


def inversion_roots(rs: RootSystem, w_letters: Sequence[int]) -> list[tuple[int, ...]]:
    """``r(k, w) = s_{b_1} ... s_{b_{k-1}}(alpha_{b_k})`` in simple-root coordinates."""
    out = []
    n = rs.rank
    for k, b in enumerate(w_letters):
        beta = tuple(int(j == b - 1) for j in range(n))
        for a in reversed(w_letters[:k]):
            beta = reflect_root(rs, a, beta)
        out.append(beta)
    return out


def _subsequence_dp(letters, words, weights, one, zero):
    total = zero
    for u in words:
        dp = [one] + [zero] * len(u)
        for pos, letter in enumerate(letters):
            # descending so each position is used at most once per subsequence
            for j in range(len(u) - 1, -1, -1):
                if u[j] == letter and dp[j] != zero:
                    dp[j + 1] = dp[j + 1] + dp[j] * weights[pos]
        total = total + dp[len(u)]
    return total


def billey_restrict(
    rs: RootSystem, v: WeylWord, w: WeylWord, symbolic: bool = False
) -> BilleyEvaluation:
    """Sum over subsequences of ``w``'s word spelling a reduced word of ``v``.

    Each subsequence contributes the product of its inversion roots. The sum
    is accumulated by a DP over positions of ``w`` (state: which reduced word
    of ``v`` and how much of it has been matched).
    """
    if not w.is_reduced():
        raise RootSystemError(f"word {w} is not reduced")
    red_v = sorted(reduced_words(rs, v)) if v.letters else [()]
    roots = inversion_roots(rs, w.letters)
    heights = [sum(beta) for beta in roots]
    value_t = _subsequence_dp(w.letters, red_v, heights, 1, 0)
    poly = None
    if symbolic:
        n = rs.rank
        linear = [RationalPoly.linear(list(beta)) for beta in roots]
        poly = _subsequence_dp(
            w.letters, red_v, linear, RationalPoly.constant(n, 1), RationalPoly(n)
        )
    return BilleyEvaluation(v, w, len(v.letters), value_t, poly)


# --------------------------------------------------------------------------
# derivation


def _reduced_word_count(rs: RootSystem, mask: int) -> int:
    count = len(reduced_words(rs, v_K(rs, mask)))
    expected = num_reduced_words_v(component_type(rs, mask).type_label)
    if count != expected:
        raise AssertionError(f"|Red(v_K)| = {count}, expected {expected} for {vertices_of(mask)}")
    return count


def c_iKJ(rs: RootSystem, i: int, K: int, J: int) -> Fraction:
    """Monk-type structure constant, computed from localizations at ``w_J`` and ``w_K``."""
    _check_triple(rs, i, K, J)
    s_i = WeylWord(rs, (i,))
    w_J = longest_element(rs, J)
    w_K = longest_element(rs, K)
    diff = billey_restrict(rs, s_i, w_J).value_t - billey_restrict(rs, s_i, w_K).value_t
    num = billey_restrict(rs, v_K(rs, K), w_J)
    den = billey_restrict(rs, v_K(rs, J), w_J)
    if den.value_t == 0:
        raise ArithmeticError(f"p_(v_J)(w_J) vanished for J={vertices_of(J)}")
    # t-degrees: 1 + |K| - |J| must be zero
    assert 1 + num.degree - den.degree == 0
    c = Fraction(diff * num.value_t, den.value_t)
    if c < 0:
        raise AssertionError(f"negative structure constant {c}")
    return c


@lru_cache(maxsize=None)
def m_derive(rs: RootSystem, i: int, K: int, J: int) -> Fraction:
    """``|Red(v_J)| / |Red(v_K)| / |J| * c_{i,K}^J``."""
    ratio = Fraction(_reduced_word_count(rs, J), _reduced_word_count(rs, K))
    return ratio / popcount(J) * c_iKJ(rs, i, K, J)


@lru_cache(maxsize=None)
def m_value(rs: RootSystem, i: int, K: int, J: int, source: str = "table") -> Fraction:
    """Coefficient of ``varpi_J`` in ``varpi_i * varpi_K``."""
    if source == "table":
        pair, ip = classify_pair(rs, K, J, i)
        return m_lookup(pair, ip)
    if source == "billey":
        return m_derive(rs, i, K, J)
    raise ValueError(f"unknown m source {source!r}")


def extensions(rs: RootSystem, K: int) -> list[int]:
    """Connected ``J`` containing ``K`` with one more vertex, in increasing vertex order."""
    out = []
    for v in range(1, rs.rank + 1):
        bit = 1 << (v - 1)
        if not K & bit and rs.adjacency[v - 1] & K:
            out.append(K | bit)
    return out


def realizable_triples(rs: RootSystem):
    """Every ``(i, K, J)`` with ``K`` connected, ``J`` a one-vertex extension, ``i`` in ``K``."""
    from .rootsys import connected_subsets

    for K in connected_subsets(rs):
        for J in extensions(rs, K):
            for i in vertices_of(K):
                yield i, K, J


__all__ = [
    "PAIR_KINDS",
    "PAIR_KIND_BY_NAME",
    "PairKind",
    "PairType",
    "MTableEntry",
    "BilleyEvaluation",
    "PairClassificationError",
    "pair_matches",
    "classify_pair",
    "m_lookup",
    "table_entry",
    "inversion_roots",
    "billey_restrict",
    "c_iKJ",
    "m_derive",
    "m_value",
    "extensions",
    "realizable_triples",
]
