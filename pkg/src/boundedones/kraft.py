"""Level-count existence test and leftmost construction for D-limited codes.

Levels are tree depths and are numbered from 1, as in the level counts
``N_j`` and blocked-parent counts ``M_j`` reported by :func:`spectrum`.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .core import CodeBook, CodeError, kraft_sum

__all__ = [
    "EmptyLengths",
    "NonPositiveLength",
    "NotFeasible",
    "FEASIBLE",
    "INFEASIBLE",
    "INDETERMINATE",
    "LengthSpectrum",
    "LevelRow",
    "Feasibility",
    "spectrum",
    "level_capacity",
    "check_feasibility",
    "build_from_lengths",
    "level_nodes",
]

FEASIBLE = "FEASIBLE"
INFEASIBLE = "INFEASIBLE"
INDETERMINATE = "INDETERMINATE"


class EmptyLengths(CodeError):
    pass


class NonPositiveLength(CodeError):
    pass


class NotFeasible(CodeError):
    pass


def _check_lengths(lengths: Iterable[int]) -> list[int]:
    out = [int(x) for x in lengths]
    if not out:
        raise EmptyLengths("no codeword lengths given")
    bad = [x for x in out if x < 1]
    if bad:
        raise NonPositiveLength(f"lengths must be >= 1, got {bad[0]}")
    return out


@dataclass(frozen=True)
class LengthSpectrum:
    """Per-level counts of a length multiset.

    ``N[j - 1]`` is the number of lengths equal to ``j`` for ``j = 1..L``;
    ``M[j - 2]`` is the blocked-parent count ``M_j`` for ``j = 2..L+1``.
    """

    L: int
    N: tuple[int, ...]
    M: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.N)

    def count(self, j: int) -> int:
        return self.N[j - 1] if 1 <= j <= self.L else 0

    def blocked(self, j: int) -> int:
        """``M_j``; zero above ``L + 1``."""
        if j < 2:
            raise ValueError("M_j is defined for j >= 2")
        return self.M[j - 2] if j <= self.L + 1 else 0


def spectrum(lengths: Iterable[int]) -> LengthSpectrum:
    lengths = _check_lengths(lengths)
    L = max(lengths)
    N = [0] * L
    for x in lengths:
        N[x - 1] += 1
    # M[j - 2] holds M_j; filled from M_{L+1} = 0 downwards
    M = [0] * L
    for j in range(L, 1, -1):
        M[j - 2] = -(-(N[j - 1] + M[j - 1]) // 2)
    return LengthSpectrum(L, tuple(N), tuple(M))


def level_capacity(j: int, D: int) -> int:
    """Number of nodes at depth ``j`` of the largest full tree with at most D ones per path."""
    if j < 1 or D < 1:
        raise ValueError("need j >= 1 and D >= 1")
    return sum(math.comb(j, i) for i in range(D)) + math.comb(j - 1, D - 1)


@dataclass(frozen=True)
class LevelRow:
    j: int
    count: int
    capacity: int
    blocked_next: int

    @property
    def bound(self) -> int:
        return self.capacity - self.blocked_next

    @property
    def slack(self) -> int:
        return self.bound - self.count

    def to_dict(self) -> dict:
        return {
            "j": self.j,
            "N": self.count,
            "capacity": self.capacity,
            "M_next": self.blocked_next,
            "bound": self.bound,
            "slack": self.slack,
        }


@dataclass(frozen=True)
class Feasibility:
    verdict: str
    D: int
    rows: tuple[LevelRow, ...]
    kraft: Fraction

    @property
    def feasible(self) -> bool:
        return self.verdict == FEASIBLE

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "D": self.D,
            "kraft_sum": str(self.kraft),
            "levels": [r.to_dict() for r in self.rows],
        }


def check_feasibility(lengths: Iterable[int], D: int) -> Feasibility:
    """Evaluate the per-level inequalities ``N_j <= capacity_j - M_{j+1}``.

    All inequalities hold -> FEASIBLE. Some fail on a full multiset (Kraft
    sum exactly 1) -> INFEASIBLE. Some fail otherwise -> INDETERMINATE.
    Rows run from the deepest level up to level 1.
    """
    lengths = _check_lengths(lengths)
    if D < 1:
        raise ValueError("D must be >= 1")
    spec = spectrum(lengths)
    rows = tuple(
        LevelRow(j, spec.count(j), level_capacity(j, D), spec.blocked(j + 1))
        for j in range(spec.L, 0, -1)
    )
    ks = kraft_sum(lengths)
    if all(r.slack >= 0 for r in rows):
        verdict = FEASIBLE
    elif ks.is_full:
        verdict = INFEASIBLE
    else:
        verdict = INDETERMINATE
    return Feasibility(verdict, D, rows, ks.total)


def _in_tree(word: str, D: int) -> bool:
    return word[:-1].count("1") <= D - 1


def _successor(word: str, D: int) -> str | None:
    """Next node after ``word`` at the same depth, in left-to-right order."""
    j = len(word)
    ones_before = [0] * (j + 1)
    for p, bit in enumerate(word):
        ones_before[p + 1] = ones_before[p] + (bit == "1")
    for p in range(j - 1, -1, -1):
        if word[p] != "0":
            continue
        # flip position p to 1 and zero-fill; only the last bit may reach D
        ones = ones_before[p] + 1
        if p < j - 1 and ones > D - 1:
            continue
        if p == j - 1 and ones_before[p] > D - 1:
            continue
        return word[:p] + "1" + "0" * (j - p - 1)
    return None


def level_nodes(j: int, D: int) -> Iterator[str]:
    """Nodes at depth ``j`` of the complete D-limited full tree, leftmost first."""
    if j < 1 or D < 1:
        raise ValueError("need j >= 1 and D >= 1")
    word: str | None = "0" * j
    while word is not None:
        yield word
        word = _successor(word, D)


def build_from_lengths(lengths: Sequence[int], D: int) -> CodeBook:
    """Assign codewords with the given lengths, longest first, leftmost nodes first.

    Symbol ``i`` receives a codeword of length ``lengths[i]``; within one
    length, symbols take nodes in input order. At each depth the nodes that
    are ancestors of already placed codewords are skipped.

    Raises
    ------
    NotFeasible
        When some depth has fewer free nodes than requested codewords. This
        can happen even when :func:`check_feasibility` reports FEASIBLE (for
        instance lengths ``[1] + [4] * 8`` with ``D = 2``), because free nodes
        are not always a contiguous run.
    """
    lengths = _check_lengths(lengths)
    if D < 1:
        raise ValueError("D must be >= 1")
    by_length: dict[int, list[int]] = defaultdict(list)
    for s, x in enumerate(lengths):
        by_length[x].append(s)

    words: list[str | None] = [None] * len(lengths)
    blocked: set[str] = set()
    for j in range(max(lengths), 0, -1):
        symbols = by_length.get(j, [])
        chosen: list[str] = []
        if symbols:
            for node in level_nodes(j, D):
                if node in blocked:
                    continue
                chosen.append(node)
                if len(chosen) == len(symbols):
                    break
            if len(chosen) < len(symbols):
                raise NotFeasible(
                    f"level {j}: {len(symbols)} codewords requested, "
                    f"only {len(chosen)} free nodes"
                )
            for s, node in zip(symbols, chosen):
                words[s] = node
        blocked = {node[:-1] for node in blocked} | {node[:-1] for node in chosen}
    return CodeBook(tuple(words), mode="prefix", D=D)
