"""Brute-force ground truth for small instances.

Nothing here uses the dynamic program or the level inequalities; every
answer comes from enumerating trees outright.
"""

from __future__ import annotations

import heapq
from collections import Counter
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .core import CodeError, Distribution, validate_distribution

__all__ = [
    "TooLarge",
    "INFEASIBLE_COST",
    "tree_shapes",
    "brute_alphabetic",
    "brute_prefix",
    "brute_feasible",
    "full_length_multisets",
    "huffman",
]

ALPHABETIC_CAP = 12
PREFIX_CAP = 8
FEASIBLE_N_CAP = 10
FEASIBLE_L_CAP = 8

#: returned by the brute-force solvers when no tree satisfies the budget
INFEASIBLE_COST = None


class TooLarge(CodeError):
    pass


def _as_dist(dist) -> Distribution:
    return dist if isinstance(dist, Distribution) else validate_distribution(dist)


@lru_cache(maxsize=None)
def tree_shapes(m: int) -> tuple[np.ndarray, np.ndarray]:
    """Every full binary tree on ``m`` ordered leaves.

    Returns two integer arrays of shape ``(catalan(m - 1), m)``: the depth of
    each leaf and the number of right edges on its root path.
    """
    if m == 1:
        return np.zeros((1, 1), dtype=np.int64), np.zeros((1, 1), dtype=np.int64)
    depths, ones = [], []
    for a in range(1, m):
        ld, lo = tree_shapes(a)
        rd, ro = tree_shapes(m - a)
        # every (left, right) pairing
        nl, nr = len(ld), len(rd)
        d = np.concatenate(
            [np.repeat(ld + 1, nr, axis=0), np.tile(rd + 1, (nl, 1))], axis=1
        )
        o = np.concatenate(
            [np.repeat(lo, nr, axis=0), np.tile(ro + 1, (nl, 1))], axis=1
        )
        depths.append(d)
        ones.append(o)
    return np.concatenate(depths), np.concatenate(ones)


def _surviving_depths(n: int, D: int) -> np.ndarray:
    depths, ones = tree_shapes(n)
    return depths[ones.max(axis=1) <= D]


def brute_alphabetic(dist, D: int):
    """Minimum of sum(weight * depth) over ordered trees with at most D ones per path.

    Returns ``INFEASIBLE_COST`` (None) when no tree survives the budget.
    """
    dist = _as_dist(dist)
    if dist.n > ALPHABETIC_CAP:
        raise TooLarge(f"brute_alphabetic supports n <= {ALPHABETIC_CAP}")
    depths = _surviving_depths(dist.n, D)
    if len(depths) == 0:
        return INFEASIBLE_COST
    return _min_cost(depths, dist.weights)


def _min_cost(depths: np.ndarray, weights: Sequence):
    if all(type(w) is int for w in weights):
        costs = depths @ np.asarray(weights, dtype=object)
        return int(min(costs))
    return float((depths @ np.asarray(weights, dtype=float)).min())


def brute_prefix(dist, D: int):
    """Optimal D-limited prefix cost by enumerating tree shapes.

    For a fixed shape the best symbol placement puts the heaviest weights on
    the shallowest leaves, so each shape is scored once.
    """
    dist = _as_dist(dist)
    if dist.n > PREFIX_CAP:
        raise TooLarge(f"brute_prefix supports n <= {PREFIX_CAP}")
    depths = _surviving_depths(dist.n, D)
    if len(depths) == 0:
        return INFEASIBLE_COST
    depths = -np.sort(-depths, axis=1)
    depths = np.unique(depths, axis=0)
    return _min_cost(depths, sorted(dist.weights))


def brute_feasible(lengths: Iterable[int], D: int) -> bool:
    """Whether some prefix code has exactly these lengths and at most D ones per word."""
    lengths = list(lengths)
    if len(lengths) > FEASIBLE_N_CAP or max(lengths, default=0) > FEASIBLE_L_CAP:
        raise TooLarge(
            f"brute_feasible supports n <= {FEASIBLE_N_CAP}, L <= {FEASIBLE_L_CAP}"
        )
    if not lengths:
        return True
    if min(lengths) < 1:
        raise ValueError("lengths must be positive")
    return _fits(tuple(sorted(Counter(lengths).items())), D)


def _splits(items: tuple[tuple[int, int], ...]):
    """All ways to divide a multiset (as sorted (value, count) pairs) in two."""
    if not items:
        yield (), ()
        return
    (value, count), rest = items[0], items[1:]
    for left_rest, right_rest in _splits(rest):
        for c in range(count + 1):
            left = ((value, c),) + left_rest if c else left_rest
            right = ((value, count - c),) + right_rest if count - c else right_rest
            yield left, right


@lru_cache(maxsize=None)
def _fits(items: tuple[tuple[int, int], ...], budget: int) -> bool:
    # items: multiset of remaining depths below the current node
    if not items:
        return True
    if items[0][0] == 0:
        return items == ((0, 1),)
    if sum(c / 2**v for v, c in items) > 1:
        return False
    below = tuple((v - 1, c) for v, c in items)
    for left, right in _splits(below):
        if right and budget == 0:
            continue
        if _fits(left, budget) and _fits(right, budget - 1):
            return True
    return False


def full_length_multisets(n: int) -> list[tuple[int, ...]]:
    """Every multiset of leaf depths of a full binary tree with ``n`` leaves.

    Sorted ascending tuples, each listed once.
    """
    return sorted(_full_multisets(n))


@lru_cache(maxsize=None)
def _full_multisets(n: int) -> frozenset:
    if n == 1:
        return frozenset({(0,)})
    out = set()
    for a in range(1, n // 2 + 1):
        for left in _full_multisets(a):
            for right in _full_multisets(n - a):
                out.add(tuple(sorted(d + 1 for d in left + right)))
    return frozenset(out)


def huffman(dist) -> int | float:
    """Cost of an unconstrained optimal prefix code (greedy pairwise merging)."""
    dist = _as_dist(dist)
    heap = list(dist.weights)
    heapq.heapify(heap)
    total = 0
    while len(heap) > 1:
        merged = heapq.heappop(heap) + heapq.heappop(heap)
        total += merged
        heapq.heappush(heap, merged)
    return total
