"""Optimal prefix codes under a ones budget, and where the budget starts to bind."""

from __future__ import annotations

from dataclasses import dataclass

from .core import CodeBook, Distribution, validate_distribution
from .dp import cost_table_ky, optimal_alphabetic
from .oracle import huffman

__all__ = [
    "PrefixSolution",
    "optimal_prefix",
    "prefix_binding_threshold",
    "alphabetic_binding_threshold",
]


@dataclass(frozen=True)
class PrefixSolution:
    """Prefix code in original symbol order plus the sorted view it came from.

    ``permutation[r]`` is the original index of the symbol with rank ``r``
    in the stable ascending sort of the weights; ``sorted_book`` is the
    alphabetic code over that sorted order.
    """

    book: CodeBook
    cost: object
    permutation: tuple[int, ...]
    sorted_book: CodeBook


def optimal_prefix(dist, D: int) -> PrefixSolution:
    """Minimum-cost prefix code with at most ``D`` ones per codeword.

    Light symbols go to the left of an optimal alphabetic code on the
    ascending-sorted weights; the codewords are then mapped back to the
    input order. Raises :class:`~boundedones.core.Infeasible` for
    ``n >= 2, D = 0``.
    """
    if not isinstance(dist, Distribution):
        dist = validate_distribution(dist)
    order = tuple(sorted(range(dist.n), key=lambda s: dist.weights[s]))
    sorted_book, cost = optimal_alphabetic(dist.permuted(order), D)
    words = [None] * dist.n
    for rank, s in enumerate(order):
        words[s] = sorted_book.codewords[rank]
    book = CodeBook(tuple(words), mode="prefix", D=D, labels=dist.labels)
    return PrefixSolution(book, cost, order, sorted_book)


def prefix_binding_threshold(dist) -> int:
    """Smallest ``D`` whose constrained prefix optimum equals the Huffman cost.

    Scans ``D = 1, 2, ...``; also checks on the way that the cost never goes
    up as the budget grows.
    """
    if not isinstance(dist, Distribution):
        dist = validate_distribution(dist)
    if dist.n == 1:
        return 0
    target = huffman(dist)
    previous = None
    for D in range(1, dist.n):
        cost = optimal_prefix(dist, D).cost
        if previous is not None and cost > previous:
            raise RuntimeError(f"cost rose from {previous} to {cost} at D={D}")
        if cost == target:
            return D
        previous = cost
    raise RuntimeError(f"no budget up to n-1 reaches the Huffman cost {target}")


def alphabetic_binding_threshold(dist) -> int:
    """Smallest ``D`` whose alphabetic optimum equals the unconstrained one (``D = n - 1``)."""
    if not isinstance(dist, Distribution):
        dist = validate_distribution(dist)
    n = dist.n
    if n == 1:
        return 0
    table = cost_table_ky(dist, n - 1)
    target = table.cost(0, n - 1, n - 1)
    previous = None
    for D in range(1, n):
        cost = table.cost(0, n - 1, D)
        if previous is not None and cost > previous:
            raise RuntimeError(f"cost rose from {previous} to {cost} at D={D}")
        if cost == target:
            return D
        previous = cost
    raise AssertionError("unreachable: D = n - 1 matches by definition")
