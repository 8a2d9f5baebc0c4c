"""Optimal alphabetic codes with at most D ones per codeword.

``C(i, j, w)`` is the least weighted depth of an ordered tree over symbols
``i..j`` (0-based, inclusive) whose root-to-leaf paths take at most ``w``
right edges. A split ``k`` in ``(i, j]`` puts ``i..k-1`` on the left and
``k..j`` on the right, where one unit of budget is spent:

    C(i, j, w) = c(i, j) + min_k C(i, k-1, w) + C(k, j, w-1)

with ``C(i, i, w) = 0`` and ``C(i, j, 0)`` infeasible for ``i < j``. Ties are
broken toward the largest ``k``; the Knuth-Yao solver depends on that.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .core import CodeBook, CodeTree, Distribution, Infeasible, validate_distribution

__all__ = [
    "INFEASIBLE",
    "CostTable",
    "cost_table_naive",
    "cost_table_ky",
    "cost_table",
    "reconstruct_tree",
    "optimal_alphabetic",
]


@functools.total_ordering
class _Infeasible:
    """Cost of an impossible subproblem; sorts above every finite cost."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("INFEASIBLE")

    def __repr__(self):
        return "INFEASIBLE"


INFEASIBLE = _Infeasible()


@dataclass(eq=False)
class CostTable:
    """Costs and chosen splits for every interval and budget.

    ``costs[w][i][j]`` is None when infeasible (or when the layer was
    discarded to save memory); ``splits[w][i][j]`` is the chosen ``k``.
    Entries with ``i > j`` are unused. ``candidates`` counts split indices
    examined, for benchmarking.
    """

    n: int
    D: int
    costs: list
    splits: list
    candidates: int = 0
    algorithm: str = ""

    def _check(self, i: int, j: int, w: int) -> None:
        if not (0 <= i <= j < self.n and 0 <= w <= self.D):
            raise IndexError(f"no entry ({i}, {j}, {w}) for n={self.n}, D={self.D}")

    def cost(self, i: int, j: int, w: int):
        self._check(i, j, w)
        layer = self.costs[w]
        if layer is None:
            raise LookupError(f"cost layer {w} was not kept")
        value = layer[i][j]
        return INFEASIBLE if value is None else value

    def split(self, i: int, j: int, w: int) -> int | None:
        self._check(i, j, w)
        return self.splits[w][i][j]

    @property
    def optimum(self):
        return self.cost(0, self.n - 1, self.D)

    def same_entries(self, other: "CostTable") -> bool:
        """Entry-wise equality of both tables over the used triangle."""
        if (self.n, self.D) != (other.n, other.D):
            return False
        return self.first_difference(other) is None

    def first_difference(self, other: "CostTable"):
        """First ``(kind, i, j, w, mine, theirs)`` that differs, or None."""
        for w in range(self.D + 1):
            for i in range(self.n):
                for j in range(i, self.n):
                    for kind, a, b in (
                        ("cost", self.costs, other.costs),
                        ("split", self.splits, other.splits),
                    ):
                        if a[w] is None or b[w] is None:
                            continue
                        if a[w][i][j] != b[w][i][j]:
                            return kind, i, j, w, a[w][i][j], b[w][i][j]
        return None


def _prepare(dist, D: int) -> tuple[Distribution, list]:
    if not isinstance(dist, Distribution):
        dist = validate_distribution(dist)
    if D < 0:
        raise ValueError("D must be >= 0")
    prefix = [0 if dist.exact else 0.0]
    for w in dist.weights:
        prefix.append(prefix[-1] + w)
    return dist, prefix


def _base_layers(n: int, D: int):
    costs = [[[None] * n for _ in range(n)] for _ in range(D + 1)]
    splits = [[[None] * n for _ in range(n)] for _ in range(D + 1)]
    for w in range(D + 1):
        for i in range(n):
            costs[w][i][i] = 0
            splits[w][i][i] = i
    return costs, splits


def cost_table_ky(dist, D: int, keep_all_costs: bool = True) -> CostTable:
    """Fill the table with the split search narrowed to ``[R(i,j-1,w), R(i+1,j,w)]``.

    Produces the same costs and splits as :func:`cost_table_naive` while
    examining O(n^2) split candidates per budget layer. With
    ``keep_all_costs=False`` only the last two cost layers are retained;
    splits are always kept because reconstruction needs them.
    """
    dist, prefix = _prepare(dist, D)
    n = dist.n
    costs, splits = _base_layers(n, D)
    examined = 0
    for w in range(1, D + 1):
        cw, cp, rw = costs[w], costs[w - 1], splits[w]
        for span in range(1, n):
            for i in range(n - span):
                j = i + span
                lo = max(rw[i][j - 1], i + 1)
                hi = min(rw[i + 1][j], j)
                row = cw[i]
                best = None
                arg = -1
                for k in range(lo, hi + 1):
                    right = cp[k][j]
                    if right is None:
                        continue
                    value = row[k - 1] + right
                    if best is None or value <= best:
                        best = value
                        arg = k
                examined += hi - lo + 1
                if best is None:
                    raise AssertionError(f"empty split range at ({i}, {j}, {w})")
                row[j] = (prefix[j + 1] - prefix[i]) + best
                rw[i][j] = arg
        if not keep_all_costs and w >= 2:
            costs[w - 2] = None
    return CostTable(n, D, costs, splits, examined, "ky")


def _dtype_for(dist: Distribution, prefix: list):
    if not dist.exact:
        return np.float64
    # largest possible cost is total weight times n - 1
    if prefix[-1] * max(dist.n, 1) < 2**62:
        return np.int64
    return object


def cost_table_naive(dist, D: int) -> CostTable:
    """Fill the table by scanning every split ``k`` in ``(i, j]``.

    The inner scan is vectorised with numpy but still touches all
    ``j - i`` candidates, so the work is cubic in ``n``.
    """
    dist, prefix = _prepare(dist, D)
    n = dist.n
    dtype = _dtype_for(dist, prefix)
    pre = np.array(prefix, dtype=dtype)
    costs, splits = _base_layers(n, D)
    examined = 0
    prev = None
    for w in range(1, D + 1):
        cur = np.zeros((n, n), dtype=dtype)
        rw = splits[w]
        for span in range(1, n):
            for i in range(n - span):
                j = i + span
                left = cur[i, i:j]
                if w == 1:
                    # only k = j leaves a single symbol under the budget-0 side
                    ks = np.array([j])
                    values = left[-1:] + 0
                else:
                    ks = None
                    values = left + prev[i + 1 : j + 1, j]
                examined += span
                pos = len(values) - 1 - int(np.argmin(values[::-1]))
                k = int(ks[pos]) if ks is not None else i + 1 + pos
                cur[i, j] = (pre[j + 1] - pre[i]) + values[pos]
                rw[i][j] = k
        layer = cur.tolist()
        for i in range(n):
            layer[i][:i] = [None] * i
        costs[w] = layer
        prev = cur
    return CostTable(n, D, costs, splits, examined, "naive")


def cost_table(dist, D: int, algorithm: str = "ky") -> CostTable:
    if algorithm == "ky":
        return cost_table_ky(dist, D)
    if algorithm == "naive":
        return cost_table_naive(dist, D)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def reconstruct_tree(table: CostTable) -> CodeTree:
    """Rebuild the optimal tree for all ``n`` symbols at budget ``D``."""
    n, D = table.n, table.D
    if n > 1 and table.splits[D][0][n - 1] is None:
        raise Infeasible(f"infeasible: D={D} with n>1")
    root = CodeTree()
    stack = [(root, 0, n - 1, D)]
    while stack:
        node, i, j, w = stack.pop()
        if i == j:
            node.symbol = i
            continue
        k = table.splits[w][i][j]
        node.left, node.right = CodeTree(), CodeTree()
        stack.append((node.left, i, k - 1, w))
        stack.append((node.right, k, j, w - 1))
    return root


def optimal_alphabetic(dist, D: int, algorithm: str = "ky"):
    """Best order-preserving code with at most ``D`` ones per codeword.

    Returns ``(codebook, raw_cost)``. Raises :class:`Infeasible` when
    ``n >= 2`` and ``D = 0``.
    """
    if not isinstance(dist, Distribution):
        dist = validate_distribution(dist)
    if dist.n > 1 and D == 0:
        raise Infeasible("infeasible: D=0 with n>1")
    table = cost_table(dist, D, algorithm)
    tree = reconstruct_tree(table)
    book = CodeBook(tree.codewords(), mode="alphabetic", D=D, labels=dist.labels)
    return book, table.optimum
