"""Cross-checks between the solvers and the brute-force oracles.

Each check returns None when it passes or a :class:`Counterexample`.
:func:`run_suites` strings them together for the ``verify`` command.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from . import oracle
import numpy as np

from .core import validate_distribution
from .dp import CostTable, cost_table_ky, cost_table_naive, optimal_alphabetic
from .kraft import FEASIBLE, INDETERMINATE, check_feasibility
from .prefix import optimal_prefix

__all__ = [
    "Counterexample",
    "SuiteResult",
    "root_monotonicity_violation",
    "quadrangle_violation",
    "quadrangle_violation_full",
    "table_difference",
    "alphabetic_mismatch",
    "prefix_mismatch",
    "full_multiset_mismatch",
    "run_suites",
]


@dataclass
class Counterexample:
    instance: dict
    expected: object
    got: object

    def __str__(self) -> str:
        parts = ", ".join(f"{k}={v}" for k, v in self.instance.items())
        return f"{parts}, expected={self.expected}, got={self.got}"


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failure: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None


def root_monotonicity_violation(table: CostTable) -> Counterexample | None:
    """Check ``R(i,j,w) <= R(i,j+1,w) <= R(i+1,j+1,w)`` for every ``w >= 1``."""
    n = table.n
    for w in range(1, table.D + 1):
        r = table.splits[w]
        for i in range(n - 1):
            for j in range(i, n - 1):
                a, b, c = r[i][j], r[i][j + 1], r[i + 1][j + 1]
                if not a <= b <= c:
                    return Counterexample(
                        {"check": "root monotonicity", "i": i, "j": j, "w": w},
                        "R(i,j,w) <= R(i,j+1,w) <= R(i+1,j+1,w)",
                        (a, b, c),
                    )
    return None


def _qi_violation(layer, w, i, i2, j, j2):
    a, b, c, d = layer[i][j], layer[i2][j2], layer[i][j2], layer[i2][j]
    if a is None or b is None or c is None or d is None:
        return None
    if a + b > c + d:
        return Counterexample(
            {"check": "quadrangle", "i": i, "i'": i2, "j": j, "j'": j2, "w": w},
            "C(i,j)+C(i',j') <= C(i,j')+C(i',j)",
            f"{a}+{b} > {c}+{d}",
        )
    return None


def quadrangle_violation(
    table: CostTable,
    exhaustive_limit: int = 12,
    samples: int = 2000,
    rng: random.Random | None = None,
) -> Counterexample | None:
    """Check ``C(i,j,w) + C(i',j',w) <= C(i,j',w) + C(i',j,w)`` for ``i<=i'<=j<=j'``.

    Quadruples with an infeasible entry are skipped. Tables with at most
    ``exhaustive_limit`` symbols are checked on every quadruple. Larger ones
    get every adjacent quadruple (``i' = i+1, j' = j+1``) plus ``samples``
    random quadruples per layer.
    """
    n = table.n
    for w in range(table.D + 1):
        layer = table.costs[w]
        if layer is None:
            continue
        if n <= exhaustive_limit:
            for i in range(n):
                for i2 in range(i, n):
                    for j in range(i2, n):
                        base = layer[i][j]
                        other = layer[i2][j]
                        if base is None or other is None:
                            continue
                        for j2 in range(j, n):
                            bad = _qi_violation(layer, w, i, i2, j, j2)
                            if bad is not None:
                                return bad
            continue
        rng = rng or random.Random(0)
        adjacent = ((i, i + 1, j, j + 1) for i in range(n - 1) for j in range(i + 1, n - 1))
        sampled = (tuple(sorted(rng.randrange(n) for _ in range(4))) for _ in range(samples))
        for q in itertools.chain(adjacent, sampled):
            bad = _qi_violation(layer, w, *q)
            if bad is not None:
                return bad
    return None


_SENTINEL = -(2**61)


def _layer_array(layer, n):
    """Layer as an int64/float64 array plus a mask of defined entries, or None
    when the values are too large for int64 arithmetic."""
    values = [[0 if v is None else v for v in row] for row in layer]
    flat = [v for row in values for v in row]
    if all(isinstance(v, int) for v in flat):
        if max(map(abs, flat), default=0) >= 2**58:
            return None
        arr = np.array(values, dtype=np.int64)
    else:
        arr = np.array(values, dtype=np.float64)
    mask = np.array([[v is not None for v in row] for row in layer], dtype=bool)
    idx = np.arange(n)
    mask &= idx[:, None] <= idx[None, :]
    return arr, mask


def quadrangle_violation_full(table: CostTable) -> Counterexample | None:
    """Every-quadruple quadrangle check, vectorised with numpy.

    A quadruple violates the inequality when
    ``(C(i,j) - C(i,j')) + (C(i',j') - C(i',j)) > 0``. The second bracket
    does not depend on ``i`` and is computed once per layer. Undefined
    entries are replaced by a large negative sentinel so they never count
    as violations. Falls back to :func:`quadrangle_violation` for integers
    too large for int64.
    """
    n = table.n
    idx = np.arange(n)
    order = (idx[:, None, None] <= idx[None, :, None]) & (idx[None, :, None] <= idx[None, None, :])
    for w in range(table.D + 1):
        layer = table.costs[w]
        if layer is None:
            continue
        packed = _layer_array(layer, n)
        if packed is None:
            return quadrangle_violation(table, exhaustive_limit=n)
        a, ok = packed
        sentinel = _SENTINEL if a.dtype == np.int64 else -np.inf
        # q[i2, j, j2] = C(i2,j2) - C(i2,j), defined when i2 <= j <= j2
        q = a[:, None, :] - a[:, :, None]
        q[~(order & ok[:, None, :] & ok[:, :, None])] = sentinel
        for i in range(n):
            p = a[i][:, None] - a[i][None, :]
            p[~(ok[i][:, None] & ok[i][None, :])] = sentinel
            bad = np.argwhere(q[i:] + p[None] > 0)
            if len(bad):
                i2, j, j2 = (int(x) for x in bad[0])
                return _qi_violation(layer, w, i, i + i2, j, j2)
    return None


def table_difference(dist, D: int, ky: CostTable | None = None) -> Counterexample | None:
    naive = cost_table_naive(dist, D)
    ky = ky if ky is not None else cost_table_ky(dist, D)
    diff = naive.first_difference(ky)
    if diff is None:
        return None
    kind, i, j, w, mine, theirs = diff
    return Counterexample(
        {"check": "naive/ky tables", "weights": list(_weights(dist)), "D": D,
         "entry": f"{kind}({i},{j},{w})"},
        mine,
        theirs,
    )


def _weights(dist):
    return getattr(dist, "weights", dist)


def alphabetic_mismatch(dist, D: int) -> Counterexample | None:
    dist = validate_distribution(dist)
    expected = oracle.brute_alphabetic(dist, D)
    if dist.n > 1 and D == 0:
        got = None
    else:
        book, got = optimal_alphabetic(dist, D)
        if not (book.is_prefix_free() and book.is_alphabetic() and book.max_ones() <= D):
            got = f"invalid codebook {book.codewords}"
    if got != expected:
        return Counterexample(
            {"check": "alphabetic vs brute force", "weights": list(dist.weights), "D": D},
            expected,
            got,
        )
    return None


def prefix_mismatch(dist, D: int) -> Counterexample | None:
    dist = validate_distribution(dist)
    expected = oracle.brute_prefix(dist, D)
    solution = optimal_prefix(dist, D)
    got = solution.cost
    book = solution.book
    if not (book.is_prefix_free() and book.max_ones() <= D):
        got = f"invalid codebook {book.codewords}"
    if got != expected:
        return Counterexample(
            {"check": "prefix vs brute force", "weights": list(dist.weights), "D": D},
            expected,
            got,
        )
    return None


def full_multiset_mismatch(lengths, D: int) -> Counterexample | None:
    """On a full multiset the level test must agree with exhaustive search."""
    verdict = check_feasibility(lengths, D).verdict
    truth = oracle.brute_feasible(lengths, D)
    if verdict == INDETERMINATE or (verdict == FEASIBLE) != truth:
        return Counterexample(
            {"check": "level test vs exhaustive search", "lengths": list(lengths), "D": D},
            "FEASIBLE" if truth else "INFEASIBLE",
            verdict,
        )
    return None


def _run(name: str, cases: Iterable, check: Callable) -> SuiteResult:
    result = SuiteResult(name)
    for args in cases:
        result.cases += 1
        bad = check(*args)
        if bad is not None:
            result.failure = bad
            break
    return result


def run_suites(
    n_max: int = 7,
    d_max: int = 4,
    weights: tuple[int, ...] = (1, 2, 3),
    trials: int = 20,
    seed: int = 0,
    perturb: bool = False,
) -> list[SuiteResult]:
    """Exhaustive small-instance checks plus ``trials`` random table comparisons.

    ``perturb`` corrupts one split entry of a fast-solver table so that the
    failure path can be exercised.
    """
    rng = random.Random(seed)
    small = [
        tuple(w)
        for n in range(1, n_max + 1)
        for w in itertools.product(weights, repeat=n)
    ]
    results = []

    results.append(
        _run(
            "alphabetic oracle equivalence",
            ((w, D) for w in small for D in range(d_max + 1)),
            alphabetic_mismatch,
        )
    )
    results.append(
        _run(
            "prefix oracle equivalence",
            ((w, D) for w in small if len(w) <= oracle.PREFIX_CAP for D in range(1, d_max + 1)),
            prefix_mismatch,
        )
    )

    random_cases = []
    for _ in range(trials):
        n = rng.randint(1, max(1, min(60, 8 * n_max)))
        D = rng.randint(0, min(8, d_max + 4))
        random_cases.append((tuple(rng.randint(1, 9) for _ in range(n)), D))

    def table_check(w, D):
        ky = cost_table_ky(w, D)
        if perturb and len(w) >= 3 and D >= 1:
            k = ky.splits[D][0][len(w) - 1]
            ky.splits[D][0][len(w) - 1] = k - 1 if k > 1 else k + 1
        return table_difference(w, D, ky)

    table_cases = [(w, d_max) for w in small if len(w) >= 2] + random_cases
    if perturb:
        table_cases.insert(0, ((3, 1, 2), max(1, d_max)))
    results.append(_run("naive/ky table identity", table_cases, table_check))

    def structure_check(w, D):
        table = cost_table_ky(w, D)
        return root_monotonicity_violation(table) or quadrangle_violation(table, rng=rng)

    results.append(
        _run(
            "root monotonicity and quadrangle inequality",
            [(w, d_max) for w in small] + random_cases,
            structure_check,
        )
    )

    full_cases = [
        (ms, D)
        for n in range(2, min(n_max, 8) + 1)
        for ms in oracle.full_length_multisets(n)
        for D in range(1, d_max + 1)
    ]
    results.append(_run("full-multiset level test agreement", full_cases, full_multiset_mismatch))
    return results
