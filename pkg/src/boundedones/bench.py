"""Timing and work counters for the two table solvers."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np

from .dp import cost_table_ky, cost_table_naive

__all__ = ["BenchRow", "random_weights", "run_bench", "rows_to_csv", "growth_exponent"]

FIELDS = ("n", "D", "algo", "seed", "seconds", "candidates", "cost")


@dataclass
class BenchRow:
    n: int
    D: int
    algo: str
    seed: int
    seconds: float
    candidates: int
    cost: object


def random_weights(n: int, seed: int, high: int = 1000) -> list[int]:
    rng = np.random.default_rng([seed, n])
    return [int(x) for x in rng.integers(1, high + 1, size=n)]


def run_bench(sizes: Iterable[int], D: int, seed: int = 0) -> list[BenchRow]:
    """Solve one random instance per size with both solvers.

    Raises AssertionError if the two tables differ anywhere.
    """
    rows = []
    for n in sizes:
        weights = random_weights(n, seed)
        t0 = time.perf_counter()
        naive = cost_table_naive(weights, D)
        t1 = time.perf_counter()
        ky = cost_table_ky(weights, D)
        t2 = time.perf_counter()
        diff = naive.first_difference(ky)
        if diff is not None:
            raise AssertionError(f"tables differ for n={n}, D={D}, seed={seed}: {diff}")
        cost = naive.cost(0, n - 1, D)
        rows.append(BenchRow(n, D, "naive", seed, t1 - t0, naive.candidates, cost))
        rows.append(BenchRow(n, D, "ky", seed, t2 - t1, ky.candidates, cost))
    return rows


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        record = asdict(row)
        record["seconds"] = f"{row.seconds:.6f}"
        record["cost"] = str(row.cost)
        writer.writerow(record)
    return buf.getvalue()


def growth_exponent(rows: Sequence[BenchRow], algo: str) -> float:
    """Least-squares slope of log(candidates) against log(n)."""
    pts = [(r.n, r.candidates) for r in rows if r.algo == algo]
    x = np.log([n for n, _ in pts])
    y = np.log([c for _, c in pts])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
