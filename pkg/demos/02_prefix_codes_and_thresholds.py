"""Dropping the order requirement: optimal prefix codes under the same budget.

Sort the weights ascending, solve the order-preserving problem, then map the
codewords back to the original symbols. Huffman coding is the unconstrained
reference point.
"""
# %%
import math

import numpy as np

from boundedones import (
    alphabetic_binding_threshold,
    optimal_prefix,
    prefix_binding_threshold,
)
from boundedones.oracle import huffman

weights = [1, 1, 1, 1]
for D in (1, 2):
    sol = optimal_prefix(weights, D)
    print(f"D={D}: {sol.book.codewords} cost={sol.cost}")
print("huffman:", huffman(weights))

# %% How many ones does an optimal code really need?
rng = np.random.default_rng(3)
for n in (4, 8, 16):
    ts = [prefix_binding_threshold(rng.integers(1, 1000, size=n).tolist()) for _ in range(50)]
    print(f"n={n:2d}: thresholds seen {sorted(set(ts))}, floor(log2 n) = {math.floor(math.log2(n))}")

# %% Order-preserving codes can need far more: a decreasing dyadic source
# forces a right-leaning comb where the last word is all ones.
for n in range(3, 9):
    w = [2 ** (n - 1 - k) for k in range(1, n)] + [1]
    print(n, w, "alphabetic threshold:", alphabetic_binding_threshold(w))
