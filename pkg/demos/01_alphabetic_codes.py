"""Optimal order-preserving codes when each codeword may contain at most D ones.

Think of a '1' as an expensive symbol on the wire (a long pulse, say). The
codewords must keep the symbols' order, be prefix-free, and contain at most
D ones each. We want the lowest average length.
"""
# %%
from boundedones import cost_table_ky, optimal_alphabetic

weights = [5, 3, 2]

# %% With one '1' allowed per word the best tree is a left comb.
book, cost = optimal_alphabetic(weights, D=1)
print("D=1:", book.codewords, "raw cost", cost)

# %% A bigger budget can only help; here D=2 already gives the unconstrained optimum.
for D in range(1, 4):
    book, cost = optimal_alphabetic(weights, D)
    print(f"D={D}: {book.codewords}  cost={cost}  max ones={book.max_ones()}")

# %% The whole table is available. Layer w holds C(i, j, w) for every interval.
table = cost_table_ky([4, 1, 1, 1, 4], D=2)
for w in range(table.D + 1):
    print(f"w={w}")
    for i in range(table.n):
        print("   ", [table.costs[w][i][j] if j >= i else "." for j in range(table.n)])

# %% Zero budget is infeasible as soon as two symbols must be told apart.
try:
    optimal_alphabetic(weights, D=0)
except ValueError as exc:
    print(type(exc).__name__, exc)
