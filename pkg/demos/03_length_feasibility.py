"""Which codeword lengths can be realised with at most D ones per word?

The level test walks from the longest length up, counting free nodes at
each level and the nodes already blocked by longer codewords below.
"""
# %%
from boundedones import build_from_lengths, check_feasibility
from boundedones.oracle import brute_feasible

lengths = [4, 2, 3, 4, 3, 3, 3]
report = check_feasibility(lengths, D=2)
print(report.verdict)
for row in report.rows:
    print(f"level {row.j}: need {row.count}, capacity {row.capacity}, "
          f"blocked below {row.blocked_next}, bound {row.bound}, slack {row.slack}")

# %% Leftmost construction: longest words first, always the leftmost free node.
book = build_from_lengths(lengths, D=2)
print(book.codewords)

# %% On full length sets (Kraft sum 1) the level test is exact. On non-full
# sets it can pass while no code exists, so small cases are worth a search.
for lengths, D in [([2, 2, 2, 2], 1), ([1, 2, 3, 3], 1), ([2, 2, 2], 1)]:
    print(lengths, D, check_feasibility(lengths, D).verdict, "search:", brute_feasible(lengths, D))

# %% A set where the level test says yes but exhaustive search says no.
tricky = [1] + [4] * 8
print(tricky, check_feasibility(tricky, 2).verdict, "search:", brute_feasible(tricky, 2))
