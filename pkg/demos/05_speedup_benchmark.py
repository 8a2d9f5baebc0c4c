"""Naive cubic scan versus the narrowed split search.

Wall time depends on the machine, so we compare how the number of split
candidates grows with n instead.
"""
# %%
from boundedones.bench import growth_exponent, rows_to_csv, run_bench

rows = run_bench([32, 64, 128, 256], D=4, seed=0)
print(rows_to_csv(rows))

# %% Slope of log(candidates) against log(n): about 3 for naive, about 2 for the narrowed search.
for algo in ("naive", "ky"):
    print(algo, round(growth_exponent(rows, algo), 3))
