"""Cross-checking the solvers against brute force.

The oracles enumerate every ordered tree shape, so they only reach small n.
That is enough to catch most mistakes in the dynamic programs.
"""
# %%
from boundedones import cost_table_ky, optimal_alphabetic, optimal_prefix
from boundedones.oracle import brute_alphabetic, brute_prefix, tree_shapes
from boundedones.verify import quadrangle_violation_full, root_monotonicity_violation, run_suites

depths, ones = tree_shapes(5)
print(f"{len(depths)} tree shapes with 5 leaves")

weights = [3, 1, 4, 1, 5, 9]
for D in range(1, 4):
    print(D, optimal_alphabetic(weights, D)[1], brute_alphabetic(weights, D),
          optimal_prefix(weights, D).cost, brute_prefix(weights, D))

# %% The tables satisfy the structure the fast solver relies on.
table = cost_table_ky([7, 2, 9, 4, 4, 1, 8, 3], D=3)
print("root monotonicity:", root_monotonicity_violation(table) or "ok")
print("quadrangle inequality:", quadrangle_violation_full(table) or "ok")

# %% A reduced run of the `boundedones verify` suites.
for result in run_suites(n_max=5, d_max=3, trials=10):
    print("PASS" if result.passed else "FAIL", result.name, result.cases)
