import random

import pytest
from hypothesis import given, settings, strategies as st

from boundedones import oracle
from boundedones.core import Infeasible, average_cost, validate_distribution
from boundedones.dp import (
    INFEASIBLE,
    cost_table_ky,
    cost_table_naive,
    optimal_alphabetic,
    reconstruct_tree,
)
from boundedones.verify import quadrangle_violation, root_monotonicity_violation

solvers = pytest.mark.parametrize("solve", [cost_table_naive, cost_table_ky])


@solvers
def test_two_symbols(solve):
    assert solve([4, 9], 1).cost(0, 1, 1) == 13
    assert solve([4, 9], 0).cost(0, 1, 0) is INFEASIBLE


@solvers
def test_three_symbols(solve):
    # the two ordered 3-leaf trees: lengths (2,2,1) with one 1 per path at most,
    # and (1,2,2) whose last leaf needs two
    assert solve([5, 3, 2], 1).cost(0, 2, 1) == 2 * 5 + 2 * 3 + 1 * 2 == 18
    assert solve([5, 3, 2], 2).cost(0, 2, 2) == 1 * 5 + 2 * 3 + 2 * 2 == 15


@solvers
def test_single_symbol(solve):
    t = solve([3], 0)
    assert t.cost(0, 0, 0) == 0
    assert t.candidates == 0


def test_uniform_four_with_one_right_edge():
    assert cost_table_ky([1, 1, 1, 1], 1).cost(0, 3, 1) == 9


def test_infeasible_sorts_above_numbers():
    assert INFEASIBLE > 10**100
    assert not INFEASIBLE < 0
    assert max([3, INFEASIBLE, 7]) is INFEASIBLE
    with pytest.raises(TypeError):
        INFEASIBLE + 1


def test_table_layout_invariants():
    table = cost_table_ky([3, 1, 4, 1, 5, 9, 2], 3)
    n = table.n
    for i in range(n):
        for w in range(4):
            assert table.cost(i, i, w) == 0
        for j in range(i + 1, n):
            assert table.cost(i, j, 0) is INFEASIBLE
            for w in range(1, 4):
                assert table.cost(i, j, w) is not INFEASIBLE
                assert i < table.split(i, j, w) <= j
                if w > 1:
                    assert table.cost(i, j, w) <= table.cost(i, j, w - 1)
    with pytest.raises(IndexError):
        table.cost(3, 2, 1)


def test_split_is_largest_minimiser():
    # uniform weights give many ties
    table = cost_table_naive([1] * 6, 3)
    c = table.costs
    for w in range(1, 4):
        for i in range(6):
            for j in range(i + 1, 6):
                values = {
                    k: c[w][i][k - 1] + c[w - 1][k][j]
                    for k in range(i + 1, j + 1)
                    if c[w - 1][k][j] is not None
                }
                best = min(values.values())
                assert table.split(i, j, w) == max(k for k, v in values.items() if v == best)


def test_reconstruct_examples():
    assert reconstruct_tree(cost_table_ky([1, 1], 1)).codewords() == ("0", "1")
    assert reconstruct_tree(cost_table_ky([5, 3, 2], 1)).codewords() == ("00", "01", "1")
    assert reconstruct_tree(cost_table_ky([5, 3, 2], 2)).codewords() == ("0", "10", "11")


def test_reconstruct_infeasible():
    with pytest.raises(Infeasible):
        reconstruct_tree(cost_table_ky([1, 2], 0))


def test_optimal_alphabetic_examples():
    book, cost = optimal_alphabetic([5, 3, 2], 1)
    assert book.codewords == ("00", "01", "1") and cost == 18
    book, cost = optimal_alphabetic([1], 4)
    assert book.codewords == ("",) and cost == 0
    with pytest.raises(Infeasible):
        optimal_alphabetic([5, 3, 2], 0)


def test_deep_tree_reconstructs_without_recursion():
    # one right edge per path forces a comb of depth n - 1
    book, cost = optimal_alphabetic([1] * 1500, 1)
    assert max(book.lengths) == 1499
    assert book.max_ones() == 1
    assert book.is_alphabetic()


weights_st = st.lists(st.integers(1, 20), min_size=1, max_size=14)


@settings(max_examples=150, deadline=None)
@given(weights_st, st.integers(1, 5))
def test_reconstructed_tree_properties(weights, D):
    dist = validate_distribution(weights)
    table = cost_table_ky(dist, D)
    tree = reconstruct_tree(table)
    book, cost = optimal_alphabetic(dist, D)
    assert tree.is_full()
    assert [s for s, _ in tree.leaves()] == list(range(len(weights)))
    assert tree.max_right_edges() <= D
    assert book.is_alphabetic() and book.is_prefix_free()
    assert average_cost(book, dist).raw == table.optimum == cost


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=8), st.integers(0, 4))
def test_matches_brute_force(weights, D):
    expected = oracle.brute_alphabetic(weights, D)
    got = cost_table_naive(weights, D).optimum
    assert (None if got is INFEASIBLE else got) == expected


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 100), min_size=1, max_size=40), st.integers(0, 8))
def test_naive_and_ky_tables_identical(weights, D):
    a, b = cost_table_naive(weights, D), cost_table_ky(weights, D)
    assert a.first_difference(b) is None


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=12), st.integers(0, 5))
def test_quadrangle_and_root_monotonicity(weights, D):
    table = cost_table_ky(weights, D)
    assert quadrangle_violation(table) is None
    assert root_monotonicity_violation(table) is None


def test_quadrangle_sampled_on_larger_table():
    table = cost_table_ky([random.Random(5).randint(1, 50) for _ in range(40)], 4)
    assert quadrangle_violation(table, rng=random.Random(1)) is None


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=9))
def test_budget_monotone_and_saturates(weights):
    n = len(weights)
    table = cost_table_ky(weights, n + 1)
    top = [table.cost(0, n - 1, w) for w in range(n + 2)]
    for a, b in zip(top[1:], top[2:]):
        assert b <= a
    assert top[n - 1] == top[n] == top[n + 1]
    assert top[max(n - 1, 0)] == oracle.brute_alphabetic(weights, n - 1)


def test_ky_examines_fewer_candidates():
    rng = random.Random(2)
    weights = [rng.randint(1, 1000) for _ in range(120)]
    naive, ky = cost_table_naive(weights, 4), cost_table_ky(weights, 4)
    # naive scans j - i splits for every interval and layer
    assert naive.candidates == 4 * sum(j - i for i in range(120) for j in range(i, 120))
    assert ky.candidates < naive.candidates / 10


def test_two_layer_mode_keeps_splits():
    weights = [3, 1, 4, 1, 5, 9, 2, 6]
    full = cost_table_ky(weights, 5)
    lean = cost_table_ky(weights, 5, keep_all_costs=False)
    assert lean.splits == full.splits
    assert lean.optimum == full.optimum
    with pytest.raises(LookupError):
        lean.cost(0, 3, 1)
    assert reconstruct_tree(lean).codewords() == reconstruct_tree(full).codewords()


def test_float_mode_agrees():
    weights = [0.1, 0.25, 0.05, 0.3, 0.3]
    a, b = cost_table_naive(weights, 2), cost_table_ky(weights, 2)
    assert a.first_difference(b) is None
    assert a.optimum == pytest.approx(oracle.brute_alphabetic(weights, 2))


def test_huge_integer_weights_stay_exact():
    weights = [10**30 + k for k in range(6)]
    a, b = cost_table_naive(weights, 3), cost_table_ky(weights, 3)
    assert a.first_difference(b) is None
    assert a.optimum == oracle.brute_alphabetic(weights, 3)
