import itertools
from math import comb

import pytest

from secant_indices.search import SearchBudgetExceeded
from secant_indices.segre import (
    Cut,
    CutState,
    SegreInstance,
    apply_cut,
    bipartitions,
    full_state_cut_sizes,
    last_gap,
    rlg_segre_oracle,
    solve_segre,
)


def test_cut_rule_by_hand():
    # n = m = 1: sides {1} and {2}; cut (1, 2) drops the side {2}
    state = apply_cut(CutState.initial(1, 1), Cut(1, 2))
    assert state.survivors() == [frozenset({1})]
    with pytest.raises(ValueError):
        Cut(3, 3)
    with pytest.raises(ValueError):
        apply_cut(CutState.initial(1, 1), Cut(1, 5))


def test_bipartitions_colex():
    assert bipartitions(2, 1) == (frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3}))


@pytest.mark.parametrize("n", range(1, 6))
def test_line_factor(n):
    assert solve_segre(SegreInstance(n, 1)).sequence.terms == tuple(range(1, n + 2))


@pytest.mark.parametrize("nm", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_oracle_agrees(nm):
    inst = SegreInstance(*nm)
    assert rlg_segre_oracle(inst).lexmax == solve_segre(inst).sequence


def test_symmetry_in_factors():
    assert solve_segre(SegreInstance(3, 2)).sequence == solve_segre(SegreInstance(2, 3)).sequence


def test_trace_replays():
    inst = SegreInstance(3, 2)
    res = solve_segre(inst)
    state = CutState.initial(3, 2)
    for cut in res.cuts:
        state = apply_cut(state, cut)
    assert state.count == res.sequence[0] == 1
    assert res.trace_lines()[0].startswith("cut ")


def test_budget_refusal():
    with pytest.raises(SearchBudgetExceeded):
        solve_segre(SegreInstance(3, 3), max_nodes=5)


def test_parallel_matches_serial():
    inst = SegreInstance(3, 2)
    assert solve_segre(inst, workers=2).sequence == solve_segre(inst).sequence


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 8) for m in range(1, 8) if n + m <= 8])
def test_full_state_cuts_uniform(n, m):
    sizes = set(full_state_cut_sizes(n, m).values())
    # sides containing b and missing a
    assert sizes == {comb(n + m - 2, n - 1)}


def test_last_gap_formula():
    assert [last_gap(SegreInstance(*p)) for p in [(2, 2), (3, 3), (4, 3)]] == [2, 6, 10]
