import pytest

from secant_indices.sequences import IndexSequence
from secant_indices.monomials import Monomial
from secant_indices.search import SearchBudgetExceeded
from secant_indices.veronese import (
    VeroneseInstance,
    lex_additions,
    n2_closed_form,
    quotient_dims_along,
    rlg_veronese,
    rlg_veronese_oracle,
)


def test_instance_numbers():
    inst = VeroneseInstance(2, 3)
    assert (inst.N, inst.codim, inst.degree, inst.mu) == (10, 7, 9, 6)


def test_plane_conics_by_hand():
    # box {0,1}^2, additions x0*x1, x0, x1 -> 4, 3, 2, 1
    assert lex_additions(VeroneseInstance(2, 2)) == [
        Monomial((1, 1)), Monomial((1, 0)), Monomial((0, 1))
    ]
    assert rlg_veronese(VeroneseInstance(2, 2)).terms == (1, 2, 3, 4)


@pytest.mark.parametrize("d", range(1, 7))
def test_rational_normal_curve(d):
    assert rlg_veronese(VeroneseInstance(1, d)).terms == tuple(range(1, d + 1))


@pytest.mark.parametrize("nd", [(2, 3), (2, 4), (3, 2), (3, 3)])
def test_incremental_count_matches_ideal_count(nd):
    inst = VeroneseInstance(*nd)
    dims = quotient_dims_along(inst, lex_additions(inst))
    assert tuple(reversed(dims)) == rlg_veronese(inst).terms


@pytest.mark.parametrize("nd", [(1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 2)])
def test_oracle_agrees(nd):
    inst = VeroneseInstance(*nd)
    seq = rlg_veronese(inst)
    orc = rlg_veronese_oracle(inst)
    assert orc.termwise == seq
    assert orc.lexmax == seq


def test_oracle_refuses_large():
    with pytest.raises(SearchBudgetExceeded):
        rlg_veronese_oracle(VeroneseInstance(3, 4), max_nodes=10**6)


def test_closed_form_small():
    assert n2_closed_form(3) == IndexSequence((1, 2, 3, 4, 5, 6, 7, 9))
    with pytest.raises(ValueError):
        n2_closed_form(2)
