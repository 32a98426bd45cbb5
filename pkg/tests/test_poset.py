import pytest

from secant_indices import poset as pg
from secant_indices.veronese import VeroneseInstance, rlg_veronese


def test_counterexample_plays():
    p = pg.counterexample()
    assert len(p.elements) == 9 and len(p.A) == 6
    assert pg.play(p, ["a^3", "a^2", "a", "c", "b"]) == (9, 6, 5, 4, 3, 1)
    assert pg.play(p, ["c", "b", "a^3", "a^2", "a"]) == (9, 8, 6, 3, 2, 1)
    # dominates the first play termwise
    assert pg.play(p, ["c", "a^3", "a^2", "a", "b"]) == (9, 8, 5, 4, 3, 1)


def test_counterexample_solvers():
    p = pg.counterexample()
    greedy = pg.solve_greedy(p)
    assert greedy.counts == (9, 8, 6, 3, 2, 1) and greedy.complete
    exact = pg.solve_exact(p)
    assert exact.termwise == (9, 8, 6, 4, 3, 1)
    assert pg.play(p, exact.witness) == exact.lexmax
    assert pg.verdict(greedy.counts, exact.termwise) == "beaten at position 4"


def test_illegal_picks():
    p = pg.counterexample()
    with pytest.raises(pg.IllegalPick):
        pg.play(p, ["a", "a^2"])
    with pytest.raises(pg.IllegalPick):
        pg.play(p, ["b^2"])


def test_axiom_violations_named():
    with pytest.raises(pg.InvalidPoset, match="antisymmetry"):
        pg.PosetInstance.from_relation(["x", "y"], ["x"], [("x", "y"), ("y", "x")])
    with pytest.raises(pg.InvalidPoset, match="transitivity"):
        pg.PosetInstance.from_relation(["x", "y", "z"], ["x"], [("x", "y"), ("y", "z")], kind="all")


def test_single_pick_instance():
    p = pg.PosetInstance.from_relation(["r", "s", "t"], ["r"], [("r", "s")])
    assert p.full_length == 0
    assert pg.solve_greedy(p).counts == (3,)
    assert pg.solve_exact(p).lexmax == (3,)


@pytest.mark.parametrize("nd", [(2, 2), (2, 3), (3, 2)])
def test_veronese_instances(nd):
    p = pg.load("builtin:veronese-%d-%d" % nd)
    expected = tuple(reversed(rlg_veronese(VeroneseInstance(*nd)).terms))
    exact = pg.solve_exact(p)
    assert exact.lexmax == expected
    assert pg.solve_greedy(p).counts == expected


def test_json_record(tmp_path):
    path = tmp_path / "p.json"
    path.write_text('{"elements": ["1", "a", "a^2"], "A": ["1", "a"], '
                    '"relation_kind": "divisibility-of-monomials"}')
    p = pg.load(str(path))
    assert pg.solve_greedy(p).counts == (3, 1)
