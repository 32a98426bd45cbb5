from fractions import Fraction

import pytest

from secant_indices import pointset as ps
from secant_indices.sequences import Order, compare_total


def test_bareiss_rank():
    assert ps.bareiss_rank([[1, 2], [2, 4]]) == 1
    assert ps.bareiss_rank([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2
    assert ps.bareiss_rank([[2, 3, 5], [7, 11, 13], [17, 19, 23]]) == 3


def test_q2_example():
    cfg = ps.q2_example()
    assert ps.secant_sequence(cfg).terms == (1, 3, 5, 8)
    res = ps.chain_search(cfg)
    assert res.sequence.terms == (1, 2, 5, 8)
    assert ps.chain_counts(cfg, res.chain) == (1, 2, 5, 8)
    assert compare_total(res.sequence, ps.secant_sequence(cfg)) is Order.LESS


def test_q2_conditions_catch_collinear_plane_points():
    line, plane = ps._q2_points()
    plane[2] = (1, 1, 0, 0)  # on the line through q1, q2
    cfg = ps.PointConfig(3, tuple(line + plane))
    with pytest.raises(ps.InvalidConfiguration, match="collinear"):
        ps.verify_q2_conditions(cfg)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_general_position_sequences_match(n):
    cfg = ps.general_position(n)
    expected = tuple(range(1, n + 2))
    assert ps.secant_sequence(cfg).terms == ps.chain_sequence(cfg).terms == expected


def test_grid():
    cfg = ps.grid_3x3()
    assert ps.secant_sequence(cfg).terms == (1, 3, 9)
    assert ps.chain_sequence(cfg).terms == (1, 3, 9)


def test_flats_of_grid():
    lat = ps.flats(ps.grid_3x3())
    # 8 lines with three points, plus the pairs not on such a line
    lines = lat.by_rank[2]
    assert sum(len(f) == 3 for f in lines) == 8
    assert len(lines) == 8 + (36 - 8 * 3)


def test_invalid_configs():
    with pytest.raises(ps.InvalidConfiguration):
        ps.PointConfig(2, ((0, 0, 0),))
    with pytest.raises(ps.InvalidConfiguration):
        ps.PointConfig(2, ((1, 2, 3), (2, 4, 6)))
    with pytest.raises(ps.InvalidConfiguration):
        ps.PointConfig(2, ((1, 2),))


def test_record_round_trip():
    cfg = ps.PointConfig(1, ((Fraction(1, 2), 1), (1, 0)))
    again = ps.PointConfig.from_record(cfg.to_record())
    assert again.points == cfg.points
