"""Greedy reducible secant index sequences of Veronese and Segre varieties,
with the combinatorial games and point-configuration tools behind them."""
from .sequences import (
    IndexSequence,
    Order,
    compare_termwise,
    compare_total,
    gaps,
    parse_bars,
    render_with_bars,
)
from .search import DEFAULT_MAX_NODES, SearchBudgetExceeded
from .monomials import BoxIdeal, Monomial, quotient_dim, quotient_dim_inclusion_exclusion
from .veronese import VeroneseInstance, n2_closed_form, rlg_veronese, rlg_veronese_oracle
from .segre import SegreInstance, last_gap, rlg_segre, rlg_segre_oracle, solve_segre
from .poset import PosetInstance, solve_exact, solve_greedy
from .pointset import PointConfig, chain_sequence, secant_sequence

__all__ = [
    "IndexSequence", "Order", "compare_termwise", "compare_total", "gaps",
    "parse_bars", "render_with_bars", "DEFAULT_MAX_NODES", "SearchBudgetExceeded",
    "BoxIdeal", "Monomial", "quotient_dim", "quotient_dim_inclusion_exclusion",
    "VeroneseInstance", "n2_closed_form", "rlg_veronese", "rlg_veronese_oracle",
    "SegreInstance", "last_gap", "rlg_segre", "rlg_segre_oracle", "solve_segre",
    "PosetInstance", "solve_exact", "solve_greedy",
    "PointConfig", "chain_sequence", "secant_sequence",
]
