"""Greedy reducible secant indices of Veronese varieties.

The count after adding the first ``r`` monomials of the lex segment to the
pure-power ideal is the term at index ``N - n - 1 - r``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .monomials import (
    BoxIdeal,
    LexSegment,
    Monomial,
    box_cells,
    dehomogenize,
    lex_degree_d,
    quotient_dim,
)
from .search import NodeBudget, SearchBudgetExceeded, enumerate_count_sequences
from .sequences import IndexSequence


@dataclass(frozen=True)
class VeroneseInstance:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("need n >= 1 and d >= 1")

    @property
    def N(self) -> int:
        return comb(self.n + self.d, self.n)

    @property
    def codim(self) -> int:
        return self.N - 1 - self.n

    @property
    def degree(self) -> int:
        return self.d**self.n

    @property
    def reducibility(self) -> int:
        return self.d

    @property
    def mu(self) -> int:
        return self.n * self.d

    @property
    def segment_cap(self) -> int:
        """Number of non-pure-power degree-d monomials in n+1 variables."""
        return self.N - self.n - 1


def lex_additions(inst: VeroneseInstance) -> list[Monomial]:
    """The full lex segment, dehomogenized, in the order it is added."""
    return LexSegment(inst.n + 1, inst.d, inst.segment_cap).dehomogenized()


def rlg_veronese(inst: VeroneseInstance) -> IndexSequence:
    cells = box_cells(inst.n, inst.d)
    alive = np.ones(len(cells), dtype=bool)
    counts = [int(alive.sum())]
    for m in lex_additions(inst):
        alive &= ~np.all(cells >= np.asarray(m.exponents, dtype=np.int64), axis=1)
        counts.append(int(alive.sum()))
    return IndexSequence.from_descending(counts)


def quotient_dims_along(inst: VeroneseInstance, additions) -> list[int]:
    """Quotient dimensions after each prefix of ``additions`` (starting at ``d**n``)."""
    ideal = BoxIdeal(inst.n, inst.d)
    out = [quotient_dim(ideal)]
    for m in additions:
        ideal = ideal.with_extra(m)
        out.append(quotient_dim(ideal))
    return out


@dataclass
class VeroneseOracleResult:
    termwise: IndexSequence
    lexmax: IndexSequence
    nodes: int


def _valid_additions(inst: VeroneseInstance) -> list[tuple[int, ...]]:
    if inst.segment_cap <= 0:
        return []
    return [dehomogenize(m).exponents for m in lex_degree_d(inst.n + 1, inst.d, True)]


def rlg_veronese_oracle(
    inst: VeroneseInstance, max_nodes: int = 2_000_000
) -> VeroneseOracleResult:
    """Brute force over all subsets and all orderings of valid additions.

    States are explicit sets of surviving box cells; no lex structure is used.
    (a) termwise maximum of the surviving count over every ``r``-subset;
    (b) the top-down lexicographic maximum over every addition order in which
    each addition removes at least one cell.
    """
    budget = NodeBudget(max_nodes)
    gens = _valid_additions(inst)
    k = len(gens)
    if 2**k > max_nodes:
        raise SearchBudgetExceeded(
            f"{2**k} subsets exceed the node budget of {max_nodes}"
        )
    box = frozenset(tuple(int(x) for x in c) for c in box_cells(inst.n, inst.d))

    def kill(state, g):
        return frozenset(c for c in state if not all(a >= b for a, b in zip(c, g)))

    # (a): subsets, enumerated by include/exclude with the surviving set carried along
    best = [0] * (k + 1)

    def subsets(i, state, r):
        budget.tick()
        best[r] = max(best[r], len(state))
        for j in range(i, k):
            subsets(j + 1, kill(state, gens[j]), r + 1)

    subsets(0, box, 0)

    # (b): all orderings with strict decrease
    def children(state):
        for g in gens:
            nxt = kill(state, g)
            if len(nxt) < len(state):
                yield nxt

    seqs = enumerate_count_sequences(box, children, len, k, budget=budget)
    if not seqs:
        raise ValueError("no strictly decreasing addition order of full length")
    top = max(seqs)
    termwise = IndexSequence(tuple(reversed(best)))
    lexmax = IndexSequence.from_descending((len(box),) + top)
    return VeroneseOracleResult(termwise, lexmax, budget.nodes)


def n2_closed_form(d: int) -> IndexSequence:
    """Conjectural closed form of the plane-curve sequence for ``d >= 3``."""
    if d < 3:
        raise ValueError("closed form needs d >= 3")
    steps: list[int] = []
    for g in range(d - 1, 2, -1):
        steps += [g] + [1] * (d - g)
    steps += [2] + [1] * (3 * d - 3)
    b = [d * d]
    for s in steps:
        b.append(b[-1] - s)
    N = comb(d + 2, 2)
    assert len(steps) == N - 3 and len(b) == N - 2
    return IndexSequence.from_descending(b)
