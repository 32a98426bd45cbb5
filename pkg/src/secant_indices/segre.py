"""Greedy reducible secant indices of Segre varieties via the cutting game.

The points of a maximal reduced section are the bipartitions ``(A, B)`` of
``{1, ..., n+m}`` with ``|A| = n``; a cut ``(a, b)`` keeps those with
``a in A`` or ``b in B``.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .search import (
    DEFAULT_MAX_NODES,
    Move,
    NodeBudget,
    SearchBudgetExceeded,
    enumerate_count_sequences,
    lexmax_removal,
)
from .sequences import IndexSequence, termwise_max


@dataclass(frozen=True)
class SegreInstance:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("need n >= 1 and m >= 1")

    @property
    def N(self) -> int:
        return (self.n + 1) * (self.m + 1) - 1

    @property
    def codim(self) -> int:
        return self.n * self.m

    @property
    def degree(self) -> int:
        return comb(self.n + self.m, self.n)

    @property
    def dim(self) -> int:
        return self.n + self.m

    @property
    def reducibility(self) -> int:
        return 2

    @property
    def mu(self) -> int:
        return 2 * self.dim


@dataclass(frozen=True)
class Cut:
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"cut needs distinct labels, got ({self.a}, {self.b})")


def colex_rank(subset) -> int:
    return sum(comb(s - 1, i + 1) for i, s in enumerate(sorted(subset)))


@lru_cache(maxsize=None)
def bipartitions(n: int, m: int) -> tuple[frozenset, ...]:
    """The ``A`` sides, indexed by colexicographic rank."""
    subsets = itertools.combinations(range(1, n + m + 1), n)
    return tuple(frozenset(s) for s in sorted(subsets, key=colex_rank))


@lru_cache(maxsize=None)
def cut_masks(n: int, m: int) -> dict[Cut, int]:
    """Bit mask of the bipartitions each cut removes (``b in A`` and ``a not in A``)."""
    sides = bipartitions(n, m)
    out = {}
    for a, b in itertools.permutations(range(1, n + m + 1), 2):
        mask = 0
        for i, A in enumerate(sides):
            if b in A and a not in A:
                mask |= 1 << i
        out[Cut(a, b)] = mask
    return out


@dataclass(frozen=True)
class CutState:
    n: int
    m: int
    alive: int
    history: tuple[Cut, ...] = ()

    @classmethod
    def initial(cls, n: int, m: int) -> "CutState":
        return cls(n, m, (1 << comb(n + m, n)) - 1)

    @property
    def count(self) -> int:
        return self.alive.bit_count()

    def survivors(self) -> list[frozenset]:
        sides = bipartitions(self.n, self.m)
        return [A for i, A in enumerate(sides) if self.alive >> i & 1]

    def removed_by(self, cut: Cut) -> int:
        return (self.alive & cut_masks(self.n, self.m)[cut]).bit_count()


def apply_cut(state: CutState, cut: Cut) -> CutState:
    labels = range(1, state.n + state.m + 1)
    if cut.a not in labels or cut.b not in labels:
        raise ValueError(f"cut {cut} uses labels outside 1..{state.n + state.m}")
    mask = cut_masks(state.n, state.m)[cut]
    return CutState(state.n, state.m, state.alive & ~mask, state.history + (cut,))


@dataclass
class SegreResult:
    sequence: IndexSequence
    cuts: list[Cut]
    nodes: int

    def trace_lines(self) -> list[str]:
        counts = list(reversed(self.sequence.terms))[1:]
        return [f"cut {c.a} {c.b} -> {k}" for c, k in zip(self.cuts, counts)]


def _moves(n: int, m: int) -> tuple[list[Move], list[Cut]]:
    masks = cut_masks(n, m)
    cuts = list(masks)
    return [Move(masks[c], label=c) for c in cuts], cuts


def _subsearch(args):
    n, m, alive, depth, max_nodes = args
    moves, _ = _moves(n, m)
    return lexmax_removal(alive, moves, depth, min_alive=1, budget=NodeBudget(max_nodes))


def solve_segre(
    inst: SegreInstance, max_nodes: int = DEFAULT_MAX_NODES, workers: int = 1
) -> SegreResult:
    """Top-down lexicographic maximum over all ``nm``-cut sequences.

    Each cut must remove at least one survivor and at least one survivor must
    remain at the end. With ``workers > 1`` the first cut's branches are
    searched in separate processes.
    """
    n, m = inst.n, inst.m
    moves, cuts = _moves(n, m)
    start = CutState.initial(n, m).alive
    depth = inst.codim
    if workers <= 1:
        res = lexmax_removal(start, moves, depth, min_alive=1, budget=NodeBudget(max_nodes))
        if res is None:
            raise ValueError(f"no legal cut sequence for {inst}")
        counts, witness, nodes = res.counts, res.witness, res.nodes
    else:
        counts, witness, nodes = _solve_parallel(inst, moves, start, depth, max_nodes, workers)
    seq = IndexSequence.from_descending((inst.degree,) + tuple(counts))
    return SegreResult(seq, [cuts[i] for i in witness], nodes)


def _solve_parallel(inst, moves, start, depth, max_nodes, workers):
    total = start.bit_count()
    levels: dict[int, dict[int, int]] = {}
    for i, mv in enumerate(moves):
        removed = (start & mv.removes).bit_count()
        if removed and total - removed - (depth - 1) >= 1:
            levels.setdefault(removed, {}).setdefault(start & ~mv.removes, i)
    nodes = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for removed in sorted(levels):
            children = list(levels[removed].items())
            jobs = [(inst.n, inst.m, child, depth - 1, max_nodes) for child, _ in children]
            best = None
            for (child, i), res in zip(children, pool.map(_subsearch, jobs)):
                if res is None:
                    continue
                nodes += res.nodes
                cand = ((total - removed,) + res.counts, [i] + res.witness)
                if best is None or cand[0] > best[0]:
                    best = cand
            if nodes > max_nodes:
                raise SearchBudgetExceeded(f"search exceeded the node budget of {max_nodes}")
            if best is not None:
                return best[0], best[1], nodes
    raise ValueError(f"no legal cut sequence for {inst}")


def rlg_segre(inst: SegreInstance, max_nodes: int = DEFAULT_MAX_NODES, workers: int = 1) -> IndexSequence:
    return solve_segre(inst, max_nodes, workers).sequence


@dataclass
class SegreOracleResult:
    lexmax: IndexSequence
    termwise: tuple[int, ...]
    sequences: int
    nodes: int


def rlg_segre_oracle(inst: SegreInstance, max_nodes: int = 5_000_000) -> SegreOracleResult:
    """Exhaustive maximum over every legal cut sequence.

    Works on explicit sets of ``A`` sides and applies the cutting rule
    literally, independent of the bit-mask search.
    """
    n, m = inst.n, inst.m
    labels = range(1, n + m + 1)
    start = frozenset(frozenset(A) for A in itertools.combinations(labels, n))
    all_cuts = list(itertools.permutations(labels, 2))

    def children(state):
        for a, b in all_cuts:
            nxt = frozenset(A for A in state if a in A or b not in A)
            if 1 <= len(nxt) < len(state):
                yield nxt

    budget = NodeBudget(max_nodes)
    seqs = enumerate_count_sequences(start, children, len, inst.codim, budget=budget)
    if not seqs:
        raise ValueError(f"no legal cut sequence for {inst}")
    top = max(seqs)
    lexmax = IndexSequence.from_descending((len(start),) + top)
    termwise = tuple(reversed((len(start),) + termwise_max(list(seqs))))
    return SegreOracleResult(lexmax, termwise, len(seqs), budget.nodes)


def last_gap(inst: SegreInstance) -> int:
    return comb(inst.n + inst.m - 2, inst.n - 1)


def full_state_cut_sizes(n: int, m: int) -> dict[Cut, int]:
    state = CutState.initial(n, m)
    return {c: state.removed_by(c) for c in cut_masks(n, m)}
