"""Exact searches over removal games played on bit masks.

A game state is an ``int`` whose set bits are the surviving items. A move is a
removal mask; playing it clears those bits. Sequences of surviving counts are
compared after each move, first move first, which is the top-down total order
on the ascending secant-type sequence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional, Sequence

DEFAULT_MAX_NODES = 10**8


class SearchBudgetExceeded(RuntimeError):
    """Raised instead of returning a truncated answer."""


@dataclass
class NodeBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    nodes: int = 0

    def tick(self, k: int = 1):
        self.nodes += k
        if self.nodes > self.max_nodes:
            raise SearchBudgetExceeded(
                f"search exceeded the node budget of {self.max_nodes}"
            )


@dataclass(frozen=True)
class Move:
    removes: int
    # bits that must still be alive for the move to be legal
    requires: int = 0
    label: Hashable = None


@dataclass
class LexmaxResult:
    counts: tuple[int, ...]
    witness: list[int] = field(default_factory=list)
    nodes: int = 0


def lexmax_removal(
    start: int,
    moves: Sequence[Move],
    depth: int,
    *,
    min_alive: int = 0,
    budget: Optional[NodeBudget] = None,
) -> Optional[LexmaxResult]:
    """Lexicographically largest count sequence over ``depth`` legal moves.

    Every move must remove at least one surviving item, and the state may
    never drop below ``min_alive`` survivors. Ties on the removal size are all
    explored; memoisation is keyed on ``(alive, remaining)``. Returns ``None``
    when no legal sequence of the requested length exists.
    """
    budget = budget or NodeBudget()
    memo: dict[tuple[int, int], Optional[tuple[tuple[int, ...], tuple[int, ...]]]] = {}

    def best(alive: int, k: int):
        if k == 0:
            return (), ()
        key = (alive, k)
        if key in memo:
            return memo[key]
        budget.tick()
        count = alive.bit_count()
        levels: dict[int, dict[int, int]] = {}
        for i, mv in enumerate(moves):
            if mv.requires & alive != mv.requires:
                continue
            removed = (alive & mv.removes).bit_count()
            if removed == 0 or count - removed - (k - 1) < min_alive:
                continue
            levels.setdefault(removed, {}).setdefault(alive & ~mv.removes, i)
        found = None
        for removed in sorted(levels):
            after = count - removed
            ceiling = tuple(range(after, after - k, -1))
            for child, i in levels[removed].items():
                sub = best(child, k - 1)
                if sub is None:
                    continue
                cand = ((after,) + sub[0], (i,) + sub[1])
                if found is None or cand[0] > found[0]:
                    found = cand
                if found[0] == ceiling:
                    break
            if found is not None:
                break
        memo[key] = found
        return found

    if start.bit_count() - depth < min_alive:
        return None
    res = best(start, depth)
    if res is None:
        return None
    return LexmaxResult(res[0], list(res[1]), budget.nodes)


def enumerate_count_sequences(
    start: Hashable,
    children: Callable[[Hashable], Iterable[Hashable]],
    size: Callable[[Hashable], int],
    depth: int,
    *,
    budget: Optional[NodeBudget] = None,
) -> frozenset[tuple[int, ...]]:
    """Every count sequence reachable in exactly ``depth`` steps.

    ``children`` yields the legal successor states; the result holds the
    counts after each step, first step first. Used as a brute-force oracle,
    so it performs no pruning beyond memoising identical states.
    """
    budget = budget or NodeBudget()
    memo: dict = {}

    def rec(state, k):
        if k == 0:
            return frozenset([()])
        key = (state, k)
        if key in memo:
            return memo[key]
        budget.tick()
        out = set()
        for child in children(state):
            c = size(child)
            for tail in rec(child, k - 1):
                out.add((c,) + tail)
        res = frozenset(out)
        memo[key] = res
        return res

    return rec(start, depth)
