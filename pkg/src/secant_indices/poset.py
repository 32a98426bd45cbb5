"""Removal game on a finite poset ``C = A + B``.

A move picks a surviving element of ``A`` and deletes it together with every
element above it. A full play makes ``|A| - 1`` picks; the game records
``|C|`` after each pick.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .monomials import (
    Monomial,
    box_cells,
    dehomogenize,
    lex_degree_d,
    parse_powers,
    powers_divide,
)
from .search import (
    DEFAULT_MAX_NODES,
    Move,
    NodeBudget,
    enumerate_count_sequences,
    lexmax_removal,
)
from .sequences import termwise_max


class InvalidPoset(ValueError):
    pass


class IllegalPick(ValueError):
    pass


@dataclass(frozen=True)
class PosetInstance:
    elements: tuple[str, ...]
    A: frozenset[str]
    # leq[i] = bit mask of the elements >= elements[i], closure included
    up: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_relation(cls, elements, A, pairs, kind: str = "covers") -> "PosetInstance":
        """Build from ``(x, y)`` pairs meaning ``x <= y``; the closure is taken."""
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise InvalidPoset("duplicate element labels")
        A = frozenset(A)
        missing = A - set(elements)
        if missing:
            raise InvalidPoset(f"A contains unknown elements: {sorted(missing)}")
        if not A:
            raise InvalidPoset("A is empty")
        k = len(elements)
        leq = [[i == j for j in range(k)] for i in range(k)]
        for x, y in pairs:
            if x not in index or y not in index:
                raise InvalidPoset(f"relation mentions unknown element in ({x}, {y})")
            leq[index[x]][index[y]] = True
        if kind == "all":
            for i, j, l in itertools.product(range(k), repeat=3):
                if leq[i][j] and leq[j][l] and not leq[i][l]:
                    raise InvalidPoset(
                        f"transitivity fails: {elements[i]} <= {elements[j]} <= {elements[l]}"
                    )
        elif kind == "covers":
            for j in range(k):
                for i in range(k):
                    if leq[i][j]:
                        for l in range(k):
                            if leq[j][l]:
                                leq[i][l] = True
        else:
            raise InvalidPoset(f"unknown relation kind {kind!r}")
        for i in range(k):
            for j in range(i + 1, k):
                if leq[i][j] and leq[j][i]:
                    raise InvalidPoset(
                        f"antisymmetry fails: {elements[i]} <= {elements[j]} <= {elements[i]}"
                    )
        up = tuple(sum(1 << j for j in range(k) if leq[i][j]) for i in range(k))
        return cls(elements, A, up)

    @classmethod
    def from_divisibility(cls, elements, A) -> "PosetInstance":
        powers = [parse_powers(e) for e in elements]
        pairs = [
            (x, y)
            for (x, px), (y, py) in itertools.product(zip(elements, powers), repeat=2)
            if x != y and powers_divide(px, py)
        ]
        return cls.from_relation(elements, A, pairs, kind="all")

    @classmethod
    def from_record(cls, rec: dict) -> "PosetInstance":
        kind = rec.get("relation_kind", "covers")
        if kind == "divisibility-of-monomials":
            return cls.from_divisibility(rec["elements"], rec["A"])
        return cls.from_relation(rec["elements"], rec["A"], rec.get("relation", []), kind)

    @property
    def B(self) -> frozenset[str]:
        return frozenset(self.elements) - self.A

    def leq(self, x: str, y: str) -> bool:
        i, j = self.elements.index(x), self.elements.index(y)
        return bool(self.up[i] >> j & 1)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    @property
    def full_length(self) -> int:
        return len(self.A) - 1

    def picks_in_order(self) -> list[int]:
        # greedy tie-break and move order follow the listing order of ``elements``
        return [i for i, e in enumerate(self.elements) if e in self.A]


def play(p: PosetInstance, picks: Sequence[str]) -> tuple[int, ...]:
    alive = p.full
    counts = [alive.bit_count()]
    seen = set()
    for x in picks:
        if x not in p.A:
            raise IllegalPick(f"{x!r} is not in A")
        if x in seen:
            raise IllegalPick(f"{x!r} picked twice")
        seen.add(x)
        i = p.elements.index(x)
        if not alive >> i & 1:
            raise IllegalPick(f"{x!r} was already removed by an earlier pick")
        alive &= ~p.up[i]
        counts.append(alive.bit_count())
    return tuple(counts)


@dataclass
class GreedyResult:
    counts: tuple[int, ...]
    picks: list[str]
    complete: bool


def solve_greedy(p: PosetInstance) -> GreedyResult:
    alive = p.full
    counts = [alive.bit_count()]
    picks: list[str] = []
    order = p.picks_in_order()
    for _ in range(p.full_length):
        options = [
            ((alive & p.up[i]).bit_count(), pos, i)
            for pos, i in enumerate(order)
            if alive >> i & 1
        ]
        if not options:
            return GreedyResult(tuple(counts), picks, False)
        _, _, i = min(options)
        alive &= ~p.up[i]
        picks.append(p.elements[i])
        counts.append(alive.bit_count())
    return GreedyResult(tuple(counts), picks, True)


@dataclass
class ExactResult:
    lexmax: tuple[int, ...]
    termwise: tuple[int, ...]
    witness: list[str]
    nodes: int


def _moves(p: PosetInstance) -> list[Move]:
    return [Move(p.up[i], requires=1 << i, label=p.elements[i]) for i in p.picks_in_order()]


def solve_exact(p: PosetInstance, max_nodes: int = DEFAULT_MAX_NODES) -> ExactResult:
    """Lexicographic maximum, termwise maxima and a witness over full plays."""
    moves = _moves(p)
    budget = NodeBudget(max_nodes)
    res = lexmax_removal(p.full, moves, p.full_length, budget=budget)
    if res is None:
        raise ValueError("no legal play of full length exists")

    def children(alive):
        for mv in moves:
            if alive & mv.requires:
                yield alive & ~mv.removes

    seqs = enumerate_count_sequences(
        p.full, children, int.bit_count, p.full_length, budget=budget
    )
    start = (p.full.bit_count(),)
    termwise = start + termwise_max(list(seqs)) if p.full_length else start
    return ExactResult(
        start + res.counts, termwise, [moves[i].label for i in res.witness], budget.nodes
    )


def verdict(greedy: Sequence[int], termwise: Sequence[int]) -> str:
    """Where the termwise maxima first exceed the greedy play (1-based)."""
    for k, (g, t) in enumerate(zip(greedy, termwise), start=1):
        if t > g:
            return f"beaten at position {k}"
    return "greedy optimal"


def counterexample() -> PosetInstance:
    """Nine monomials in a, b, c under divisibility where greedy is not termwise maximal."""
    elements = ["1", "a", "b", "b^2", "c", "a^2", "a^3", "a^4", "a^5"]
    return PosetInstance.from_divisibility(elements, ["1", "a", "b", "c", "a^2", "a^3"])


def veronese_instance(n: int, d: int) -> PosetInstance:
    """Standard monomials of ``(x0^d, ..., x_{n-1}^d)`` with the addable monomials as ``A``.

    ``A`` lists the non-pure-power monomials of degree at most ``d`` in lex
    order of their homogenizations, followed by the unit monomial.
    """
    cells = [Monomial(tuple(int(x) for x in c)) for c in box_cells(n, d)]
    addable = [dehomogenize(m) for m in lex_degree_d(n + 1, d, True)]
    unit = Monomial.one(n)
    elements = [str(m) for m in addable + [unit]]
    elements += [str(c) for c in cells if c not in addable and c != unit]
    pairs = [
        (str(x), str(y))
        for x in cells
        for y in cells
        if x != y and x.divides(y)
    ]
    return PosetInstance.from_relation(elements, elements[: len(addable) + 1], pairs, kind="all")


BUILTINS = {
    "counterexample": counterexample,
    "veronese-2-2": lambda: veronese_instance(2, 2),
    "veronese-2-3": lambda: veronese_instance(2, 3),
    "veronese-3-2": lambda: veronese_instance(3, 2),
}


def load(source: str) -> PosetInstance:
    """``builtin:<name>`` or a path to a JSON instance file."""
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        if name not in BUILTINS:
            raise InvalidPoset(f"unknown builtin {name!r}; known: {sorted(BUILTINS)}")
        return BUILTINS[name]()
    return PosetInstance.from_record(json.loads(Path(source).read_text()))
