"""Integer sequences with the termwise partial order and the top-down total order.

Secant-type sequences are stored ascending: the first entry belongs to the
smallest linear space, the last entry is the degree.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

BAR = " | "
COMMA = ", "


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class IndexSequence:
    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if any(t < 1 for t in terms):
            raise ValueError(f"terms must be positive: {terms}")
        if any(b < a for a, b in zip(terms, terms[1:])):
            raise ValueError(f"terms must be nondecreasing: {terms}")

    @classmethod
    def from_descending(cls, counts: Iterable[int]) -> "IndexSequence":
        return cls(tuple(reversed(tuple(counts))))

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __iter__(self):
        return iter(self.terms)

    @property
    def is_strictly_increasing(self) -> bool:
        return all(b > a for a, b in zip(self.terms, self.terms[1:]))

    def bars(self) -> str:
        return render_with_bars(self)

    def to_record(self) -> dict:
        return {"terms": list(self.terms), "bars": render_with_bars(self)}

    def __str__(self):
        return "(" + render_with_bars(self) + ")"


def _terms(a) -> tuple[int, ...]:
    return a.terms if isinstance(a, IndexSequence) else tuple(a)


def _check_lengths(a, b):
    if len(a) != len(b):
        raise ValueError(f"sequences differ in length: {len(a)} != {len(b)}")


def compare_termwise(a, b) -> Order:
    """Termwise comparison; ``Order.LESS`` means ``a`` is below ``b`` at every index."""
    a, b = _terms(a), _terms(b)
    _check_lengths(a, b)
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le and ge:
        return Order.EQUAL
    if le:
        return Order.LESS
    if ge:
        return Order.GREATER
    return Order.INCOMPARABLE


def compare_total(a, b) -> Order:
    """Total order decided at the highest index where the sequences differ."""
    a, b = _terms(a), _terms(b)
    _check_lengths(a, b)
    for x, y in zip(reversed(a), reversed(b)):
        if x < y:
            return Order.LESS
        if x > y:
            return Order.GREATER
    return Order.EQUAL


def total_key(a) -> tuple[int, ...]:
    """Sort key realising ``compare_total`` as plain tuple comparison."""
    return tuple(reversed(_terms(a)))


@dataclass(frozen=True)
class GapProfile:
    """Consecutive differences of a nondecreasing sequence.

    ``gaps`` lists ``(position, size)`` for every jump of at least two, where
    ``position`` is the index of the term that follows the jump.
    """

    first: int
    steps: tuple[int, ...]

    @property
    def gaps(self) -> list[tuple[int, int]]:
        return [(i + 1, s) for i, s in enumerate(self.steps) if s >= 2]

    def reconstruct(self) -> tuple[int, ...]:
        out = [self.first]
        for s in self.steps:
            out.append(out[-1] + s)
        return tuple(out)


def gaps(a) -> GapProfile:
    terms = _terms(a)
    if not terms:
        raise ValueError("empty sequence")
    steps = tuple(b - x for x, b in zip(terms, terms[1:]))
    if any(s < 0 for s in steps):
        raise ValueError(f"sequence is not nondecreasing: {terms}")
    return GapProfile(terms[0], steps)


def render_with_bars(a) -> str:
    terms = _terms(a)
    if not terms:
        return ""
    parts = [str(terms[0])]
    for prev, t in zip(terms, terms[1:]):
        if t < prev:
            raise ValueError(f"sequence is not nondecreasing: {terms}")
        parts.append(BAR if t - prev >= 2 else COMMA)
        parts.append(str(t))
    return "".join(parts)


def parse_bars(text: str) -> tuple[int, ...]:
    """Inverse of :func:`render_with_bars` (bars are dropped, numbers kept)."""
    text = text.strip().strip("()")
    if not text:
        return ()
    out = []
    for chunk in text.replace("|", ",").split(","):
        chunk = chunk.strip()
        if chunk:
            out.append(int(chunk))
    return tuple(out)


def bar_positions(text: str) -> list[int]:
    """Indices of the terms that are preceded by a bar in a rendered string."""
    positions = []
    index = 0
    for segment in text.strip().strip("()").split("|")[:-1]:
        index += len([c for c in segment.split(",") if c.strip()])
        positions.append(index)
    return positions


def termwise_max(seqs: Sequence[Sequence[int]]) -> tuple[int, ...]:
    seqs = [_terms(s) for s in seqs]
    if not seqs:
        raise ValueError("no sequences")
    return tuple(max(col) for col in zip(*seqs))
