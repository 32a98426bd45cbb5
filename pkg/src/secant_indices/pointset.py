"""Finite point configurations in projective space: exact ranks, flats and
the two secant-type sequences of a configuration.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from pathlib import Path
from typing import Iterable, Sequence

from .search import NodeBudget, SearchBudgetExceeded
from .sequences import IndexSequence

DEFAULT_MAX_POINTS = 16


class InvalidConfiguration(ValueError):
    pass


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            for c in range(col, ncols):
                # exact division is guaranteed by Sylvester's identity
                m[r][c] = (p * m[r][c] - f * m[rank][c]) // prev
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def _integral(v: Sequence[Fraction]) -> tuple[int, ...]:
    den = lcm(*(x.denominator for x in v)) if v else 1
    return tuple(int(x * den) for x in v)


@dataclass(frozen=True)
class PointConfig:
    ambient_dim: int
    points: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...] = ()
    max_points: int = field(default=DEFAULT_MAX_POINTS, compare=False)

    def __post_init__(self):
        pts = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"p{i}" for i in range(len(pts))))
        if len(self.labels) != len(pts):
            raise InvalidConfiguration("one label per point required")
        for p, name in zip(pts, self.labels):
            if len(p) != self.ambient_dim + 1:
                raise InvalidConfiguration(
                    f"{name} has {len(p)} coordinates, expected {self.ambient_dim + 1}"
                )
            if not any(p):
                raise InvalidConfiguration(f"{name} is the zero vector")
        ints = tuple(_integral(p) for p in pts)
        object.__setattr__(self, "_ints", ints)
        for i, j in itertools.combinations(range(len(pts)), 2):
            if bareiss_rank([ints[i], ints[j]]) < 2:
                raise InvalidConfiguration(
                    f"{self.labels[i]} and {self.labels[j]} are the same projective point"
                )

    @classmethod
    def from_record(cls, rec: dict) -> "PointConfig":
        pts = [tuple(Fraction(str(x)) for x in p) for p in rec["points"]]
        return cls(int(rec["ambient_dim"]), tuple(pts), tuple(rec.get("labels", ())))

    def to_record(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "points": [[str(x) for x in p] for p in self.points],
            "labels": list(self.labels),
        }

    def __len__(self):
        return len(self.points)

    def _check_budget(self):
        if len(self.points) > self.max_points:
            raise SearchBudgetExceeded(
                f"{len(self.points)} points exceed the enumeration budget of {self.max_points}"
            )


def rank(cfg: PointConfig, subset: Iterable[int]) -> int:
    return bareiss_rank([cfg._ints[i] for i in subset])


def closure(cfg: PointConfig, subset: Iterable[int]) -> frozenset[int]:
    """All points of the configuration in the span of ``subset``."""
    subset = list(subset)
    r = rank(cfg, subset)
    return frozenset(
        i for i in range(len(cfg)) if i in subset or rank(cfg, subset + [i]) == r
    )


@dataclass
class FlatLattice:
    cfg: PointConfig
    by_rank: dict[int, list[frozenset[int]]]

    @property
    def flats(self) -> list[frozenset[int]]:
        return [f for r in sorted(self.by_rank) for f in self.by_rank[r]]

    def rank_of(self, flat: frozenset[int]) -> int:
        for r, fs in self.by_rank.items():
            if flat in fs:
                return r
        raise KeyError(flat)

    def rank(self, subset: Iterable[int]) -> int:
        return rank(self.cfg, subset)

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        return closure(self.cfg, subset)

    def labelled(self) -> dict[int, list[list[str]]]:
        return {
            r: [sorted(self.cfg.labels[i] for i in f) for f in fs]
            for r, fs in sorted(self.by_rank.items())
        }


def flats(cfg: PointConfig) -> FlatLattice:
    """Every flat, built rank by rank: each flat of rank ``r + 1`` is the
    closure of a rank-``r`` flat plus one outside point."""
    cfg._check_budget()
    bottom = closure(cfg, [])
    by_rank = {0: [bottom]}
    r = 0
    while True:
        nxt: dict[frozenset[int], None] = {}
        for f in by_rank[r]:
            for i in range(len(cfg)):
                if i not in f:
                    nxt.setdefault(closure(cfg, sorted(f | {i})), None)
        if not nxt:
            break
        r += 1
        by_rank[r] = sorted(nxt, key=lambda s: (len(s), sorted(s)))
    return FlatLattice(cfg, by_rank)


def secant_sequence(cfg: PointConfig) -> IndexSequence:
    """Term ``j``: the most points on a ``j``-dimensional linear space."""
    lat = flats(cfg)
    out = []
    for j in range(cfg.ambient_dim + 1):
        out.append(max(len(f) for r, fs in lat.by_rank.items() if r <= j + 1 for f in fs))
    return IndexSequence(tuple(out))


@dataclass
class ChainResult:
    sequence: IndexSequence
    chain: list[frozenset[int]]


def chain_search(cfg: PointConfig, max_nodes: int = 10**6) -> ChainResult:
    """Top-down lexicographic maximum over nested flats ``S_0 <= ... <= S_n``
    with ``rank(S_j) <= j + 1`` and ``S_j`` nonempty.

    Any such chain is cut out by a flag of linear spaces: choose ``L_j``
    inside ``L_{j+1}`` through ``S_j`` generically so it misses every other
    point.
    """
    lat = flats(cfg)
    budget = NodeBudget(max_nodes)
    nonempty = [(r, f) for r, fs in lat.by_rank.items() for f in fs if f]
    top = frozenset(range(len(cfg)))

    @lru_cache(maxsize=None)
    def best(upper: frozenset[int], j: int):
        # best (counts, chain) for positions j, j-1, ..., 0 inside ``upper``
        if j < 0:
            return (), ()
        budget.tick()
        options = [f for r, f in nonempty if r <= j + 1 and f <= upper]
        found = None
        for size in sorted({len(f) for f in options}, reverse=True):
            for f in (f for f in options if len(f) == size):
                counts, chain = best(f, j - 1)
                cand = ((size,) + counts, (f,) + chain)
                if found is None or cand[0] > found[0]:
                    found = cand
            if found is not None:
                break
        return found

    counts, chain = best(top, cfg.ambient_dim - 1)
    seq = IndexSequence(tuple(reversed((len(top),) + counts)))
    return ChainResult(seq, list(reversed((top,) + chain)))


def chain_sequence(cfg: PointConfig) -> IndexSequence:
    return chain_search(cfg).sequence


def chain_counts(cfg: PointConfig, chain: Sequence[Iterable[int]]) -> tuple[int, ...]:
    """Replay a chain: check nesting, closedness and rank bounds, return sizes."""
    chain = [frozenset(s) for s in chain]
    if len(chain) != cfg.ambient_dim + 1:
        raise ValueError("chain must have one set per dimension 0..n")
    for j, s in enumerate(chain):
        if closure(cfg, sorted(s)) != s:
            raise ValueError(f"position {j} is not a flat")
        if rank(cfg, sorted(s)) > j + 1:
            raise ValueError(f"position {j} has rank above {j + 1}")
        if j and not chain[j - 1] <= s:
            raise ValueError(f"position {j - 1} is not contained in position {j}")
    return tuple(len(s) for s in chain)


# --- builtin configurations -------------------------------------------------

def _q2_points():
    # three points on the line {x = y = 0}, five on the plane {z = 0};
    # the line meets the plane at (0:0:0:1)
    line = [(0, 0, 1, 1), (0, 0, 1, 2), (0, 0, 1, -1)]
    plane = [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 1), (1, -1, 0, 2), (2, 1, 0, -1)]
    return line, plane


def q2_example() -> PointConfig:
    line, plane = _q2_points()
    labels = ("p1", "p2", "p3", "q1", "q2", "q3", "q4", "q5")
    cfg = PointConfig(3, tuple(line + plane), labels)
    verify_q2_conditions(cfg)
    return cfg


Q2_MEET = (0, 0, 0, 1)


def verify_q2_conditions(cfg: PointConfig, meet: Sequence = Q2_MEET) -> None:
    """Check every incidence condition the line-plus-plane example relies on."""
    ps, qs = [0, 1, 2], [3, 4, 5, 6, 7]
    o = _integral(tuple(Fraction(x) for x in meet))
    rows = lambda idx: [cfg._ints[i] for i in idx]
    failures = []
    if bareiss_rank(rows(ps)) != 2:
        failures.append("p1, p2, p3 are not collinear")
    if bareiss_rank(rows(qs)) != 3:
        failures.append("q1..q5 do not span a plane")
    if bareiss_rank(rows(ps[:2]) + [o]) != 2 or bareiss_rank(rows(qs) + [o]) != 3:
        failures.append("the given meeting point is not on both the line and the plane")
    if bareiss_rank(rows(ps + qs)) != 4:
        failures.append("the line lies in the plane")
    for p in ps:
        if bareiss_rank([cfg._ints[p], o]) < 2:
            failures.append(f"{cfg.labels[p]} is the meeting point")
    for a, b, c in itertools.combinations(qs, 3):
        if bareiss_rank(rows([a, b, c])) < 3:
            failures.append(f"{cfg.labels[a]}, {cfg.labels[b]}, {cfg.labels[c]} are collinear")
    for a, b in itertools.combinations(qs, 2):
        if bareiss_rank(rows([a, b]) + [o]) < 3:
            failures.append(f"{cfg.labels[a]}, {cfg.labels[b]} lie on a line through the meeting point")
    if failures:
        raise InvalidConfiguration("; ".join(failures))


def grid_3x3() -> PointConfig:
    pts = tuple((i, j, 1) for i in (1, 2, 3) for j in (1, 2, 3))
    return PointConfig(2, pts, tuple(f"({i},{j})" for i, j, _ in pts))


def general_position(n: int) -> PointConfig:
    """The ``n + 1`` coordinate points of P^n."""
    pts = tuple(tuple(int(i == k) for k in range(n + 1)) for i in range(n + 1))
    return PointConfig(n, pts)


BUILTINS = {
    "q2-example": q2_example,
    "grid-3x3": grid_3x3,
    "general-3": lambda: general_position(3),
}


def load(source: str) -> PointConfig:
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        if name not in BUILTINS:
            raise InvalidConfiguration(f"unknown builtin {name!r}; known: {sorted(BUILTINS)}")
        return BUILTINS[name]()
    return PointConfig.from_record(json.loads(Path(source).read_text()))
