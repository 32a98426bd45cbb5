"""Monomials, lex enumeration and standard-monomial counts in a box.

Variables are ``x0 > x1 > ... ``; a monomial is its exponent vector.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np

_TOKEN = re.compile(r"^\s*([A-Za-z_][A-Za-z_]*?)(\d*)\s*(?:\^\s*(\d+))?\s*$")


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def parse(cls, text: str, nvars: int) -> "Monomial":
        """Parse ``"x0^2*x1"``; ``"1"`` is the unit monomial."""
        exps = [0] * nvars
        text = text.strip()
        if text == "1":
            return cls(tuple(exps))
        for factor in text.split("*"):
            m = re.fullmatch(r"\s*x(\d+)\s*(?:\^\s*(\d+))?\s*", factor)
            if not m:
                raise ValueError(f"cannot parse monomial factor {factor!r}")
            i = int(m.group(1))
            if i >= nvars:
                raise ValueError(f"variable x{i} out of range for {nvars} variables")
            exps[i] += int(m.group(2) or 1)
        return cls(tuple(exps))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def is_pure_power(self) -> bool:
        return sum(1 for e in self.exponents if e) == 1

    def __str__(self):
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"


def parse_powers(text: str) -> dict[str, int]:
    """Parse a monomial in arbitrary variable names, e.g. ``"a^2*b"``."""
    text = text.strip()
    out: dict[str, int] = {}
    if text == "1":
        return out
    for factor in text.split("*"):
        m = _TOKEN.match(factor)
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        name = m.group(1) + m.group(2)
        out[name] = out.get(name, 0) + int(m.group(3) or 1)
    return out


def powers_divide(a: dict[str, int], b: dict[str, int]) -> bool:
    return all(b.get(v, 0) >= e for v, e in a.items())


def lex_degree_d(nvars: int, d: int, exclude_pure_powers: bool = False) -> list[Monomial]:
    """Degree-``d`` monomials in ``nvars`` variables, lex-descending (x0 heaviest)."""
    if nvars < 1 or d < 1:
        raise ValueError("need nvars >= 1 and d >= 1")
    return list(_lex_degree_d(nvars, d, exclude_pure_powers))


@lru_cache(maxsize=None)
def _lex_degree_d(nvars: int, d: int, exclude: bool) -> tuple[Monomial, ...]:
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)

    rec((), d, nvars)
    mons = [Monomial(e) for e in out]
    if exclude:
        mons = [m for m in mons if not m.is_pure_power()]
    return tuple(mons)


def dehomogenize(m: Monomial) -> Monomial:
    """Set the last variable to 1."""
    return Monomial(m.exponents[:-1])


@dataclass(frozen=True)
class LexSegment:
    """Initial run of the lex list of degree-``d`` non-pure-power monomials."""

    n_plus_1_vars: int
    d: int
    length: int

    def __post_init__(self):
        cap = comb(self.n_plus_1_vars - 1 + self.d, self.d) - self.n_plus_1_vars
        if not 0 <= self.length <= max(cap, 0):
            raise ValueError(f"lex segment length {self.length} outside 0..{cap}")

    def monomials(self) -> list[Monomial]:
        if self.length == 0:
            return []
        return lex_degree_d(self.n_plus_1_vars, self.d, True)[: self.length]

    def dehomogenized(self) -> list[Monomial]:
        return [dehomogenize(m) for m in self.monomials()]


def minimal_generators(gens: Iterable[Monomial]) -> list[Monomial]:
    gens = sorted(set(gens), key=lambda m: (m.degree, m.exponents))
    kept: list[Monomial] = []
    for g in gens:
        if not any(k.divides(g) for k in kept):
            kept.append(g)
    return kept


@dataclass(frozen=True)
class BoxIdeal:
    """``(x0^d, ..., x_{n-1}^d) + (extras)`` in ``n`` variables."""

    n: int
    d: int
    extras: tuple[Monomial, ...] = ()

    def __post_init__(self):
        if self.n < 0 or self.d < 1:
            raise ValueError("need n >= 0 and d >= 1")
        extras = tuple(self.extras)
        for m in extras:
            if m.nvars != self.n:
                raise ValueError(f"{m} does not live in {self.n} variables")
            if m.degree > self.d:
                raise ValueError(f"{m} has degree above {self.d}")
            if any(e >= self.d for e in m.exponents):
                raise ValueError(f"{m} is already in the pure-power ideal")
        object.__setattr__(self, "extras", extras)

    def with_extra(self, m: Monomial) -> "BoxIdeal":
        return BoxIdeal(self.n, self.d, self.extras + (m,))

    def contains(self, m: Monomial) -> bool:
        if any(e >= self.d for e in m.exponents):
            return True
        return any(g.divides(m) for g in self.extras)

    def minimal_extras(self) -> list[Monomial]:
        return minimal_generators(self.extras)


@lru_cache(maxsize=64)
def box_cells(n: int, d: int) -> np.ndarray:
    """All exponent vectors in ``{0..d-1}^n`` as an ``(d**n, n)`` array."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.arange(d)] * n, indexing="ij")
    cells = np.stack([g.ravel() for g in grids], axis=1)
    cells.setflags(write=False)
    return cells


def quotient_dim(ideal: BoxIdeal) -> int:
    """Number of standard monomials of the box ideal."""
    cells = box_cells(ideal.n, ideal.d)
    alive = np.ones(len(cells), dtype=bool)
    for g in ideal.minimal_extras():
        alive &= ~np.all(cells >= np.asarray(g.exponents, dtype=np.int64), axis=1)
    return int(alive.sum())


def quotient_dim_inclusion_exclusion(ideal: BoxIdeal) -> int:
    """Same count via inclusion-exclusion over lcms of the extra generators."""
    d = ideal.d
    gens = list(ideal.extras)
    total = d**ideal.n
    for k in range(1, len(gens) + 1):
        for subset in itertools.combinations(gens, k):
            l = subset[0]
            for g in subset[1:]:
                l = l.lcm(g)
            multiples = 1
            for e in l.exponents:
                multiples *= max(d - e, 0)
            total += (-1) ** k * multiples
    return total


def phi_map(m: Monomial) -> tuple[tuple[int, int], ...]:
    """Linear factors ``(x_i - j)`` of the split image of ``m`` as ``(i, j)`` pairs."""
    return tuple((i, j) for i, e in enumerate(m.exponents) for j in range(1, e + 1))


def phi_divides(fa: Sequence[tuple[int, int]], fb: Sequence[tuple[int, int]]) -> bool:
    # factors are pairwise distinct, so divisibility is set inclusion
    return set(fa) <= set(fb)


def phi_str(factors: Sequence[tuple[int, int]]) -> str:
    if not factors:
        return "1"
    return "*".join(f"(x{i}-{j})" for i, j in factors)


def phi_eval(factors: Sequence[tuple[int, int]], point: Sequence[int]) -> int:
    value = 1
    for i, j in factors:
        value *= point[i] - j
    return value


def surviving_grid_points(ideal: BoxIdeal) -> int:
    """Common zeros on ``{1..d}^n`` of the split images of all generators.

    Evaluates the products of linear forms directly, so it shares nothing with
    :func:`quotient_dim` beyond the input.
    """
    gens = [phi_map(Monomial(tuple(ideal.d if k == i else 0 for k in range(ideal.n))))
            for i in range(ideal.n)]
    gens += [phi_map(m) for m in ideal.extras]
    count = 0
    for point in itertools.product(range(1, ideal.d + 1), repeat=ideal.n):
        if all(phi_eval(g, point) == 0 for g in gens):
            count += 1
    return count
