"""Exact engine for numerical semigroups given by generators.

Membership, Frobenius number, gaps and pseudo-Frobenius numbers all come from
the Apéry table modulo the multiplicity m: Ap[r] is the least element of S
congruent to r, so x is in S iff x >= Ap[x mod m].
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from ._arith import I64_MAX, check_table_size, i64
from .errors import EmptyInput, InvalidGenerators, NotNumerical, SemigroupOverflow


def parse_generators(raw: Iterable[int]) -> tuple[int, ...]:
    values = tuple(int(v) for v in raw)
    if not values:
        raise EmptyInput("generator list is empty")
    for v in values:
        if v < 1:
            raise InvalidGenerators(f"generators must be positive, got {v}")
        i64(v)
    return values


def _apery_guard(gens: Sequence[int]) -> None:
    # every Apéry entry is a sum of at most m - 1 generators
    m, top = gens[0], gens[-1]
    if (m - 1) * top + top > I64_MAX:
        raise SemigroupOverflow(f"Apéry entries for multiplicity {m} and generator {top} exceed int64")
    check_table_size(m, "Apéry table")


@dataclass(frozen=True)
class AperyTable:
    modulus: int
    entries: tuple[int, ...]

    def __getitem__(self, r: int) -> int:
        return self.entries[r]


@dataclass(frozen=True)
class SemigroupDescriptor:
    """Minimal generators of <a1, ..., an> plus derived data.

    Immutable; the Apéry table is computed lazily and cached.
    """

    generators: tuple[int, ...]
    gcd: int
    original: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def is_numerical(self) -> bool:
        return self.gcd == 1

    @cached_property
    def reduced(self) -> "SemigroupDescriptor":
        """The numerical semigroup generated by the generators divided by gcd."""
        if self.gcd == 1:
            return self
        return normalize([g // self.gcd for g in self.generators])

    @cached_property
    def _table(self) -> np.ndarray:
        if self.multiplicity == 1:
            return np.zeros(1, dtype=np.int64)
        gens = np.array(self.generators, dtype=np.int64)
        return kernels.apery(gens)[0]


def normalize(raw: Iterable[int]) -> SemigroupDescriptor:
    """Deduplicate, sort and drop redundant generators (smallest kept first)."""
    original = parse_generators(raw)
    gens = tuple(sorted(set(original)))
    g = 0
    for v in gens:
        g = gcd(g, v)
    if gens[0] == 1:
        return SemigroupDescriptor((1,), 1, original)
    _apery_guard(gens)
    _, minimal = kernels.apery(np.array(gens, dtype=np.int64))
    kept = tuple(v for v, keep in zip(gens, minimal) if keep)
    return SemigroupDescriptor(kept, g, original)


def _require_numerical(S: SemigroupDescriptor) -> None:
    if S.gcd != 1:
        raise NotNumerical(f"gcd of {list(S.generators)} is {S.gcd}, not 1")


def apery(S: SemigroupDescriptor) -> AperyTable:
    _require_numerical(S)
    return AperyTable(S.multiplicity, tuple(int(v) for v in S._table))


def contains(S: SemigroupDescriptor, x: int) -> bool:
    i64(x)
    if x < 0:
        return False
    if S.gcd != 1:
        if x % S.gcd:
            return False
        return contains(S.reduced, x // S.gcd)
    m = S.multiplicity
    return x >= int(S._table[x % m])


def contains_many(S: SemigroupDescriptor, xs) -> np.ndarray:
    """Vectorized membership for an integer array."""
    xs = np.asarray(xs, dtype=np.int64)
    if S.gcd != 1:
        ok = (xs >= 0) & (xs % S.gcd == 0)
        out = np.zeros(xs.shape, dtype=np.bool_)
        out[ok] = contains_many(S.reduced, xs[ok] // S.gcd)
        return out
    table = S._table
    return (xs >= 0) & (xs >= table[xs % S.multiplicity])


@dataclass(frozen=True)
class GapSet:
    gaps: tuple[int, ...]
    genus: int
    frobenius: int


def frobenius(S: SemigroupDescriptor) -> int:
    _require_numerical(S)
    return int(S._table.max()) - S.multiplicity


def genus(S: SemigroupDescriptor) -> int:
    _require_numerical(S)
    return int((S._table // S.multiplicity).sum())


def gaps(S: SemigroupDescriptor) -> GapSet:
    """All gaps. For residue r the gaps are Ap[r] - m, Ap[r] - 2m, ... > 0."""
    _require_numerical(S)
    m = S.multiplicity
    if m == 1:
        return GapSet((), 0, -1)
    table = S._table
    out = np.concatenate([np.arange(int(w) - m, 0, -m, dtype=np.int64) for w in table[1:]])
    out.sort()
    return GapSet(tuple(int(v) for v in out), int(out.size), frobenius(S))


@dataclass(frozen=True)
class PseudoFrobeniusSet:
    values: tuple[int, ...]

    @property
    def type(self) -> int:
        return len(self.values)


def pseudo_frobenius(S: SemigroupDescriptor) -> PseudoFrobeniusSet:
    """T(S) = {x not in S : x + s in S for all nonzero s in S}.

    Checking x + g for the minimal generators g suffices: every nonzero s in
    S is g + s' with s' in S, and x + g in S gives x + g + s' in S by closure.
    The m-condition alone pins x to Ap[r] - m for some r != 0 (x + m in S and
    x not in S), so only those m - 1 values are tested against the others.
    """
    _require_numerical(S)
    m = S.multiplicity
    if m == 1:
        return PseudoFrobeniusSet((-1,))
    table = S._table
    x = table[1:] - m
    ok = np.ones(x.shape[0], dtype=np.bool_)
    for g in S.generators[1:]:
        y = x + g
        ok &= y >= table[y % m]
    return PseudoFrobeniusSet(tuple(sorted(int(v) for v in x[ok])))


def semigroup_type(S: SemigroupDescriptor) -> int:
    return pseudo_frobenius(S).type


@dataclass(frozen=True)
class WilfReport:
    embedding_dimension: int
    green_count: int
    frobenius: int
    holds: bool
    ratio: Fraction | None  # None only for S = N, where F + 1 = 0

    @property
    def ratio_pair(self) -> list[int] | None:
        if self.ratio is None:
            return None
        return [self.ratio.numerator, self.ratio.denominator]


def wilf_check(S: SemigroupDescriptor) -> WilfReport:
    f = frobenius(S)
    green = f + 1 - genus(S)
    n = S.embedding_dimension
    ratio = Fraction(n * green, f + 1) if f + 1 > 0 else None
    return WilfReport(n, green, f, n * green >= f + 1, ratio)


def semigroup(*gens: int) -> SemigroupDescriptor:
    """Shorthand: semigroup(4, 9, 15) == normalize([4, 9, 15])."""
    if len(gens) == 1 and not isinstance(gens[0], int):
        return normalize(gens[0])
    return normalize(gens)
