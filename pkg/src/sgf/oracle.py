"""Brute-force ground truth by forward dynamic programming.

Shares nothing with the Apéry machinery in core: the table here is a plain
reachability sieve reachable[x] = OR_g reachable[x - g], read off directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

import numpy as np

from . import kernels
from ._arith import I64_MAX, check_table_size
from .core import GapSet, PseudoFrobeniusSet, parse_generators
from .errors import BoundTooSmall, NotNumerical, SemigroupOverflow


@dataclass(frozen=True)
class SieveTable:
    bound: int
    reachable: np.ndarray

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.bound:
            raise BoundTooSmall(f"{x} is beyond the sieve bound {self.bound}")
        return bool(self.reachable[x])


def _prepare(gens: Iterable[int]) -> tuple[int, ...]:
    values = tuple(sorted(set(parse_generators(gens))))
    g = 0
    for v in values:
        g = gcd(g, v)
    if g != 1:
        raise NotNumerical(f"gcd of {list(values)} is {g}, not 1")
    return values


def default_bound(gens: Iterable[int]) -> int:
    """A bound past F(S) + max generator.

    F(S) <= F(<ai, aj>) < ai*aj for any coprime pair of generators, so the
    smallest such product works; without a coprime pair fall back to
    (a1 - 1)*an, which bounds every least-per-residue element.
    """
    values = _prepare(gens)
    if values[0] == 1:
        return values[-1]
    best = None
    for i, a in enumerate(values):
        for b in values[i + 1:]:
            if gcd(a, b) == 1 and (best is None or a * b < best):
                best = a * b
    if best is None:
        best = (values[0] - 1) * values[-1]
    return max(best, values[0] * values[1] if len(values) > 1 else 0) + values[-1]


def oracle_sieve(gens: Iterable[int], bound: int | None = None) -> SieveTable:
    values = _prepare(gens)
    if bound is None:
        bound = default_bound(values)
    floor = values[0] * values[1] if len(values) > 1 else values[0]
    if bound < floor:
        raise BoundTooSmall(f"bound {bound} is below {floor}, the product of the two smallest generators")
    if bound > I64_MAX:
        raise SemigroupOverflow(f"bound {bound} exceeds int64")
    check_table_size(bound + 1, "oracle sieve")
    reach = kernels.sieve(np.array(values, dtype=np.int64), bound)
    return SieveTable(bound, reach)


def _read(gens: Iterable[int]) -> tuple[tuple[int, ...], SieveTable]:
    values = _prepare(gens)
    return values, oracle_sieve(values)


def oracle_frobenius(gens: Iterable[int]) -> int:
    _, table = _read(gens)
    missing = np.flatnonzero(~table.reachable)
    return int(missing[-1]) if missing.size else -1


def oracle_gaps(gens: Iterable[int]) -> GapSet:
    _, table = _read(gens)
    missing = np.flatnonzero(~table.reachable)
    f = int(missing[-1]) if missing.size else -1
    return GapSet(tuple(int(v) for v in missing), int(missing.size), f)


def oracle_pf(gens: Iterable[int]) -> PseudoFrobeniusSet:
    values, table = _read(gens)
    reach = table.reachable
    missing = np.flatnonzero(~reach)
    if not missing.size:
        return PseudoFrobeniusSet((-1,))
    out = []
    for x in missing:
        # bound >= F + max generator, so every index below is in range
        if all(reach[x + g] for g in values):
            out.append(int(x))
    return PseudoFrobeniusSet(tuple(out))


def oracle_contains(gens: Iterable[int], x: int) -> bool:
    _, table = _read(gens)
    if x > table.bound:
        # past F(S): everything is reachable
        return True
    return x in table
