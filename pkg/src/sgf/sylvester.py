"""Two coprime generators: non-compound / compound decomposition.

For Q = <a1, a2> with gcd 1 and a1 < a2:

* NC: the gaps, each uniquely x = a1*a2 - k*a2 - j*a1 with 1 <= k < a1,
  1 <= j < a2.
* C: x = alpha*a1 + beta*a2 < a1*a2 with alpha, beta > 0.

x -> a1*a2 - x swaps NC and C, so |NC| = |C| = (a1 - 1)(a2 - 1)/2 and
F(Q) = a1*a2 - a1 - a2.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import core
from ._arith import PAIR_PRODUCT_LIMIT, i64
from .errors import InvalidPair, NotAGap, NotMember, SemigroupOverflow


@dataclass(frozen=True)
class CoprimePair:
    a1: int
    a2: int

    def __post_init__(self):
        a1, a2 = self.a1, self.a2
        if not (1 < a1 < a2):
            raise InvalidPair(f"need 1 < a1 < a2, got ({a1}, {a2})")
        if gcd(a1, a2) != 1:
            raise InvalidPair(f"gcd({a1}, {a2}) = {gcd(a1, a2)}, not 1")
        if a1 * a2 >= PAIR_PRODUCT_LIMIT:
            raise SemigroupOverflow(f"a1*a2 = {a1 * a2} must stay below 2**62")

    @property
    def product(self) -> int:
        return self.a1 * self.a2

    @property
    def frobenius(self) -> int:
        return self.a1 * self.a2 - self.a1 - self.a2

    def contains(self, x: int) -> bool:
        """Membership in <a1, a2> by the unique-representation test."""
        if x < 0:
            return False
        a1, a2 = self.a1, self.a2
        beta = (x * pow(a2, -1, a1)) % a1
        return beta * a2 <= x

    def semigroup(self) -> core.SemigroupDescriptor:
        return core.normalize((self.a1, self.a2))


def pair(a1: int, a2: int) -> CoprimePair:
    return CoprimePair(int(a1), int(a2))


@dataclass(frozen=True, order=True)
class NCRepresentation:
    x: int
    k: int  # coefficient of a2
    j: int  # coefficient of a1

    def value(self, p: CoprimePair) -> int:
        return p.a1 * p.a2 - self.k * p.a2 - self.j * p.a1

    def wr(self) -> tuple[int, int]:
        """(w, r) for the alternate form x = (a2 - w)*a1 - r*a2, i.e. (j, k)."""
        return self.j, self.k


@dataclass(frozen=True, order=True)
class CompoundRepresentation:
    x: int
    alpha: int  # coefficient of a1
    beta: int  # coefficient of a2

    def value(self, p: CoprimePair) -> int:
        return self.alpha * p.a1 + self.beta * p.a2


@dataclass(frozen=True)
class PairDecomposition:
    pair: CoprimePair
    couples: tuple[tuple[int, int], ...]


def nc_representation(p: CoprimePair, x: int) -> NCRepresentation:
    """The unique (k, j) with x = a1*a2 - k*a2 - j*a1, solved mod a1."""
    a1, a2 = p.a1, p.a2
    if not 0 < x < a1 * a2:
        raise NotAGap(f"{x} is outside (0, {a1 * a2})")
    # x = -k*a2 (mod a1)
    k = (-x * pow(a2, -1, a1)) % a1
    if k == 0:
        raise NotAGap(f"{x} is a multiple of {a1}, hence in <{a1}, {a2}>")
    j, rem = divmod(a1 * a2 - k * a2 - x, a1)
    if rem or not 1 <= j < a2:
        raise NotAGap(f"{x} is in <{a1}, {a2}>")
    return NCRepresentation(x, k, j)


def compound_representation(p: CoprimePair, x: int) -> CompoundRepresentation:
    """The unique (alpha, beta), alpha < a2, beta < a1, with x = alpha*a1 + beta*a2."""
    a1, a2 = p.a1, p.a2
    if not 0 <= x < a1 * a2:
        raise NotMember(f"{x} is outside [0, {a1 * a2})")
    beta = (x * pow(a2, -1, a1)) % a1
    alpha, rem = divmod(x - beta * a2, a1)
    if alpha < 0:
        raise NotMember(f"{x} is not in <{a1}, {a2}>")
    assert rem == 0 and alpha < a2
    return CompoundRepresentation(x, alpha, beta)


def nc_set(p: CoprimePair) -> list[NCRepresentation]:
    a1, a2 = p.a1, p.a2
    n = a1 * a2
    out = []
    for k in range(1, a1):
        base = n - k * a2
        for j in range(1, a2):
            x = base - j * a1
            if x <= 0:
                break
            out.append(NCRepresentation(x, k, j))
    out.sort()
    return out


def c_set(p: CoprimePair) -> list[CompoundRepresentation]:
    a1, a2 = p.a1, p.a2
    n = a1 * a2
    out = []
    for alpha in range(1, a2):
        for beta in range(1, a1):
            x = alpha * a1 + beta * a2
            if x >= n:
                break
            out.append(CompoundRepresentation(x, alpha, beta))
    out.sort()
    return out


def pair_decomposition(p: CoprimePair) -> PairDecomposition:
    n = p.a1 * p.a2
    couples = []
    for rep in nc_set(p):
        y = n - rep.x
        # y must be compound: both coefficients positive
        cr = compound_representation(p, y)
        assert cr.alpha > 0 and cr.beta > 0
        couples.append((rep.x, y))
    return PairDecomposition(p, tuple(couples))


def two_gen_frobenius(p: CoprimePair) -> int:
    return i64((p.a1 - 1) * (p.a2 - 1) - 1)


def proposition_po_set(p: CoprimePair) -> list[int]:
    """{F - y : y in Q, 0 <= y < F} with F = F(Q)."""
    f = two_gen_frobenius(p)
    return sorted(f - y for y in range(f) if p.contains(y))


def nc_count(p: CoprimePair) -> int:
    return (p.a1 - 1) * (p.a2 - 1) // 2
