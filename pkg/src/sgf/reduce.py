"""gcd scaling, the Johnson reduction and Bezout certificates."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

import numpy as np

from . import core, kernels
from ._arith import cadd, centered_mod, cmul, i64, xgcd
from .core import parse_generators
from .errors import NotNumerical


@dataclass(frozen=True)
class ReductionStep:
    original: tuple[int, ...]
    d: int
    reduced: tuple[int, ...]
    pivot: int


def _gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def reduction_step(gens: Iterable[int]) -> ReductionStep | None:
    """Best single step on a generator list, or None if no d > 1 exists.

    Pivot maximizes d = gcd(all other generators); ties go to the smallest
    pivot. Two generators never reduce (that case is the closed formula).
    """
    gens = tuple(gens)
    if len(gens) < 3:
        return None
    best = None
    for i, p in sorted(enumerate(gens), key=lambda t: t[1]):
        d = _gcd_all(g for k, g in enumerate(gens) if k != i)
        if d > 1 and (best is None or d > best[0]):
            best = (d, i, p)
    if best is None:
        return None
    d, i, p = best
    reduced = tuple(g if k == i else g // d for k, g in enumerate(gens))
    return ReductionStep(gens, d, reduced, p)


def _base_frobenius(S: core.SemigroupDescriptor) -> int:
    if S.multiplicity == 1:
        return -1
    if S.embedding_dimension == 2:
        a1, a2 = S.generators
        return i64(a1 * a2 - a1 - a2)
    return core.frobenius(S)


def johnson_frobenius(gens: Iterable[int]) -> tuple[int, list[ReductionStep]]:
    """F(S) through repeated F(<a1, d*a'>) = d*F(<a1, a'>) + a1*(d - 1).

    Each step's reduced list is renormalized before the next one is sought.
    """
    S = core.normalize(gens)
    if S.gcd != 1:
        raise NotNumerical(f"gcd of {list(S.generators)} is {S.gcd}, not 1")
    steps: list[ReductionStep] = []
    while True:
        step = reduction_step(S.generators)
        if step is None:
            break
        steps.append(step)
        S = core.normalize(step.reduced)
    f = _base_frobenius(S)
    for step in reversed(steps):
        f = cadd(cmul(step.d, f), cmul(step.pivot, step.d - 1))
    return f, steps


def type_preservation_check(gens: Iterable[int]) -> bool:
    S = core.normalize(gens)
    if S.gcd != 1:
        raise NotNumerical(f"gcd of {list(S.generators)} is {S.gcd}, not 1")
    step = reduction_step(S.generators)
    if step is None:
        return True
    before = core.semigroup_type(S)
    after = core.semigroup_type(core.normalize(step.reduced))
    return before == after


def johnson_sweep(max_gen: int, max_witnesses: int = 64) -> dict:
    """Compiled sweep of the single-step identity and type preservation over
    every reducible minimal numerical triple with generators <= max_gen."""
    reducible, bad, n_bad = kernels.johnson_sweep(int(max_gen), int(max_witnesses))
    rows = [tuple(int(v) for v in row) for row in bad[: min(n_bad, max_witnesses)]]
    return {
        "max_gen": int(max_gen),
        "reducible": int(reducible),
        "mismatches": int(n_bad),
        "witnesses": [
            {"generators": list(r[:3]), "frobenius": r[3], "johnson": r[4], "type_equal": bool(r[5])}
            for r in rows
        ],
    }


@dataclass(frozen=True)
class BezoutCertificate:
    generators: tuple[int, ...]
    coefficients: tuple[int, ...]
    target: int

    def validate(self) -> bool:
        return validate_certificate(self.generators, self.coefficients, self.target)


def validate_certificate(gens, coefficients, target) -> bool:
    """sum(lambda_i * a_i) == target, evaluated in checked int64 arithmetic."""
    if len(gens) != len(coefficients):
        return False
    total = 0
    for lam, a in zip(coefficients, gens):
        total = cadd(total, cmul(lam, a))
    return total == target


def _fold(gens: tuple[int, ...]) -> tuple[int, ...]:
    g = gens[0]
    lam = [1]
    for i in range(1, len(gens)):
        a_i = gens[i]
        g, s, t = xgcd(g, a_i)
        lam = [s * v for v in lam] + [t]
        # pull each earlier coefficient into (-c/2, c/2], c = a_i / gcd(a_j, a_i),
        # compensating on lam[i]; keeps every intermediate well inside int64
        for j in range(i):
            h = gcd(gens[j], a_i)
            c = a_i // h
            new = centered_mod(lam[j], c)
            q = (lam[j] - new) // c
            lam[j] = new
            lam[i] += q * (gens[j] // h)
    return tuple(i64(v) for v in lam)


def _rep_in_pair(x: int, a: int, b: int) -> tuple[int, int]:
    # x in <a, b>, gcd(a, b) = 1
    beta = (x * pow(b, -1, a)) % a if a > 1 else 0
    alpha, rem = divmod(x - beta * b, a)
    assert rem == 0 and alpha >= 0
    return alpha, beta


def _semigroup_difference(gens: tuple[int, int]) -> tuple[int, int]:
    # (alpha0 + 1)*m and alpha0*m both lie in S'; subtract their representations
    m = gcd(*gens)
    a, b = gens[0] // m, gens[1] // m
    alpha0 = conductor_bound(gens).alpha0
    hi = _rep_in_pair(alpha0 + 1, a, b)
    lo = _rep_in_pair(alpha0, a, b)
    return i64(hi[0] - lo[0]), i64(hi[1] - lo[1])


def bezout_certificate(gens: Iterable[int], mode: str = "fold") -> BezoutCertificate:
    """Integers lambda_i with sum(lambda_i * a_i) = gcd(a).

    mode="fold" runs the extended Euclidean algorithm left to right;
    mode="semigroup" (two generators only) subtracts semigroup
    representations of (alpha0 + 1)*m and alpha0*m.
    """
    values = parse_generators(gens)
    m = _gcd_all(values)
    if mode == "fold":
        coeffs = _fold(values)
    elif mode == "semigroup":
        if len(values) != 2:
            raise ValueError("semigroup mode needs exactly two generators")
        coeffs = _semigroup_difference(values)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    cert = BezoutCertificate(values, coeffs, m)
    assert cert.validate()
    return cert


@dataclass(frozen=True)
class ConductorBound:
    m: int
    alpha0: int


def conductor_bound(gens: Iterable[int]) -> ConductorBound:
    """Least alpha0 with alpha*m in S' for every alpha >= alpha0.

    Dividing by m gives a numerical semigroup S; alpha*m in S' iff alpha in
    S, so alpha0 = F(S) + 1 exactly.
    """
    values = parse_generators(gens)
    m = _gcd_all(values)
    S = core.normalize([v // m for v in values])
    return ConductorBound(m, _base_frobenius(S) + 1)


def conductor_window_ok(gens: Iterable[int], bound: ConductorBound | None = None) -> bool:
    """(alpha0 - 1)*m is missing and alpha0*m .. (alpha0 + mult)*m are present."""
    S = core.normalize(gens)
    bound = bound or conductor_bound(gens)
    m, a0 = bound.m, bound.alpha0
    if a0 > 0 and core.contains(S, (a0 - 1) * m):
        return False
    window = np.arange(a0, a0 + S.reduced.multiplicity + 1, dtype=np.int64) * m
    return bool(core.contains_many(S, window).all())
