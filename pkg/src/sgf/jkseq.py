"""Adding a third generator a3 to Q = <a1, a2>.

a3 is a gap of Q, so a3 = a1*a2 - k*a2 - j*a1 with 1 <= k < a1, 1 <= j < a2.
Multiples i*a3 either fall into Q or keep a (k_i, j_i) representation; how
that representation moves as i grows decides which gaps of Q survive in
S = <a1, a2, a3> and which can be pseudo-Frobenius.

Conventions used throughout:

* origin sequence A(a3): the dominance grid {(k', j') : k' <= k, j' <= j}
  of NC values; a3 is its minimum and F(Q) its maximum.
* upgrade chain  F_i = a1*a2 - a1 - (i*k + 1)*a2,  F_i + k*a2 = F_{i-1}
* downgrade chain F_i = a1*a2 - (i*j + 1)*a1 - a2, F_i + j*a1 = F_{i-1}
  Both are indexed from 1 and truncated to the m - 1 multiples of a3 that
  lie outside Q (m = least multiplier with m*a3 in Q).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Callable

from . import core, oracle
from .errors import BadFamilyParams, HypothesisFailed, NotMinimal, SemigroupOverflow
from .sweep import ScanReport, coprime_pairs, in_span, ordered_map, triples_for_pair
from .sylvester import CoprimePair, nc_representation, pair as make_pair

ORIGIN = "origin"
UPGRADE = "upgrade"
DOWNGRADE = "downgrade"
STAGE2 = "stage2"
IN_Q = "in_q"


@dataclass(frozen=True)
class ThirdGenContext:
    pair: CoprimePair
    a3: int
    k: int
    j: int

    @property
    def a1(self) -> int:
        return self.pair.a1

    @property
    def a2(self) -> int:
        return self.pair.a2

    @property
    def generators(self) -> tuple[int, int, int]:
        return self.a1, self.a2, self.a3

    @cached_property
    def semigroup(self) -> core.SemigroupDescriptor:
        return core.normalize(self.generators)

    def in_s(self, x: int) -> bool:
        return core.contains(self.semigroup, x)


def jk_of(p: CoprimePair | tuple[int, int], a3: int) -> ThirdGenContext:
    if not isinstance(p, CoprimePair):
        p = make_pair(*p)
    a1, a2 = p.a1, p.a2
    if a3 < 1 or p.contains(a3):
        raise NotMinimal(f"{a3} lies in <{a1}, {a2}>")
    if in_span(a1, a2, a3) or in_span(a2, a1, a3):
        raise NotMinimal(f"<{a1}, {a2}, {a3}> is not minimally generated")
    rep = nc_representation(p, a3)
    return ThirdGenContext(p, a3, rep.k, rep.j)


@dataclass(frozen=True)
class OriginSequence:
    origin: ThirdGenContext
    members: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return in_origin_grid(self.origin, x)


def in_origin_grid(ctx: ThirdGenContext, x: int) -> bool:
    if not 0 < x < ctx.pair.product or ctx.pair.contains(x):
        return False
    rep = nc_representation(ctx.pair, x)
    return rep.k <= ctx.k and rep.j <= ctx.j


def origin_sequence(ctx: ThirdGenContext) -> OriginSequence:
    n = ctx.pair.product
    members = sorted(n - kk * ctx.a2 - jj * ctx.a1
                     for kk in range(1, ctx.k + 1) for jj in range(1, ctx.j + 1))
    return OriginSequence(ctx, tuple(members))


@dataclass(frozen=True)
class Step:
    i: int
    kind: str
    k: int | None = None
    j: int | None = None


@dataclass(frozen=True)
class StageTrace:
    context: ThirdGenContext
    reading: str
    steps: tuple[Step, ...]

    @property
    def m(self) -> int:
        return self.steps[-1].i

    def kinds(self) -> list[str]:
        return [s.kind for s in self.steps]

    @property
    def stage2_steps(self) -> list[Step]:
        return [s for s in self.steps if s.kind == STAGE2]


def stage_trace(ctx: ThirdGenContext, reading: str = "raw") -> StageTrace:
    """Classify i*a3 for i = 1..m.

    reading="raw" tests the scaled coefficients (i*k, i*j) directly:
    i*k < a1 means an upgrade (only j wraps), i*j < a2 a downgrade, and both
    >= their bound with i*a3 outside Q is stage 2. reading="cumulative" adds
    (k, j) to the previous step's actual representation instead, allowing a
    single wraparound per step.
    """
    if reading not in ("raw", "cumulative"):
        raise ValueError(f"unknown reading {reading!r}")
    a1, a2, a3, k, j = ctx.a1, ctx.a2, ctx.a3, ctx.k, ctx.j
    p = ctx.pair
    steps = [Step(1, ORIGIN, k, j)]
    i = 1
    prev_k, prev_j = k, j
    while True:
        i += 1
        x = i * a3
        if x >= (1 << 62):
            raise SemigroupOverflow(f"{i}*{a3} left the safe range")
        if p.contains(x):
            steps.append(Step(i, IN_Q))
            break
        if reading == "raw":
            kk, jj = i * k, i * j
            wrap_k, wrap_j = (i - 1) * a1, (i - 1) * a2
        else:
            kk, jj = prev_k + k, prev_j + j
            wrap_k, wrap_j = a1, a2
        if kk < a1:
            step = Step(i, UPGRADE, kk, jj - wrap_j)
        elif jj < a2:
            step = Step(i, DOWNGRADE, kk - wrap_k, jj)
        else:
            rep = nc_representation(p, x)
            step = Step(i, STAGE2, rep.k, rep.j)
        steps.append(step)
        prev_k, prev_j = step.k, step.j
    return StageTrace(ctx, reading, tuple(steps))


def ert_hypothesis(ctx: ThirdGenContext) -> tuple[bool, int | None]:
    """Does every alpha*a3 (alpha > 1) lie in the origin grid or in Q?

    Only alpha*a3 <= F(Q) need checking; beyond it everything is in Q.
    """
    f_q = ctx.pair.frobenius
    alpha = 2
    while alpha * ctx.a3 <= f_q:
        x = alpha * ctx.a3
        if not ctx.pair.contains(x) and not in_origin_grid(ctx, x):
            return False, alpha
        alpha += 1
    return True, None


def starter_values(ctx: ThirdGenContext) -> tuple[int, int]:
    """(F_0, F_1) = (a1*a2 - (k+1)*a2 - a1, a1*a2 - a2 - (j+1)*a1)."""
    n = ctx.pair.product
    return n - (ctx.k + 1) * ctx.a2 - ctx.a1, n - ctx.a2 - (ctx.j + 1) * ctx.a1


def ert_candidates(ctx: ThirdGenContext) -> tuple[int | None, int | None]:
    """The two starter candidates; None marks a non-positive value."""
    holds, alpha = ert_hypothesis(ctx)
    if not holds:
        raise HypothesisFailed(f"{alpha}*{ctx.a3} = {alpha * ctx.a3} is in neither the origin grid nor Q")
    f0, f1 = starter_values(ctx)
    return (f0 if f0 > 0 else None, f1 if f1 > 0 else None)


@dataclass(frozen=True)
class CandidateChain:
    direction: str
    step: int  # k*a2 for upgrade, j*a1 for downgrade
    values: tuple[int, ...]
    first_gap_index: int | None
    candidate: int | None


def chain_value(ctx: ThirdGenContext, direction: str, i: int) -> int:
    n = ctx.pair.product
    if direction == UPGRADE:
        return n - ctx.a1 - (i * ctx.k + 1) * ctx.a2
    return n - (i * ctx.j + 1) * ctx.a1 - ctx.a2


def _chain(ctx: ThirdGenContext, direction: str, length: int) -> CandidateChain:
    values = []
    first = None
    for i in range(1, length + 1):
        v = chain_value(ctx, direction, i)
        if v <= 0:
            break
        values.append(v)
        if first is None and not ctx.in_s(v):
            first = i
    step = ctx.k * ctx.a2 if direction == UPGRADE else ctx.j * ctx.a1
    return CandidateChain(direction, step, tuple(values), first,
                          values[first - 1] if first is not None else None)


def candidate_chains(ctx: ThirdGenContext, trace: StageTrace | None = None) -> tuple[CandidateChain, CandidateChain]:
    trace = trace or stage_trace(ctx)
    length = trace.m - 1
    return _chain(ctx, UPGRADE, length), _chain(ctx, DOWNGRADE, length)


def is_pf_candidate(ctx: ThirdGenContext, c: int) -> bool:
    """c not in S and c + a1, c + a2, c + a3 in S."""
    if ctx.in_s(c):
        return False
    return all(ctx.in_s(c + g) for g in ctx.generators)


@dataclass(frozen=True)
class CandidateReport:
    context: ThirdGenContext
    ert_applies: bool
    proposed: tuple[int, ...]
    candidates: tuple[int, ...]
    rejected: tuple[int, ...]
    notes: tuple[str, ...]
    oracle_pf: tuple[int, ...]
    verdict: str


def containment_verdict(candidates, pf) -> str:
    c, t = set(candidates), set(pf)
    if c == t:
        return "equal"
    if c < t:
        return "subset"
    return "not_contained"


def pf_candidates(ctx: ThirdGenContext) -> CandidateReport:
    notes = []
    holds, _ = ert_hypothesis(ctx)
    if holds:
        proposed = [v for v in starter_values(ctx)]
    else:
        up, down = candidate_chains(ctx)
        proposed = [ch.candidate for ch in (up, down) if ch.candidate is not None]
    positive = []
    for v in proposed:
        if v <= 0:
            notes.append(f"discarded non-positive candidate {v}")
        elif v not in positive:
            positive.append(v)
    kept = sorted(v for v in positive if is_pf_candidate(ctx, v))
    rejected = sorted(v for v in positive if v not in kept)
    pf = oracle.oracle_pf(ctx.generators).values
    return CandidateReport(ctx, holds, tuple(proposed), tuple(kept), tuple(rejected),
                           tuple(notes), tuple(pf), containment_verdict(kept, pf))


# -- closed-form families ---------------------------------------------------

def family_arith(a: int, h: int, d: int) -> tuple[int, int]:
    """Candidate pair for S = <a, h*a + d, h*a + 2*d> (a odd, gcd(a, d) = 1).

    Uses Q = <a, h*a + 2*d> and a3 = h*a + d, whose representation is
    k = (a - 1)/2, j = h*(a - 1)/2 + d.
    """
    if a < 3 or a % 2 == 0 or h < 1 or d < 1 or gcd(a, d) != 1:
        raise BadFamilyParams(f"need odd a >= 3, h >= 1, d >= 1, gcd(a, d) = 1; got ({a}, {h}, {d})")
    b = h * a + 2 * d
    half = (a - 1) // 2
    first = a * b - a - (half + 1) * b
    second = a * b - (h * half + d + 1) * a - b
    return first, second


def family_arith_context(a: int, h: int, d: int) -> ThirdGenContext:
    family_arith(a, h, d)
    try:
        return jk_of((a, h * a + 2 * d), h * a + d)
    except NotMinimal as exc:
        raise BadFamilyParams(str(exc)) from None


def family_arith_check(a: int, h: int, d: int) -> dict:
    pair_values = family_arith(a, h, d)
    gens = tuple(sorted(family_arith_context(a, h, d).generators))
    pf = oracle.oracle_pf(gens).values
    return {
        "generators": list(gens),
        "values": list(pair_values),
        "oracle_pf": list(pf),
        "contained": set(pf) <= set(pair_values),
    }


def _ss_params(a: int, i: int) -> tuple[int, int]:
    if i not in (1, 2):
        raise BadFamilyParams(f"i must be 1 or 2, got {i}")
    k, j = divmod(a, 3)
    # k >= 1 also forces a >= 4, which keeps i*a + 3 outside <a, a + 1>
    if j == 0 or k < 1:
        raise BadFamilyParams(f"need a = 3k + j with k >= 1, j in {{1, 2}}; got a = {a}")
    return k, j


def family_ss(a: int, i: int) -> int:
    """a^2 - (k*(3 - i) + 1)*a - 1 for S = <a, a + 1, i*a + 3>, a = 3k + j."""
    k, _ = _ss_params(a, i)
    return a * a - (k * (3 - i) + 1) * a - 1


def family_ss_intermediate(a: int, i: int) -> int:
    """The closed form given for F_{k-1} in each of the four (i, j) cases."""
    k, j = _ss_params(a, i)
    if i == 1 and j == 1:
        return a + k * (a + 3)
    if i == 2 and j == 1:
        return k * (2 * a + 3)
    if i == 1 and j == 2:
        return k * (a + 3) + a + a + 1
    return a + 1 + k * (2 * a + 3)


def family_ss_check(a: int, i: int) -> dict:
    k, j = _ss_params(a, i)
    value = family_ss(a, i)
    ctx = jk_of((a, a + 1), i * a + 3)
    f_prev = chain_value(ctx, DOWNGRADE, k - 1)
    f_k = chain_value(ctx, DOWNGRADE, k)
    pf = oracle.oracle_pf(ctx.generators).values
    return {
        "generators": list(ctx.generators),
        "k": k,
        "j": j,
        "rep": [ctx.k, ctx.j],
        "value": value,
        "f_k_minus_1": f_prev,
        "f_k": f_k,
        "f_k_minus_1_in_s": ctx.in_s(f_prev),
        "f_k_in_s": ctx.in_s(f_k),
        "f_k_minus_1_formula": family_ss_intermediate(a, i),
        "oracle_pf": list(pf),
        "in_pf": value in pf,
    }


# -- stage-2 conjecture sweep -----------------------------------------------

def _direct_stage2_check(a1: int, a2: int, a3: int, i: int, k: int, j: int) -> bool:
    # independent re-verification: raw inequalities plus brute-force non-membership
    return i * k >= a1 and i * j >= a2 and not in_span(i * a3, a1, a2)


def _stage2_unit(args) -> tuple[int, int, list[dict]]:
    a1, a2, max_a3, reading = args
    a3s, skipped = triples_for_pair(a1, a2, max_a3)
    found = []
    for a3 in a3s:
        ctx = jk_of((a1, a2), a3)
        trace = stage_trace(ctx, reading)
        for s in trace.stage2_steps:
            if not _direct_stage2_check(a1, a2, a3, s.i, ctx.k, ctx.j):
                raise AssertionError(f"stage-2 witness failed re-verification: {(a1, a2, a3, s.i)}")
            found.append({"a1": a1, "a2": a2, "a3": a3, "i": s.i, "k": ctx.k, "j": ctx.j,
                          "m": trace.m, "rep_i": [s.k, s.j]})
    return len(a3s), skipped, found


def stage2_scan(max_a2: int, max_a3: int, workers: int = 1, reading: str = "raw",
                progress: Callable[[int, int], None] | None = None) -> ScanReport:
    """Look for stage-2 multiples over every minimal triple in range."""
    if max_a2 < 3 or max_a3 < 3:
        raise ValueError("bounds must be >= 3")
    units = [(a1, a2, max_a3, reading) for a1, a2 in coprime_pairs(max_a2)]
    results = ordered_map(_stage2_unit, units, workers, progress)
    report = ScanReport("stage2", {"max_a2": max_a2, "max_a3": max_a3, "reading": reading})
    witnesses = []
    for examined, skipped, found in results:
        report.examined += examined
        report.skipped += skipped
        witnesses.extend(found)
    witnesses.sort(key=lambda w: (w["a1"], w["a2"], w["a3"], w["i"]))
    report.counterexamples = witnesses
    report.stats = {
        "pairs": len(units),
        "triples_with_stage2": len({(w["a1"], w["a2"], w["a3"]) for w in witnesses}),
    }
    return report
