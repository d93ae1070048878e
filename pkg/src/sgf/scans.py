"""Exhaustive sweeps: Wilf inequality, the starter-candidate containment, and
core-versus-oracle agreement."""
from __future__ import annotations

from typing import Callable

from . import core, jkseq, kernels, oracle
from .sweep import ScanReport, coprime_pairs, ordered_map, triples_for_pair

MAX_WITNESSES = 1000


def wilf_scan(max_gen: int, max_dim: int) -> ScanReport:
    """n*|E| >= F + 1 on every minimal numerical semigroup with generators in
    [2, max_gen] and embedding dimension 2..max_dim (compiled kernel)."""
    if max_gen < 3 or max_dim < 2:
        raise ValueError("need max_gen >= 3 and max_dim >= 2")
    per_dim, skip_gcd, skip_min, viol, n_viol, tight, t_num, t_den = kernels.wilf_scan(
        int(max_gen), int(max_dim), MAX_WITNESSES)
    report = ScanReport("wilf", {"max_gen": max_gen, "max_dim": max_dim})
    report.examined = int(per_dim.sum())
    report.skipped = int(skip_gcd + skip_min)
    report.counterexamples = [
        {"generators": [int(v) for v in row if v]} for row in viol[: min(int(n_viol), MAX_WITNESSES)]
    ]
    report.stats = {
        "per_dimension": {str(d): int(per_dim[d]) for d in range(2, max_dim + 1)},
        "skipped_non_numerical": int(skip_gcd),
        "skipped_non_minimal": int(skip_min),
        "violations": int(n_viol),
        "tightest": {"generators": [int(v) for v in tight if v], "ratio": [int(t_num), int(t_den)]},
        "backend": kernels.BACKEND,
    }
    return report


def _ert_unit(args) -> tuple[int, int, int, list[dict]]:
    a1, a2, max_a3 = args
    a3s, skipped = triples_for_pair(a1, a2, max_a3)
    applies = 0
    bad = []
    for a3 in a3s:
        ctx = jkseq.jk_of((a1, a2), a3)
        holds, _ = jkseq.ert_hypothesis(ctx)
        if not holds:
            continue
        applies += 1
        allowed = set(jkseq.starter_values(ctx))
        pf = oracle.oracle_pf(ctx.generators).values
        if not set(pf) <= allowed:
            bad.append({"a1": a1, "a2": a2, "a3": a3, "k": ctx.k, "j": ctx.j,
                        "starters": sorted(allowed), "oracle_pf": list(pf)})
    return len(a3s), skipped, applies, bad


def ert_scan(max_a2: int, max_a3: int, workers: int = 1,
             progress: Callable[[int, int], None] | None = None) -> ScanReport:
    """Whenever the grid hypothesis holds, is T(S) inside the two starters?"""
    units = [(a1, a2, max_a3) for a1, a2 in coprime_pairs(max_a2)]
    report = ScanReport("ert", {"max_a2": max_a2, "max_a3": max_a3})
    applies = 0
    for examined, skipped, n_app, bad in ordered_map(_ert_unit, units, workers, progress):
        report.examined += examined
        report.skipped += skipped
        applies += n_app
        report.counterexamples.extend(bad)
    report.stats = {"hypothesis_holds": applies}
    return report


def _equivalence_unit(args) -> tuple[int, list[dict]]:
    a1, a2, max_a3 = args
    a3s, _ = triples_for_pair(a1, a2, max_a3)
    bad = []
    for a3 in a3s:
        gens = (a1, a2, a3)
        S = core.normalize(gens)
        g_core, g_or = core.gaps(S), oracle.oracle_gaps(gens)
        pf_core, pf_or = core.pseudo_frobenius(S), oracle.oracle_pf(gens)
        if g_core != g_or or pf_core != pf_or or core.frobenius(S) != oracle.oracle_frobenius(gens):
            bad.append({"generators": list(gens)})
    return len(a3s), bad


def oracle_equivalence_scan(max_a2: int, max_a3: int, workers: int = 1) -> ScanReport:
    units = [(a1, a2, max_a3) for a1, a2 in coprime_pairs(max_a2)]
    report = ScanReport("equivalence", {"max_a2": max_a2, "max_a3": max_a3})
    for examined, bad in ordered_map(_equivalence_unit, units, workers):
        report.examined += examined
        report.counterexamples.extend(bad)
    return report
