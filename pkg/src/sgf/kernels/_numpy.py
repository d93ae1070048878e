"""Pure-numpy fallback kernels, same signatures as the compiled ones.

Apéry tables come from vectorized Bellman-Ford relaxation (add every
generator to every entry, keep minima, repeat to a fixpoint) rather than the
round-robin walk; the sieve relaxes whole blocks of width g at a time. Both
are exact, just slower. Scans loop in Python over these per-item kernels.
"""
from itertools import combinations
from math import gcd

import numpy as np

INF = np.iinfo(np.int64).max


def _relax(ap: np.ndarray, gens, m: int) -> np.ndarray:
    reached = ap != INF
    while True:
        new = ap.copy()
        for g in gens:
            cand = np.roll(ap, g % m)
            cand[np.roll(reached, g % m)] += g
            np.minimum(new, cand, out=new)
        if np.array_equal(new, ap):
            return ap
        ap = new
        reached = ap != INF


def apery(gens: np.ndarray):
    n = gens.shape[0]
    m = int(gens[0])
    ap = np.full(m, INF, dtype=np.int64)
    ap[0] = 0
    minimal = np.zeros(n, dtype=np.bool_)
    minimal[0] = True
    kept = []
    for i in range(1, n):
        g = int(gens[i])
        if ap[g % m] <= g:
            continue
        minimal[i] = True
        kept.append(g)
        ap = _relax(ap, kept, m)
    return ap, minimal


def sieve(gens: np.ndarray, bound: int) -> np.ndarray:
    reach = np.zeros(bound + 1, dtype=np.bool_)
    reach[0] = True
    # blocks go upward, so reach[lo - g:hi - g] is final before it is shifted;
    # one pass therefore closes reach under +g
    for g in sorted(int(v) for v in gens):
        if g > bound:
            continue
        for lo in range(g, bound + 1, g):
            hi = min(lo + g, bound + 1)
            reach[lo:hi] |= reach[lo - g:hi - g]
    return reach


def _frobenius_genus(ap: np.ndarray, m: int):
    return int(ap.max()) - m, int((ap // m).sum())


def _type(ap: np.ndarray, m: int, gens) -> int:
    x = ap[1:] - m
    ok = np.ones(x.shape[0], dtype=np.bool_)
    for g in gens[1:]:
        y = x + g
        ok &= y >= ap[y % m]
    return int(ok.sum())


def wilf_scan(max_gen: int, max_dim: int, max_witnesses: int):
    per_dim = np.zeros(max_dim + 1, dtype=np.int64)
    violations = np.zeros((max_witnesses, max_dim), dtype=np.int64)
    n_viol = skip_gcd = skip_min = 0
    tight = np.zeros(max_dim, dtype=np.int64)
    t_num, t_den = 1, 0
    for dim in range(2, max_dim + 1):
        for combo in combinations(range(2, max_gen + 1), dim):
            g = 0
            for v in combo:
                g = gcd(g, v)
            if g != 1:
                skip_gcd += 1
                continue
            ap, minimal = apery(np.array(combo, dtype=np.int64))
            if not minimal.all():
                skip_min += 1
                continue
            per_dim[dim] += 1
            f, genus = _frobenius_genus(ap, combo[0])
            num, den = dim * (f + 1 - genus), f + 1
            if num < den:
                if n_viol < max_witnesses:
                    violations[n_viol, :dim] = combo
                n_viol += 1
            if t_den == 0 or num * t_den < t_num * den:
                t_num, t_den = num, den
                tight[:] = 0
                tight[:dim] = combo
    return per_dim, skip_gcd, skip_min, violations, n_viol, tight, t_num, t_den


def _f_type(values):
    vals = sorted(set(int(v) for v in values))
    if vals[0] == 1:
        return -1, 1
    ap, minimal = apery(np.array(vals, dtype=np.int64))
    kept = [v for v, keep in zip(vals, minimal) if keep]
    f, _ = _frobenius_genus(ap, vals[0])
    return f, _type(ap, vals[0], kept)


def johnson_sweep(max_gen: int, max_witnesses: int):
    bad = np.zeros((max_witnesses, 6), dtype=np.int64)
    n_bad = reducible = 0
    for a, b, c in combinations(range(2, max_gen + 1), 3):
        if gcd(gcd(a, b), c) != 1:
            continue
        ds = (gcd(b, c), gcd(a, c), gcd(a, b))
        d = max(ds)
        if d < 2:
            continue
        piv = ds.index(d)
        ap, minimal = apery(np.array((a, b, c), dtype=np.int64))
        if not minimal.all():
            continue
        reducible += 1
        f, _ = _frobenius_genus(ap, a)
        t = _type(ap, a, (a, b, c))
        gens = (a, b, c)
        red = [g if i == piv else g // d for i, g in enumerate(gens)]
        f_red, t_red = _f_type(red)
        f_j = d * f_red + gens[piv] * (d - 1)
        if f_j != f or t_red != t:
            if n_bad < max_witnesses:
                bad[n_bad] = (a, b, c, f, f_j, int(t_red == t))
            n_bad += 1
    return reducible, bad, n_bad
