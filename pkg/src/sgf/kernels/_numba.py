"""Compiled kernels (numba nopython mode).

All arrays are int64; INF marks a residue class the generators never reach
(only possible while the running gcd is > 1). Callers guarantee that
(multiplicity - 1) * max(gens) + max(gens) fits in int64, so no kernel
addition can wrap.
"""
import numpy as np
from numba import njit

INF = np.iinfo(np.int64).max


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def _add_generator(ap, m, g):
    # Round-robin relaxation: along each cycle of r -> r + g (mod m), start at
    # the cycle minimum and walk once around, keeping running minima.
    step = g % m
    if step == 0:
        return
    d = _gcd(m, step)
    cycle = m // d
    for p in range(d):
        best = ap[p]
        best_r = p
        r = p
        for _ in range(cycle - 1):
            r = (r + step) % m
            if ap[r] < best:
                best = ap[r]
                best_r = r
        if best == INF:
            continue
        cur = best
        r = best_r
        for _ in range(cycle - 1):
            r2 = (r + step) % m
            cand = cur + g
            if ap[r2] < cand:
                cur = ap[r2]
            else:
                cur = cand
                ap[r2] = cand
            r = r2


@njit(cache=True)
def apery(gens):
    """Apéry table modulo gens[0] and the minimality mask of gens.

    gens must be strictly increasing with gens[0] >= 1. A generator is kept
    iff it is not already generated by the smaller ones, which (since only
    smaller generators can contribute) is exactly minimality.
    """
    n = gens.shape[0]
    m = gens[0]
    ap = np.empty(m, dtype=np.int64)
    for r in range(m):
        ap[r] = INF
    ap[0] = 0
    minimal = np.zeros(n, dtype=np.bool_)
    minimal[0] = True
    for i in range(1, n):
        g = gens[i]
        if ap[g % m] <= g:
            continue
        minimal[i] = True
        _add_generator(ap, m, g)
    return ap, minimal


@njit(cache=True)
def sieve(gens, bound):
    """reachable[x] for 0 <= x <= bound by forward dynamic programming."""
    reach = np.zeros(bound + 1, dtype=np.bool_)
    reach[0] = True
    k = gens.shape[0]
    for x in range(1, bound + 1):
        for i in range(k):
            g = gens[i]
            if g <= x and reach[x - g]:
                reach[x] = True
                break
    return reach


@njit(cache=True)
def _frobenius_genus(ap, m):
    top = 0
    genus = 0
    for r in range(m):
        if ap[r] > top:
            top = ap[r]
        genus += ap[r] // m
    return top - m, genus


@njit(cache=True)
def _type(ap, m, gens, n):
    t = 0
    for r in range(1, m):
        x = ap[r] - m
        ok = True
        for i in range(1, n):
            y = x + gens[i]
            if y < ap[y % m]:
                ok = False
                break
        if ok:
            t += 1
    return t


@njit(cache=True)
def wilf_scan(max_gen, max_dim, max_witnesses):
    """Every minimal numerical semigroup with generators in [2, max_gen] and
    embedding dimension 2..max_dim, checked against n*|E| >= F + 1.

    Returns (per_dim counts, skipped_non_numerical, skipped_non_minimal,
    violations[max_witnesses, max_dim], n_violations, tightest_gens,
    tightest_num, tightest_den).
    """
    per_dim = np.zeros(max_dim + 1, dtype=np.int64)
    violations = np.zeros((max_witnesses, max_dim), dtype=np.int64)
    n_viol = 0
    skip_gcd = 0
    skip_min = 0
    tight = np.zeros(max_dim, dtype=np.int64)
    t_num = 1
    t_den = 0
    ap = np.empty(max_gen, dtype=np.int64)
    idx = np.zeros(max_dim, dtype=np.int64)
    gens = np.zeros(max_dim, dtype=np.int64)
    for dim in range(2, max_dim + 1):
        if max_gen - 1 < dim:
            break
        for i in range(dim):
            idx[i] = 2 + i
        while True:
            for i in range(dim):
                gens[i] = idx[i]
            g = gens[0]
            for i in range(1, dim):
                g = _gcd(g, gens[i])
            if g != 1:
                skip_gcd += 1
            else:
                m = gens[0]
                for r in range(m):
                    ap[r] = INF
                ap[0] = 0
                minimal = True
                for i in range(1, dim):
                    if ap[gens[i] % m] <= gens[i]:
                        minimal = False
                        break
                    _add_generator(ap, m, gens[i])
                if not minimal:
                    skip_min += 1
                else:
                    per_dim[dim] += 1
                    f, genus = _frobenius_genus(ap, m)
                    e = f + 1 - genus
                    num = dim * e
                    den = f + 1
                    if num < den:
                        if n_viol < max_witnesses:
                            for i in range(dim):
                                violations[n_viol, i] = gens[i]
                        n_viol += 1
                    if t_den == 0 or num * t_den < t_num * den:
                        t_num = num
                        t_den = den
                        for i in range(max_dim):
                            tight[i] = gens[i] if i < dim else 0
            # next combination of dim values from [2, max_gen]
            pos = dim - 1
            while pos >= 0 and idx[pos] == max_gen - (dim - 1 - pos):
                pos -= 1
            if pos < 0:
                break
            idx[pos] += 1
            for i in range(pos + 1, dim):
                idx[i] = idx[i - 1] + 1
    return per_dim, skip_gcd, skip_min, violations, n_viol, tight, t_num, t_den


@njit(cache=True)
def _reduced_f_type(red, ap):
    # red: three values, not necessarily sorted or minimal
    a = red.copy()
    a.sort()
    if a[0] == 1:
        return -1, 1
    uniq = np.empty(3, dtype=np.int64)
    n = 0
    for i in range(3):
        if n == 0 or a[i] != uniq[n - 1]:
            uniq[n] = a[i]
            n += 1
    m = uniq[0]
    for r in range(m):
        ap[r] = INF
    ap[0] = 0
    kept = np.empty(3, dtype=np.int64)
    kept[0] = m
    nk = 1
    for i in range(1, n):
        if ap[uniq[i] % m] <= uniq[i]:
            continue
        kept[nk] = uniq[i]
        nk += 1
        _add_generator(ap, m, uniq[i])
    f, _ = _frobenius_genus(ap, m)
    return f, _type(ap, m, kept, nk)


@njit(cache=True)
def johnson_sweep(max_gen, max_witnesses):
    """One Johnson reduction step on every reducible minimal numerical triple
    a < b < c <= max_gen, checked against direct Frobenius and type.

    Pivot: the generator whose complement has the largest gcd d > 1, ties to
    the smallest pivot. Returns (reducible, mismatches[max_witnesses, 6],
    n_mismatch) with rows (a, b, c, F, F_johnson, type_equal).
    """
    ap = np.empty(max_gen + 1, dtype=np.int64)
    gens = np.zeros(3, dtype=np.int64)
    red = np.zeros(3, dtype=np.int64)
    bad = np.zeros((max_witnesses, 6), dtype=np.int64)
    n_bad = 0
    reducible = 0
    for a in range(2, max_gen + 1):
        for b in range(a + 1, max_gen + 1):
            gab = _gcd(a, b)
            for c in range(b + 1, max_gen + 1):
                if _gcd(gab, c) != 1:
                    continue
                d_a = _gcd(b, c)
                d_b = _gcd(a, c)
                d_c = gab
                d = d_a
                piv = 0
                if d_b > d:
                    d = d_b
                    piv = 1
                if d_c > d:
                    d = d_c
                    piv = 2
                if d < 2:
                    continue
                # minimality of the triple
                for r in range(a):
                    ap[r] = INF
                ap[0] = 0
                if ap[b % a] <= b:
                    continue
                _add_generator(ap, a, b)
                if ap[c % a] <= c:
                    continue
                _add_generator(ap, a, c)
                reducible += 1
                gens[0] = a
                gens[1] = b
                gens[2] = c
                f, _ = _frobenius_genus(ap, a)
                t = _type(ap, a, gens, 3)
                p = gens[piv]
                for i in range(3):
                    red[i] = gens[i] if i == piv else gens[i] // d
                f_red, t_red = _reduced_f_type(red, ap)
                f_j = d * f_red + p * (d - 1)
                if f_j != f or t_red != t:
                    if n_bad < max_witnesses:
                        bad[n_bad, 0] = a
                        bad[n_bad, 1] = b
                        bad[n_bad, 2] = c
                        bad[n_bad, 3] = f
                        bad[n_bad, 4] = f_j
                        bad[n_bad, 5] = 1 if t_red == t else 0
                    n_bad += 1
    return reducible, bad, n_bad
