"""Checked signed 64-bit integer helpers and the extended Euclidean algorithm.

Python ints never wrap, so "checked" here means: any value outside
[-2**63, 2**63) raises SemigroupOverflow instead of being silently accepted.
"""
from __future__ import annotations

import os

from .errors import MemoryBudgetExceeded, SemigroupOverflow

I64_MIN = -(1 << 63)
I64_MAX = (1 << 63) - 1
# two-generator analyses require a1*a2 below this
PAIR_PRODUCT_LIMIT = 1 << 62

DEFAULT_MEMORY_CAP = 1 << 28


def memory_cap() -> int:
    raw = os.environ.get("SGF_MEMORY_CAP")
    if not raw:
        return DEFAULT_MEMORY_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise MemoryBudgetExceeded(f"SGF_MEMORY_CAP is not an integer: {raw!r}") from None
    if cap < 1:
        raise MemoryBudgetExceeded(f"SGF_MEMORY_CAP must be positive, got {cap}")
    return cap


def check_table_size(size: int, what: str = "table") -> None:
    cap = memory_cap()
    if size > cap:
        raise MemoryBudgetExceeded(f"{what} needs {size} entries, cap is {cap} (SGF_MEMORY_CAP)")


def i64(x: int) -> int:
    if x < I64_MIN or x > I64_MAX:
        raise SemigroupOverflow(f"{x} does not fit in a signed 64-bit integer")
    return x


def cadd(a: int, b: int) -> int:
    return i64(a + b)


def csub(a: int, b: int) -> int:
    return i64(a - b)


def cmul(a: int, b: int) -> int:
    return i64(a * b)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def centered_mod(x: int, n: int) -> int:
    """Representative of x mod n in (-n/2, n/2]."""
    r = x % n
    if 2 * r > n:
        r -= n
    return r
