"""Shared plumbing for parameter sweeps: the report record, triple
enumeration and a deterministic thread-pool map."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class ScanReport:
    kind: str
    params: dict
    examined: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": dict(self.params),
            "examined": self.examined,
            "skipped": self.skipped,
            "counterexamples": list(self.counterexamples),
            "stats": dict(self.stats),
        }


def in_span(x: int, a: int, b: int) -> bool:
    """x in <a, b> by direct search over multiples of b (no coprimality needed)."""
    if x < 0:
        return False
    for t in range(x // b + 1):
        if (x - t * b) % a == 0:
            return True
    return False


def coprime_pairs(max_a2: int) -> list[tuple[int, int]]:
    return [(a1, a2) for a2 in range(3, max_a2 + 1) for a1 in range(2, a2) if gcd(a1, a2) == 1]


def triples_for_pair(a1: int, a2: int, max_a3: int) -> tuple[list[int], int]:
    """Third generators a3 <= max_a3 making <a1, a2, a3> minimally 3-generated.

    Returns (valid a3 values ascending, number of candidates skipped as
    non-minimal). Candidates are 2 <= a3 <= max_a3, a3 not in {a1, a2}.
    """
    good = []
    skipped = 0
    inv = pow(a2, -1, a1)
    for a3 in range(2, max_a3 + 1):
        if a3 == a1 or a3 == a2:
            continue
        # a3 in <a1, a2> iff its unique a2-coefficient below a1 fits
        if ((a3 * inv) % a1) * a2 <= a3:
            skipped += 1
            continue
        if in_span(a1, a3, a2) or in_span(a2, a1, a3):
            skipped += 1
            continue
        good.append(a3)
    return good, skipped


def minimal_triples(max_a2: int, max_a3: int) -> Iterator[tuple[int, int, int]]:
    for a1, a2 in coprime_pairs(max_a2):
        for a3 in triples_for_pair(a1, a2, max_a3)[0]:
            yield a1, a2, a3


def ordered_map(fn: Callable[[T], R], units: Sequence[T], workers: int = 1,
                progress: Callable[[int, int], None] | None = None) -> list[R]:
    """fn over units, results in unit order whatever the worker count."""
    total = len(units)
    if workers <= 1:
        out = []
        for n, u in enumerate(units, 1):
            out.append(fn(u))
            if progress:
                progress(n, total)
        return out
    with ThreadPoolExecutor(max_workers=workers) as pool:
        out = []
        for n, r in enumerate(pool.map(fn, units), 1):
            out.append(r)
            if progress:
                progress(n, total)
        return out


def chunked(items: Iterable[T], size: int) -> list[list[T]]:
    items = list(items)
    return [items[i:i + size] for i in range(0, len(items), size)]
