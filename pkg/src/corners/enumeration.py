"""Brute-force enumeration of partitions and partition pairs.

Everything here is the slow, obviously-correct oracle the other routes
are checked against.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional

from .partition import Partition, contains, num_corners, staircase

__all__ = [
    "CountTable",
    "count_pairs",
    "count_pairs_bounded",
    "max_corners",
    "nu",
    "pairs_of",
    "partition_count",
    "partitions_of",
    "triangle",
]


def max_corners(n: int) -> int:
    """Largest k with binomial(k+1, 2) <= n."""
    k = 0
    while comb(k + 2, 2) <= n:
        k += 1
    return k


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in reverse-lexicographic order.

    ``max_part`` restricts the largest part.  Lazy: nothing is materialized
    beyond the current partition.
    """
    if n < 0:
        return
    if n == 0:
        yield Partition._trusted(())
        return
    top = n if max_part is None else min(n, max_part)
    if top < 1:
        return
    trusted = Partition._trusted
    # ZS1 (Zoghbi & Stojmenovic): x[1..m] is the current partition,
    # x[1..h] its parts greater than 1, every slot past h holds a 1.
    x = [1] * (n + 1)
    q, r = divmod(n, top)
    m = 0
    for _ in range(q):
        m += 1
        x[m] = top
    if r:
        m += 1
        x[m] = r
    h = q if top > 1 else 0
    if r > 1:
        h += 1
    yield trusted(x[1 : m + 1])
    while h > 0:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield trusted(x[1 : m + 1])


def partition_count(n: int) -> int:
    return sum(1 for _ in partitions_of(n))


def nu(n: int, k: int) -> int:
    """Number of partitions of ``n`` with exactly ``k`` corners, by filtering."""
    return sum(1 for lam in partitions_of(n) if num_corners(lam) == k)


def _row(n: int) -> list[int]:
    row = [0] * (max_corners(n) + 1)
    for lam in partitions_of(n):
        row[num_corners(lam)] += 1
    return row


@dataclass(frozen=True)
class CountTable:
    """The triangle of nu(n; k), 0 <= n <= max_n, 0 <= k <= max_corners(n)."""

    max_n: int
    rows: tuple[tuple[int, ...], ...] = field(repr=False)

    def __getitem__(self, key: tuple[int, int]) -> int:
        n, k = key
        if not 0 <= n <= self.max_n:
            raise KeyError(key)
        row = self.rows[n]
        if not 0 <= k < len(row):
            raise KeyError(key)
        return row[k]

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        return {(n, k): v for n, row in enumerate(self.rows) for k, v in enumerate(row)}

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]


def _threads() -> int:
    raw = os.environ.get("CORNERS_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def triangle(max_n: int, workers: Optional[int] = None) -> CountTable:
    """Tabulate nu(n; k) by exhaustive enumeration.

    With more than one worker the rows are computed in a process pool;
    the result is identical to the sequential one.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    workers = _threads() if workers is None else workers
    ns = range(max_n + 1)
    if workers > 1 and max_n >= 30:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row, ns))
    else:
        rows = [_row(n) for n in ns]
    return CountTable(max_n, tuple(tuple(r) for r in rows))


def pairs_of(m: int) -> Iterator[tuple[Partition, Partition]]:
    """Every ordered pair (alpha, beta) with |alpha| + |beta| = m, once each."""
    for a in range(m, -1, -1):
        for alpha in partitions_of(a):
            for beta in partitions_of(m - a):
                yield alpha, beta


def count_pairs(m: int) -> int:
    return sum(1 for _ in pairs_of(m))


def count_pairs_bounded(m: int, k: int) -> int:
    """Ordered pairs with |alpha| + |beta| = m and l(alpha) + l(beta) <= k."""
    return sum(1 for alpha, beta in pairs_of(m) if len(alpha) + len(beta) <= k)


def count_staircase_free(n: int, k: int) -> int:
    """Partitions of n with k corners whose diagram avoids staircase(k + 1)."""
    rho = staircase(k + 1)
    return sum(
        1 for lam in partitions_of(n) if num_corners(lam) == k and not contains(lam, rho)
    )
