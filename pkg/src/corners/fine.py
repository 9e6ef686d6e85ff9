"""Both sides of Fine's identity and the multiplicity-split count of pairs."""
from __future__ import annotations

from collections import Counter
from itertools import product
from math import comb, prod
from typing import Iterator

from .enumeration import partitions_of
from .errors import OutOfRange
from .partition import Partition, num_corners

__all__ = [
    "binomial",
    "decomposition_terms",
    "fine_lhs",
    "fine_rhs",
    "multiplicity_product",
    "nu_via_fine",
    "pairs_via_decomposition",
]


def binomial(a: int, b: int) -> int:
    """binomial(a, b), and 0 whenever b is outside 0..a."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def multiplicity_product(lam: Partition, r: int) -> int:
    """m_1(lam) * m_2(lam) * ... * m_r(lam); 1 when r == 0."""
    counts = Counter(lam)
    return prod(counts[i] for i in range(1, r + 1))


def fine_lhs(n: int, r: int) -> int:
    return sum(binomial(num_corners(lam), r) for lam in partitions_of(n))


def fine_rhs(n: int, r: int) -> int:
    return sum(multiplicity_product(lam, r) for lam in partitions_of(n))


def _check_window(n: int, k: int) -> None:
    if not comb(k + 1, 2) <= n < comb(k + 2, 2):
        raise OutOfRange(
            f"n = {n} is outside [{comb(k + 1, 2)}, {comb(k + 2, 2)}) for k = {k}"
        )


def nu_via_fine(n: int, k: int) -> int:
    """nu(n; k) as the sum of m_1...m_k over partitions of n with parts <= k."""
    _check_window(n, k)
    return sum(multiplicity_product(lam, k) for lam in partitions_of(n, max_part=k))


def _count_splits(vector: list[int]) -> int:
    # ordered (a, b) with a + b == vector, a and b nonnegative
    return sum(1 for _ in product(*(range(v + 1) for v in vector)))


def decomposition_terms(n: int, k: int) -> Iterator[tuple[Partition, int]]:
    """Each partition of n using every part 1..k, with its number of splits."""
    _check_window(n, k)
    for lam in partitions_of(n, max_part=k):
        counts = Counter(lam)
        if any(counts[i] == 0 for i in range(1, k + 1)):
            continue
        yield lam, _count_splits([counts[i] - 1 for i in range(1, k + 1)])


def pairs_via_decomposition(n: int, k: int) -> int:
    return sum(c for _, c in decomposition_terms(n, k))
