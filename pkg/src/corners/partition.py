"""Canonical integer partitions and the basic operations on them.

A :class:`Partition` is an immutable tuple of positive integers in weakly
decreasing order.  Rows beyond the length of a partition are read as 0.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping

from .errors import MalformedPartition, WrongCornerCount

__all__ = [
    "ExponentialForm",
    "Partition",
    "add",
    "conjugate",
    "contains",
    "from_multiplicities",
    "multiplicities",
    "num_corners",
    "parse",
    "render",
    "staircase",
    "staircase_decompose",
    "union",
]

# part size -> positive multiplicity; absent key means multiplicity 0
ExponentialForm = dict[int, int]


class Partition(tuple):
    """Weakly decreasing tuple of positive parts.

    ``+`` is the componentwise sum and ``|`` the multiset union, so
    ``(a + b).conjugate() == a.conjugate() | b.conjugate()``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = tuple(parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise MalformedPartition(f"part {p!r} is not an integer")
            if p <= 0:
                raise MalformedPartition(f"part {p} is not positive")
        return tuple.__new__(cls, sorted(parts, reverse=True))

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> Partition:
        # caller guarantees canonical form; skips validation
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The 1-based row ``i``; 0 past the last row."""
        if i < 1:
            raise IndexError("rows are numbered from 1")
        return self[i - 1] if i <= len(self) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def num_corners(self) -> int:
        return num_corners(self)

    def __add__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return add(self, other)

    def __or__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return union(self, other)

    def __repr__(self) -> str:
        return f"Partition({render(self) or '∅'})"

    def __str__(self) -> str:
        return render(self)


EMPTY = Partition._trusted(())


def parse(text: str) -> Partition:
    """Parse ``"7,4,4,2"``-style text; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return EMPTY
    parts = []
    for token in text.split(","):
        token = token.strip()
        try:
            value = int(token, 10)
        except ValueError:
            raise MalformedPartition(f"not an integer part: {token!r}") from None
        if value <= 0:
            raise MalformedPartition(f"parts must be positive, got {value}")
        parts.append(value)
    return Partition(parts)


def render(lam: Iterable[int]) -> str:
    return ",".join(map(str, lam))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    out = []
    row = len(lam)
    for col in range(1, lam[0] + 1):
        while lam[row - 1] < col:
            row -= 1
        out.append(row)
    return Partition._trusted(out)


def add(alpha: Partition, beta: Partition) -> Partition:
    """Componentwise sum, padding the shorter operand with zeros."""
    if len(alpha) < len(beta):
        alpha, beta = beta, alpha
    out = list(alpha)
    for i, b in enumerate(beta):
        out[i] += b
    return Partition._trusted(out)


def union(alpha: Partition, beta: Partition) -> Partition:
    return Partition._trusted(sorted((*alpha, *beta), reverse=True))


def multiplicities(lam: Partition) -> ExponentialForm:
    return dict(Counter(lam))


def from_multiplicities(mults: Mapping[int, int]) -> Partition:
    parts = []
    for size, m in mults.items():
        if size <= 0 or m < 0:
            raise MalformedPartition(f"bad exponential entry {size}^{m}")
        parts.extend([size] * m)
    return Partition(parts)


def num_corners(lam: Iterable[int]) -> int:
    """Number of distinct part sizes, which is the number of corners of the diagram."""
    return len(set(lam))


def staircase(k: int) -> Partition:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Partition._trusted(range(k, 0, -1))


def contains(lam: Partition, mu: Partition) -> bool:
    """Whether the diagram of ``mu`` sits inside the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def staircase_decompose(lam: Partition, k: int) -> tuple[Partition, Partition]:
    """Split a k-corner partition as ``(staircase(k) + mu) | rest``.

    ``mu`` subtracts the staircase from the distinct parts and ``rest``
    keeps every part with its multiplicity lowered by one.
    """
    distinct = sorted(set(lam), reverse=True)
    if len(distinct) != k:
        raise WrongCornerCount(f"{lam!r} has {len(distinct)} corners, expected {k}")
    mu = [p - (k - i) for i, p in enumerate(distinct)]
    mu = [m for m in mu if m > 0]
    counts = Counter(lam)
    rest = []
    for p in distinct:
        rest.extend([p] * (counts[p] - 1))
    return Partition._trusted(mu), Partition._trusted(rest)
