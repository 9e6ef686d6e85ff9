"""Border coordinates and the bijection (alpha, beta) -> (rho_k | beta') + alpha.

Border coordinates follow the defining convention literally: ``horiz[i]``
is the multiplicity of the i-th largest distinct part of the conjugate,
``vert[i]`` the multiplicity of the i-th largest distinct part of the
partition itself.  Read along the border, ``vert`` runs top to bottom and
``horiz`` bottom to top.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import accumulate

from .errors import LengthBudgetExceeded, NotInImage
from .partition import (
    Partition,
    add,
    conjugate,
    contains,
    from_multiplicities,
    num_corners,
    staircase,
    union,
)

__all__ = [
    "BorderCoordinates",
    "border_coordinates",
    "forward",
    "from_border_coordinates",
    "inverse",
    "inverse_splits",
    "sum_transport",
    "union_transport",
]


@dataclass(frozen=True)
class BorderCoordinates:
    horiz: tuple[int, ...]
    vert: tuple[int, ...]

    def __post_init__(self):
        if len(self.horiz) != len(self.vert):
            raise ValueError("horiz and vert must have the same length")
        if any(v < 1 for v in self.horiz + self.vert):
            raise ValueError("border coordinates are positive")

    @property
    def k(self) -> int:
        return len(self.vert)

    def __str__(self) -> str:
        h = ",".join(map(str, self.horiz))
        v = ",".join(map(str, self.vert))
        return f"({h}; {v})"


def _distinct_with_mults(lam: Partition) -> tuple[list[int], list[int]]:
    counts = Counter(lam)
    distinct = sorted(counts, reverse=True)
    return distinct, [counts[p] for p in distinct]


def border_coordinates(lam: Partition) -> BorderCoordinates:
    _, vert = _distinct_with_mults(lam)
    _, horiz = _distinct_with_mults(conjugate(lam))
    return BorderCoordinates(tuple(horiz), tuple(vert))


def from_border_coordinates(bc: BorderCoordinates) -> Partition:
    # prefix sums of horiz are the distinct parts in increasing order
    ascending = list(accumulate(bc.horiz))
    parts = []
    for size, mult in zip(reversed(ascending), bc.vert):
        parts.extend([size] * mult)
    return Partition._trusted(parts)


def union_transport(lam: Partition, alpha: Partition) -> BorderCoordinates:
    """Border coordinates of ``lam | alpha`` predicted from those of ``lam``.

    Requires every part of ``alpha`` to be a part of ``lam``.
    """
    distinct, _ = _distinct_with_mults(lam)
    extra = Counter(alpha)
    if not set(extra) <= set(distinct):
        raise ValueError("alpha has a part that is not a part of lam")
    bc = border_coordinates(lam)
    vert = tuple(n + extra[q] for n, q in zip(bc.vert, distinct))
    return BorderCoordinates(bc.horiz, vert)


def sum_transport(lam: Partition, alpha: Partition) -> BorderCoordinates:
    """Border coordinates of ``lam + alpha`` predicted from those of ``lam``.

    Requires every part of ``alpha'`` to be a part of ``lam'``.
    """
    swapped = union_transport(conjugate(lam), conjugate(alpha))
    return BorderCoordinates(swapped.vert, swapped.horiz)


def forward(alpha: Partition, beta: Partition, k: int) -> Partition:
    """(alpha, beta) -> (staircase(k) | beta') + alpha, for l(alpha) + l(beta) <= k."""
    if len(alpha) + len(beta) > k:
        raise LengthBudgetExceeded(
            f"l(alpha) + l(beta) = {len(alpha) + len(beta)} exceeds k = {k}"
        )
    return add(union(staircase(k), conjugate(beta)), alpha)


def _free_cells(lam: Partition, k: int) -> list[tuple[int, int]]:
    # cells (i, j) of staircase(k+1) minus staircase(k) missing from lam;
    # i is the column, j the row, both 1-based
    return [(k + 2 - j, j) for j in range(1, k + 2) if lam.part(j) < k + 2 - j]


def _split_at(lam: Partition, k: int, cell: tuple[int, int]) -> tuple[Partition, Partition]:
    i0, j0 = cell
    p, q = i0 - 1, j0 - 1
    bc = border_coordinates(lam)
    # horizontal segments from the top row down, vertical ones from the bottom up
    top_h = bc.horiz[::-1]
    top_v = bc.vert[::-1]
    f, g = top_h[:q], top_v[:p]
    if any(v != 1 for v in top_h[q:]) or any(v != 1 for v in top_v[p:]):
        raise AssertionError(f"border of {lam!r} does not split at {cell}")
    # the multiplicity vectors describe the conjugates of alpha and beta
    alpha = conjugate(from_multiplicities({j + 1: fj - 1 for j, fj in enumerate(f)}))
    beta = conjugate(from_multiplicities({j + 1: gj - 1 for j, gj in enumerate(g)}))
    return alpha, beta


def _check_image(lam: Partition, k: int) -> None:
    if num_corners(lam) != k:
        raise NotInImage(f"{lam!r} has {num_corners(lam)} corners, not {k}")
    if contains(lam, staircase(k + 1)):
        raise NotInImage(f"{lam!r} contains the staircase with {k + 1} corners")


def inverse_splits(lam: Partition, k: int) -> list[tuple[Partition, Partition]]:
    """The pair read off at every admissible free cell, in row order."""
    _check_image(lam, k)
    return [_split_at(lam, k, cell) for cell in _free_cells(lam, k)]


def inverse(lam: Partition, k: int) -> tuple[Partition, Partition]:
    """Recover (alpha, beta) with ``forward(alpha, beta, k) == lam``.

    Takes the first cell outside ``lam`` on the anti-diagonal
    i + j = k + 2, scanning rows from the top.
    """
    _check_image(lam, k)
    return _split_at(lam, k, _free_cells(lam, k)[0])
