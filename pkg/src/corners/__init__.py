"""Partitions with k corners, counted by enumeration, q-series, Fine's
identity and an explicit bijection with pairs of partitions."""

from .errors import (
    BadTruncation,
    CornersError,
    LengthBudgetExceeded,
    MalformedPartition,
    NotInImage,
    OutOfRange,
    WrongCornerCount,
)
from .partition import (
    Partition,
    add,
    conjugate,
    contains,
    multiplicities,
    num_corners,
    parse,
    staircase,
    staircase_decompose,
    union,
)

__version__ = "0.1.0"
