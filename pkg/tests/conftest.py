"""Shared oracles.  These deliberately avoid the package's own enumeration."""
from functools import lru_cache

import pytest

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def brute_partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n as descending tuples, by plain recursion."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in brute_partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def divisor_count(n: int) -> int:
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def diagram_corners(lam) -> int:
    """Corners counted on the diagram: cells with no right or lower neighbour."""
    cells = {(i, j) for j, row in enumerate(lam, 1) for i in range(1, row + 1)}
    return sum(1 for (i, j) in cells if (i + 1, j) not in cells and (i, j + 1) not in cells)


def all_up_to(weight: int):
    for n in range(weight + 1):
        yield from brute_partitions(n)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def run_cli(capsys):
    from corners.cli import main

    def run(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err

    return run
