"""Command-line front end.

Exit codes: 0 success, 1 verification failure or a partition outside the
bijection's domain/image, 2 usage, parse or I/O errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .bijection import forward, inverse
from .enumeration import CountTable, max_corners, triangle
from .errors import CornersError, LengthBudgetExceeded, MalformedPartition, NotInImage
from .partition import Partition, parse, render
from .qseries import pair_count_series, summand_k
from .verify import SUITES, Failure, RunReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- rendering ---------------------------------------------------------------

def render_table(table: CountTable, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"rows": [list(r) for r in table.rows], "max_n": table.max_n})
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in table.rows:
            writer.writerow(row)
        return buf.getvalue().rstrip("\n")
    # text: zero entries dropped, so row 0 is "1" and row n >= 1 starts at k = 1
    return "\n".join(" ".join(str(v) for v in row if v) for row in table.rows)


def render_series(coeffs: Sequence[int], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"coeffs": list(coeffs)})
    if fmt == "csv":
        return "\n".join(f"{d},{c}" for d, c in enumerate(coeffs))
    return " ".join(map(str, coeffs))


def diagram(lam: Partition) -> str:
    return "\n".join("#" * p for p in lam) if lam else "(empty)"


# -- b-file ------------------------------------------------------------------

BFILE_CONVENTION = (
    "expected A116608 b-file: lines 'index value', index starting at 1, "
    "rows n >= 1 read in order, row n listing nu(n;k) for k = 1..max"
)


def read_bfile(path: Path) -> list[int]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise UsageError(f"{path}:{lineno}: malformed line {line!r}; {BFILE_CONVENTION}")
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise UsageError(f"{path}:{lineno}: non-integer field; {BFILE_CONVENTION}") from None
        if index != len(values) + 1:
            raise UsageError(
                f"{path}:{lineno}: index {index}, expected {len(values) + 1}; {BFILE_CONVENTION}"
            )
        values.append(value)
    if not values:
        raise UsageError(f"{path}: no data lines; {BFILE_CONVENTION}")
    return values


def flatten_rows(max_n: int) -> list[tuple[int, int]]:
    """(n, k) positions of the b-file ordering for rows 1..max_n."""
    return [(n, k) for n in range(1, max_n + 1) for k in range(1, max_corners(n) + 1)]


def oeis_check(path: Path, max_n: Optional[int] = None) -> RunReport:
    values = read_bfile(path)
    if max_n is None:
        max_n = 1
        while len(flatten_rows(max_n)) < len(values):
            max_n += 1
    positions = flatten_rows(max_n)
    report = RunReport("oeis-check", {"bfile": path.name, "max_n": max_n})
    table = triangle(max_n)
    for index, ((n, k), value) in enumerate(zip(positions, values), 1):
        expected = table[n, k]
        report.checks_run += 1
        if value != expected:
            report.failures.append(
                Failure("b-file mismatch", f"index={index} n={n} k={k} file={value} computed={expected}")
            )
            break
    return report


# -- commands ----------------------------------------------------------------

def cmd_triangle(args) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    print(render_table(triangle(args.max_n), args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    defaults = {
        "conjecture": {"max_k": 6},
        "general": {"max_k": 6, "max_m": 15},
        "fine": {"max_n": 40, "max_r": 6},
        "durfee": {"max_k": 8, "trunc": 200},
        "cross": {"max_n": 40},
    }[args.suite]
    bounds = {}
    for name, default in defaults.items():
        value = getattr(args, name)
        value = default if value is None else value
        if value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
        bounds[name] = value
    report = SUITES[args.suite](**bounds)
    return _emit(report, args.format)


def _emit(report: RunReport, fmt: str) -> int:
    print(report.render("json" if fmt == "json" else "text"))
    print(f"elapsed: {report.elapsed_ms:.1f} ms", file=sys.stderr)
    return report.exit_code


def cmd_map(args) -> int:
    alpha, beta = parse(args.alpha), parse(args.beta)
    try:
        lam = forward(alpha, beta, args.k)
    except LengthBudgetExceeded as exc:
        print(f"LengthBudgetExceeded: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(render(lam))
    if args.diagram:
        print(diagram(lam))
    return EXIT_OK


def cmd_unmap(args) -> int:
    lam = parse(args.lam)
    try:
        alpha, beta = inverse(lam, args.k)
    except NotInImage as exc:
        print(f"NotInImage: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(f"{render(alpha)}|{render(beta)}")
    if args.diagram:
        print(diagram(alpha))
        print("--")
        print(diagram(beta))
    return EXIT_OK


def cmd_series(args) -> int:
    if args.k < 0 or args.trunc < 0:
        raise UsageError("--k and --trunc must be nonnegative")
    make = summand_k if args.kind == "summand" else pair_count_series
    print(render_series(make(args.k, args.trunc).coeffs, args.format))
    return EXIT_OK


def cmd_oeis_check(args) -> int:
    report = oeis_check(Path(args.bfile), args.max_n)
    return _emit(report, args.format)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corners",
        description="Partitions with k corners: tables, bijection and identity checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="print nu(n;k) for n = 0..max-n")
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--format", choices=("csv", "json", "text"), default="text")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    for flag in ("--max-n", "--max-k", "--max-m", "--max-r", "--trunc"):
        p.add_argument(flag, type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("map", help="apply (alpha, beta) -> (rho_k | beta') + alpha")
    p.add_argument("--alpha", default="")
    p.add_argument("--beta", default="")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--diagram", action="store_true")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("unmap", help="recover (alpha, beta) from a partition")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--diagram", action="store_true")
    p.set_defaults(func=cmd_unmap)

    p = sub.add_parser("series", help="dump summand_k or pair_count_series coefficients")
    p.add_argument("--kind", choices=("summand", "pairs"), default="summand")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trunc", type=int, default=40)
    p.add_argument("--format", choices=("csv", "json", "text"), default="text")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("oeis-check", help="compare the triangle with an A116608 b-file")
    p.add_argument("--bfile", required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_oeis_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, MalformedPartition) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CornersError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
