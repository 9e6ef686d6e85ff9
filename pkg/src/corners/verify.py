"""Verification suites: each compares independent routes and returns a RunReport."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .bijection import forward, inverse
from .enumeration import (
    count_pairs,
    count_pairs_bounded,
    max_corners,
    pairs_of,
    partitions_of,
    triangle,
)
from .fine import binomial, multiplicity_product, nu_via_fine, pairs_via_decomposition
from .partition import contains, num_corners, render, staircase
from .qseries import corner_gf, durfee_lhs, durfee_rhs, summand_k

__all__ = ["Failure", "RunReport", "SUITES", "run_suite"]


@dataclass(frozen=True, order=True)
class Failure:
    description: str
    witness: str


@dataclass
class RunReport:
    command: str
    parameters: dict[str, object] = field(default_factory=dict)
    checks_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def check(self, ok: bool, description: str, witness: str) -> None:
        self.checks_run += 1
        if not ok:
            self.failures.append(Failure(description, witness))

    def to_dict(self, with_elapsed: bool = False) -> dict:
        d = {
            "command": self.command,
            "parameters": dict(sorted(self.parameters.items())),
            "checks_run": self.checks_run,
            "failures": [
                {"description": f.description, "witness": f.witness}
                for f in sorted(self.failures)
            ],
            "passed": self.passed,
        }
        if with_elapsed:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d

    def render(self, fmt: str = "text") -> str:
        """Deterministic rendering; elapsed time is left out on purpose."""
        if fmt == "json":
            return json.dumps(self.to_dict(), sort_keys=True)
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        lines = [
            self.command,
            f"parameters: {params}",
            f"checks_run: {self.checks_run}",
            f"failures: {len(self.failures)}",
        ]
        lines += [f"FAIL {f.description} :: {f.witness}" for f in sorted(self.failures)]
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _timed(command: str, params: dict, body: Callable[[RunReport], None]) -> RunReport:
    report = RunReport(command, params)
    start = time.perf_counter()
    body(report)
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def _window(k: int) -> range:
    return range(comb(k + 1, 2), comb(k + 2, 2))


def verify_conjecture(max_k: int = 6) -> RunReport:
    """nu(n; k) equals the number of pairs of total weight n - binomial(k+1, 2)."""

    def body(rep: RunReport) -> None:
        for k in range(max_k + 1):
            for n in _window(k):
                corners = sum(1 for lam in partitions_of(n) if num_corners(lam) == k)
                pairs = count_pairs(n - comb(k + 1, 2))
                rep.check(corners == pairs, "nu(n;k) != #pairs", f"n={n} k={k} nu={corners} pairs={pairs}")

    return _timed("verify conjecture", {"max_k": max_k}, body)


def verify_general(max_k: int = 6, max_m: int = 15) -> RunReport:
    """Bounded-length pair counts against staircase-free k-corner partitions,
    plus the explicit bijection on each (k, m) slice."""

    def body(rep: RunReport) -> None:
        for k in range(max_k + 1):
            rho_next = staircase(k + 1)
            for m in range(max_m + 1):
                n = m + comb(k + 1, 2)
                domain = [(a, b) for a, b in pairs_of(m) if len(a) + len(b) <= k]
                target = {
                    lam for lam in partitions_of(n)
                    if num_corners(lam) == k and not contains(lam, rho_next)
                }
                where = f"k={k} m={m}"
                bounded = count_pairs_bounded(m, k)
                rep.check(bounded == len(target), "bounded pairs != staircase-free partitions",
                          f"{where} pairs={bounded} partitions={len(target)}")
                images = [forward(a, b, k) for a, b in domain]
                rep.check(len(set(images)) == len(images), "forward not injective", where)
                rep.check(set(images) == target, "forward image differs from target", where)
                bad = [(a, b) for (a, b), lam in zip(domain, images) if inverse(lam, k) != (a, b)]
                rep.check(not bad, "inverse(forward) != identity",
                          f"{where} first=({render(bad[0][0])}|{render(bad[0][1])})" if bad else where)

    return _timed("verify general", {"max_k": max_k, "max_m": max_m}, body)


def verify_fine(max_n: int = 40, max_r: int = 6) -> RunReport:
    """Fine's identity: sum binomial(Q, r) == sum m_1...m_r over partitions of n."""

    def body(rep: RunReport) -> None:
        for n in range(max_n + 1):
            lhs = [0] * (max_r + 1)
            rhs = [0] * (max_r + 1)
            for lam in partitions_of(n):
                q = num_corners(lam)
                for r in range(max_r + 1):
                    lhs[r] += binomial(q, r)
                    rhs[r] += multiplicity_product(lam, r)
            for r in range(max_r + 1):
                rep.check(lhs[r] == rhs[r], "fine lhs != rhs", f"n={n} r={r} lhs={lhs[r]} rhs={rhs[r]}")

    return _timed("verify fine", {"max_n": max_n, "max_r": max_r}, body)


def verify_durfee(max_k: int = 8, trunc: int = 200) -> RunReport:
    """prod (1 + x q^i) against the sum over j, coefficient by coefficient."""

    def body(rep: RunReport) -> None:
        lhs, rhs = durfee_lhs(max_k, trunc), durfee_rhs(max_k, trunc)
        for k in range(max_k + 1):
            for d in range(trunc + 1):
                a, b = lhs.coeff(k, d), rhs.coeff(k, d)
                rep.check(a == b, "durfee lhs != rhs", f"x^{k} q^{d} lhs={a} rhs={b}")

    return _timed("verify durfee", {"max_k": max_k, "trunc": trunc}, body)


def verify_cross(max_n: int = 40) -> RunReport:
    """Enumeration, series, Fine and the bijection agree on nu(n; k)."""

    def body(rep: RunReport) -> None:
        table = triangle(max_n)
        top_k = max_corners(max_n)
        gf = corner_gf(top_k, max_n)
        summands = {k: summand_k(k, max_n) for k in range(top_k + 1)}
        for n in range(max_n + 1):
            for k in range(max_corners(n) + 1):
                where = f"n={n} k={k}"
                oracle = table[n, k]
                rep.check(gf.coeff(k, n) == oracle, "corner_gf != enumeration",
                          f"{where} gf={gf.coeff(k, n)} enum={oracle}")
            k = max_corners(n)
            where = f"n={n} k={k}"
            oracle = table[n, k]
            m = n - comb(k + 1, 2)
            routes = {
                "summand_k": summands[k][n],
                "nu_via_fine": nu_via_fine(n, k),
                "pairs_via_decomposition": pairs_via_decomposition(n, k),
                "bijection": len({forward(a, b, k) for a, b in pairs_of(m)}),
            }
            for name, value in routes.items():
                rep.check(value == oracle, f"{name} != enumeration", f"{where} {name}={value} enum={oracle}")

    return _timed("verify cross", {"max_n": max_n}, body)


SUITES = {
    "conjecture": verify_conjecture,
    "general": verify_general,
    "fine": verify_fine,
    "durfee": verify_durfee,
    "cross": verify_cross,
}


def run_suite(name: str, **bounds) -> RunReport:
    return SUITES[name](**bounds)
