"""Truncated power series in q with exact integer coefficients.

A :class:`QSeries` is known modulo ``q**(trunc + 1)``.  An
:class:`XQSeries` is a polynomial in x whose coefficients are QSeries
sharing one truncation.  Infinite products over i >= 1 are evaluated for
i = 1..trunc only, since factor i is 1 modulo q**i.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .errors import BadTruncation

__all__ = [
    "QSeries",
    "XQSeries",
    "corner_gf",
    "durfee_lhs",
    "durfee_rhs",
    "euler_inverse",
    "inv_one_minus_qi",
    "one_minus_qi",
    "pair_count_series",
    "q_pochhammer_inverse",
    "summand_k",
]


def _check_trunc(trunc: int) -> None:
    if trunc < 0:
        raise BadTruncation(f"truncation must be nonnegative, got {trunc}")


@dataclass(frozen=True)
class QSeries:
    trunc: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_trunc(self.trunc)
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError(
                f"expected {self.trunc + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], trunc: int) -> QSeries:
        """Pad with zeros or cut so exactly ``trunc + 1`` coefficients remain."""
        _check_trunc(trunc)
        c = list(coeffs)[: trunc + 1]
        c.extend([0] * (trunc + 1 - len(c)))
        return cls(trunc, tuple(c))

    @classmethod
    def zero(cls, trunc: int) -> QSeries:
        return cls.from_coeffs((), trunc)

    @classmethod
    def one(cls, trunc: int) -> QSeries:
        return cls.from_coeffs((1,), trunc)

    @classmethod
    def monomial(cls, degree: int, trunc: int, coeff: int = 1) -> QSeries:
        c = [0] * (trunc + 1)
        if 0 <= degree <= trunc:
            c[degree] = coeff
        return cls(trunc, tuple(c))

    def __getitem__(self, d: int) -> int:
        if not 0 <= d <= self.trunc:
            raise IndexError(f"coefficient q^{d} is outside 0..{self.trunc}")
        return self.coeffs[d]

    def __add__(self, other: QSeries) -> QSeries:
        t = min(self.trunc, other.trunc)
        return QSeries(t, tuple(a + b for a, b in zip(self.coeffs[: t + 1], other.coeffs)))

    def __neg__(self) -> QSeries:
        return QSeries(self.trunc, tuple(-a for a in self.coeffs))

    def __sub__(self, other: QSeries) -> QSeries:
        return self + (-other)

    def scale(self, c: int) -> QSeries:
        return QSeries(self.trunc, tuple(c * a for a in self.coeffs))

    def shift(self, d: int) -> QSeries:
        """Multiply by q**d (d >= 0)."""
        if d < 0:
            raise ValueError("only nonnegative shifts are defined")
        return QSeries.from_coeffs((0,) * d + self.coeffs, self.trunc)

    def __mul__(self, other: QSeries) -> QSeries:
        t = min(self.trunc, other.trunc)
        a, b = self.coeffs, other.coeffs
        # iterate over the sparser operand's nonzero terms
        if sum(1 for x in a[: t + 1] if x) > sum(1 for x in b[: t + 1] if x):
            a, b = b, a
        out = [0] * (t + 1)
        for i in range(t + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(t + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return QSeries(t, tuple(out))

    def truncate(self, trunc: int) -> QSeries:
        if trunc > self.trunc:
            raise BadTruncation(f"cannot extend a series known to q^{self.trunc}")
        return QSeries(trunc, self.coeffs[: trunc + 1])

    def __repr__(self) -> str:
        return f"QSeries(trunc={self.trunc}, coeffs={list(self.coeffs)})"


@dataclass(frozen=True)
class XQSeries:
    """sum_k x**k * by_x[k], every by_x[k] truncated at the same q-degree."""

    by_x: tuple[QSeries, ...]

    def __post_init__(self):
        if not self.by_x:
            raise ValueError("an XQSeries needs at least the x^0 coefficient")
        if len({s.trunc for s in self.by_x}) != 1:
            raise ValueError("all x-coefficients must share one truncation")

    @property
    def x_deg(self) -> int:
        return len(self.by_x) - 1

    @property
    def trunc(self) -> int:
        return self.by_x[0].trunc

    @classmethod
    def zero(cls, x_deg: int, trunc: int) -> XQSeries:
        return cls(tuple(QSeries.zero(trunc) for _ in range(x_deg + 1)))

    @classmethod
    def one(cls, x_deg: int, trunc: int) -> XQSeries:
        z = QSeries.zero(trunc)
        return cls((QSeries.one(trunc),) + (z,) * x_deg)

    def coeff(self, k: int, n: int) -> int:
        """Coefficient of x**k q**n."""
        return self.by_x[k][n]

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return XQSeries(tuple(s * other for s in self.by_x))
        if not isinstance(other, XQSeries):
            return NotImplemented
        deg = min(self.x_deg, other.x_deg)
        t = min(self.trunc, other.trunc)
        out = [QSeries.zero(t) for _ in range(deg + 1)]
        for i, a in enumerate(self.by_x[: deg + 1]):
            for j, b in enumerate(other.by_x[: deg + 1 - i]):
                out[i + j] = out[i + j] + a * b
        return XQSeries(tuple(out))

    __rmul__ = __mul__

    def substitute_shift(self, c: int) -> XQSeries:
        """Replace x by x + c, re-expanding binomially; x-degree is preserved."""
        deg, t = self.x_deg, self.trunc
        out = []
        for j in range(deg + 1):
            acc = [0] * (t + 1)
            for k in range(j, deg + 1):
                w = comb(k, j) * c ** (k - j)
                if w:
                    for d, v in enumerate(self.by_x[k].coeffs):
                        if v:
                            acc[d] += w * v
            out.append(QSeries(t, tuple(acc)))
        return XQSeries(tuple(out))

    def __repr__(self) -> str:
        return f"XQSeries(x_deg={self.x_deg}, trunc={self.trunc})"


def one_minus_qi(i: int, trunc: int) -> QSeries:
    """The polynomial 1 - q**i as a truncated series."""
    if i < 1:
        raise ValueError("i must be positive")
    return QSeries.one(trunc) - QSeries.monomial(i, trunc)


def inv_one_minus_qi(i: int, trunc: int) -> QSeries:
    """1 / (1 - q**i) = 1 + q**i + q**(2i) + ..."""
    if i < 1:
        raise ValueError("i must be positive")
    _check_trunc(trunc)
    return QSeries(trunc, tuple(1 if d % i == 0 else 0 for d in range(trunc + 1)))


def q_pochhammer_inverse(j: int, trunc: int) -> QSeries:
    """1 / ((1 - q)(1 - q**2)...(1 - q**j))."""
    out = QSeries.one(trunc)
    for i in range(1, j + 1):
        out = out * inv_one_minus_qi(i, trunc)
    return out


def euler_inverse(trunc: int) -> QSeries:
    """prod_{i>=1} 1/(1 - q**i); the coefficient of q**n is p(n)."""
    return q_pochhammer_inverse(max(trunc, 0), trunc)


def corner_gf(x_deg: int, trunc: int) -> XQSeries:
    """prod_{i>=1} (1 + x q**i / (1 - q**i)); coefficient (k, n) is nu(n; k)."""
    f = XQSeries.one(x_deg, trunc)
    for i in range(1, trunc + 1):
        g = inv_one_minus_qi(i, trunc).shift(i)
        by_x = list(f.by_x)
        for k in range(x_deg, 0, -1):
            by_x[k] = by_x[k] + f.by_x[k - 1] * g
        f = XQSeries(tuple(by_x))
    return f


def durfee_lhs(x_deg: int, trunc: int) -> XQSeries:
    """prod_{i>=1} (1 + x q**i)."""
    f = XQSeries.one(x_deg, trunc)
    for i in range(1, trunc + 1):
        by_x = list(f.by_x)
        for k in range(x_deg, 0, -1):
            by_x[k] = by_x[k] + f.by_x[k - 1].shift(i)
        f = XQSeries(tuple(by_x))
    return f


def durfee_rhs(x_deg: int, trunc: int) -> XQSeries:
    """sum_j x**j q**binomial(j+1, 2) / ((1 - q)...(1 - q**j))."""
    _check_trunc(trunc)
    by_x = [QSeries.zero(trunc) for _ in range(x_deg + 1)]
    for j in range(x_deg + 1):
        if comb(j + 1, 2) > trunc:
            break
        by_x[j] = q_pochhammer_inverse(j, trunc).shift(comb(j + 1, 2))
    return XQSeries(tuple(by_x))


def summand_k(k: int, trunc: int) -> QSeries:
    """q**binomial(k+1, 2) / ((1-q)...(1-q**k)) times the inverse Euler product.

    For binomial(k+1, 2) <= n < binomial(k+2, 2) the coefficient of q**n
    is nu(n; k).
    """
    return pair_count_series(k, trunc).shift(comb(k + 1, 2))


def pair_count_series(k: int, trunc: int) -> QSeries:
    """Coefficient of q**h counts pairs (lam, mu), |lam| + |mu| = h, l(lam) <= k."""
    return q_pochhammer_inverse(k, trunc) * euler_inverse(trunc)
