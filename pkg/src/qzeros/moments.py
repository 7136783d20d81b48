"""Limit moments L_m of the zero distribution, three exact routes plus empirical.

L_m = 4^m binom(3m/2 - 1/2, m)                     (closed)
    = sum_{k=0}^m binom(3m, k) binom(2m-1-k, m-1)  (double sum)
    = [t^m] Phi(t)^m,  Phi(t) = (1+t)^3 / (1-t)    (Lagrange-Buermann)

Sequence: 1, 4, 30, 256, 2310, 21504, 204204, 1966080, 19122246, ...
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from qzeros.zeros import ZeroSet


def L_closed(m: int) -> int:
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return 1
    top = Fraction(3 * m - 1, 2)
    binom = Fraction(1)
    for j in range(m):
        binom *= top - j
    value = 4**m * binom / math.factorial(m)
    if value.denominator != 1:
        raise ArithmeticError(f"4^m binom(3m/2-1/2, m) is not integral at m={m}: {value}")
    return value.numerator


def L_sum(m: int) -> int:
    if m < 1:
        raise ValueError("m must be positive")
    return sum(math.comb(3 * m, k) * math.comb(2 * m - 1 - k, m - 1) for k in range(m + 1))


def _series_mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * order
    for i, x in enumerate(a[:order]):
        if x:
            for j, y in enumerate(b[: order - i]):
                out[i + j] += x * y
    return out


def _series_pow(a: list[int], e: int, order: int) -> list[int]:
    result = [1] + [0] * (order - 1)
    base = a[:order]
    while e:
        if e & 1:
            result = _series_mul(result, base, order)
        e >>= 1
        if e:
            base = _series_mul(base, base, order)
    return result


def phi_series(order: int) -> list[int]:
    """Coefficients of (1+t)^3 / (1-t) mod t^order."""
    cube = [1, 3, 3, 1]
    geometric = [1] * order
    return _series_mul(cube, geometric, order)


def L_series(M: int) -> list[Fraction]:
    """L_1..L_M as coefficients [t^m] Phi^m of truncated power series.

    Kept as Fractions: integrality is checked by comparison with the other
    routes, not assumed here.
    """
    if M < 1:
        raise ValueError("M must be positive")
    out = []
    for m in range(1, M + 1):
        phi = phi_series(m + 1)
        out.append(Fraction(_series_pow(phi, m, m + 1)[m]))
    return out


def empirical_moments(zs: ZeroSet, M: int) -> list[float]:
    """(1/n) sum_k x_k^m for m = 1..M, with exactly rounded summation."""
    if len(zs.zeros) == 0:
        raise ValueError("empty zero set")
    n = len(zs.zeros)
    xs = [float(x) for x in zs.zeros]
    return [math.fsum(x**m for x in xs) / n for m in range(1, M + 1)]


@dataclass(frozen=True)
class MomentRecord:
    m: int
    closed: int
    sum: int
    series: Fraction
    empirical: float | None = None
    empirical_n: int | None = None

    @property
    def agree(self) -> bool:
        return self.closed == self.sum == self.series


def moment_table(max_m: int, zs: ZeroSet | None = None) -> list[MomentRecord]:
    series = L_series(max_m)
    emp = empirical_moments(zs, max_m) if zs is not None else [None] * max_m
    return [
        MomentRecord(
            m=m,
            closed=L_closed(m),
            sum=L_sum(m),
            series=series[m - 1],
            empirical=emp[m - 1],
            empirical_n=zs.n if zs is not None else None,
        )
        for m in range(1, max_m + 1)
    ]
