"""Limit density v of the zeros of Q_n(-x) on (0, 6 sqrt 3), its CDF, and
comparisons of computed zeros against it.

Quadrature runs in the variable z in (0, 1) defined by

    z^6 = (1 - sqrt(1 - x^2/108)) / (1 + sqrt(1 - x^2/108)),
    x   = 12 sqrt(3) z^3 / (1 + z^6),
    v(x) dx = (3/pi) (1 + z^4) / (1 + z^6) dz,

where the integrand is smooth and bounded, so neither endpoint singularity
of v needs special handling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from qzeros.zeros import ZeroSet

SQRT3 = math.sqrt(3.0)
UPPER = 6.0 * SQRT3
V32_UPPER = math.sqrt(27.0 / 4.0)


def _check_open(x: float, upper: float) -> None:
    if not 0.0 < x < upper:
        raise ValueError(f"x must lie strictly inside (0, {upper}), got {x}")


def density_v(x: float) -> float:
    _check_open(x, UPPER)
    s = math.sqrt(1.0 - x * x / 108.0)
    num = x ** (4.0 / 3.0) + 9.0 * 2.0 ** (4.0 / 3.0) * (1.0 + s) ** (4.0 / 3.0)
    den = 2.0 ** (8.0 / 3.0) * 3.0**2.5 * math.pi * x ** (2.0 / 3.0) * s * (1.0 + s) ** (2.0 / 3.0)
    return num / den


def density_v32(x: float) -> float:
    """Two-term form on (0, sqrt(27/4)); density_v(x) == density_v32(x/4)/4."""
    _check_open(x, V32_UPPER)
    z = 4.0 * x * x / 27.0
    s = math.sqrt(1.0 - z)
    base = 3.0 * math.pi * math.sqrt(3.0 * (1.0 - z))
    return (1.0 + s) ** (2.0 / 3.0) / base * z ** (-1.0 / 3.0) + (1.0 + s) ** (-2.0 / 3.0) / base * z ** (1.0 / 3.0)


def z_of_x(x):
    """Substitution variable, via z^6 = (x^2/108) / (1 + sqrt(1 - x^2/108))^2."""
    x = np.asarray(x, dtype=float)
    t = x * x / 108.0
    s = np.sqrt(np.clip(1.0 - t, 0.0, None))
    return (t / (1.0 + s) ** 2) ** (1.0 / 6.0)


def x_of_z(z):
    z = np.asarray(z, dtype=float)
    return 12.0 * SQRT3 * z**3 / (1.0 + z**6)


def cdf_of_z(z):
    return (2.0 * np.arctan(z) + np.arctan(2.0 * z - SQRT3) + np.arctan(2.0 * z + SQRT3)) / math.pi


def z_integrand(z):
    """dF/dz = (3/pi)(1 + z^4)/(1 + z^6)."""
    return 3.0 / math.pi * (1.0 + z**4) / (1.0 + z**6)


def cdf_F(x):
    """F(x) on [0, 6 sqrt 3]; accepts scalars or arrays."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > UPPER):
        raise ValueError("cdf_F is defined on [0, 6*sqrt(3)]")
    out = cdf_of_z(z_of_x(arr))
    return float(out) if out.ndim == 0 else out


def interval_mass(a: float, b: float) -> float:
    if a > b:
        raise ValueError("interval_mass needs a <= b")
    return cdf_F(b) - cdf_F(a)


def midpoint_mass(a: float, b: float, panels: int = 200_000) -> float:
    """Composite midpoint rule for the mass of [a, b], taken in z."""
    if a > b:
        raise ValueError("midpoint_mass needs a <= b")
    za, zb = float(z_of_x(a)), float(z_of_x(b))
    h = (zb - za) / panels
    mids = za + h * (np.arange(panels) + 0.5)
    return float(h * np.sum(z_integrand(mids)))


def density_moment(m: int, nodes: int = 80) -> float:
    """int_0^{6 sqrt 3} x^m v(x) dx by Gauss-Legendre in z."""
    t, w = np.polynomial.legendre.leggauss(nodes)
    z = 0.5 * (t + 1.0)
    return float(0.5 * np.sum(w * x_of_z(z) ** m * z_integrand(z)))


def ks_statistic(zs: ZeroSet) -> float:
    """sup |F_emp - F| for the step CDF of the zeros."""
    xs = np.sort(np.clip(np.asarray(zs.zeros, dtype=float), 0.0, UPPER))
    n = len(xs)
    f = cdf_F(xs)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - f), np.max(f - (i - 1) / n)))


@dataclass(frozen=True)
class Histogram:
    """Equal-width bins on [0, 6 sqrt 3]; bins are [e_i, e_{i+1}) except the last, which is closed."""

    bins: int
    edges: np.ndarray
    counts: np.ndarray
    n: int

    @property
    def width(self) -> float:
        return UPPER / self.bins

    @property
    def normalized(self) -> np.ndarray:
        return self.counts / (self.n * self.width)

    @property
    def centers(self) -> np.ndarray:
        return 0.5 * (self.edges[:-1] + self.edges[1:])

    def limit_heights(self) -> np.ndarray:
        """Average of v over each bin, from the CDF."""
        return np.diff(cdf_F(self.edges)) / self.width


def histogram(zs: ZeroSet, bins: int) -> Histogram:
    if bins < 1:
        raise ValueError("bins must be positive")
    edges = np.linspace(0.0, UPPER, bins + 1)
    counts, _ = np.histogram(np.asarray(zs.zeros, dtype=float), bins=edges)
    return Histogram(bins, edges, counts, len(zs.zeros))
