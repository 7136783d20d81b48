"""Fundamental roots of the characteristic cubic of the four-term recursion.

    lambda^3 - (x+3) lambda^2 - (x-3) lambda - 1 = 0

For -6*sqrt(3) < x < 0 the cubic has one real root lambda3 in
(7 - 4*sqrt(3), 1) and a complex pair mu +/- i*nu.  Everything here is
parametrized by lambda3; ``x_of_lambda`` is the inverse map.  With
lambda1 = r e^{i theta} and c1 = s e^{i omega},

    Q_n(x) = 2 r^n s cos(omega + n theta) + c3 lambda3^n.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

SQRT3 = math.sqrt(3.0)
X_MIN = -6.0 * SQRT3
LAMBDA_MIN = 1.0 / (7.0 + 4.0 * SQRT3)  # = 7 - 4 sqrt 3 without the cancellation
LAMBDA_MAX = 7.0 + 4.0 * SQRT3
# formulas lose accuracy this close to the triple root at lambda3 = 1
NEAR_ONE = 1e-8
SPAN = 8.0 * SQRT3  # LAMBDA_MAX - LAMBDA_MIN


def discriminant(x: float) -> float:
    return x**4 - 108.0 * x**2


def charpoly(lam, x):
    return lam**3 - (x + 3) * lam**2 - (x - 3) * lam - 1


def x_of_lambda(lam: float) -> float:
    """Inverse of the real root: x = (lambda - 1)^3 / (lambda^2 + lambda)."""
    if lam == 0 or lam == -1:
        raise ValueError(f"x_of_lambda has a pole at lambda = {lam}")
    return (lam - 1.0) ** 3 / (lam * lam + lam)


def _dx_dlambda(lam: float) -> float:
    # d/dl (l-1)^3/(l^2+l) = (l-1)^2 (l^2 + 4l + 1) / (l^2+l)^2
    return (lam - 1.0) ** 2 * (lam * lam + 4.0 * lam + 1.0) / (lam * lam + lam) ** 2


def lambda3_of_x(x: float, tol: float = 1e-14) -> float:
    """Real root of the cubic in (7 - 4 sqrt 3, 1] for x in (-6 sqrt 3, 0].

    Safeguarded Newton on the increasing map ``x_of_lambda``; a step that
    leaves the current bracket is replaced by bisection.
    """
    if not (X_MIN < x <= 0.0):
        raise ValueError(f"x must lie in (-6*sqrt(3), 0], got {x}")
    if x == 0.0:
        return 1.0
    lo, hi = LAMBDA_MIN, 1.0
    # cube-root start: accurate near x = 0 where x ~ (lambda-1)^3 / 2
    lam = min(max(1.0 - (-2.0 * x) ** (1.0 / 3.0), lo), hi)
    if not lo < lam < hi:
        lam = 0.5 * (lo + hi)
    for _ in range(200):
        f = x_of_lambda(lam) - x
        if f == 0.0:
            return lam
        if f > 0.0:
            hi = lam
        else:
            lo = lam
        d = _dx_dlambda(lam)
        step = lam - f / d if d > 0 else None
        if step is None or not lo < step < hi:
            step = 0.5 * (lo + hi)
        if abs(step - lam) <= tol * abs(lam) or hi - lo <= tol * hi:
            lam = step
            break
        lam = step
    return lam


def _radicand(lam):
    # -l^2 + 14 l - 1, factored to stay accurate next to LAMBDA_MIN
    d = lam - LAMBDA_MIN
    return d * (SPAN - d)


def _check_open(lam: float) -> None:
    if not LAMBDA_MIN < lam < 1.0 or _radicand(lam) <= 0.0:
        raise ValueError(f"lambda3 must lie in (7-4*sqrt(3), 1), got {lam}")
    if lam > 1.0 - NEAR_ONE:
        raise ValueError(f"lambda3 = {lam} is too close to the triple root at 1")


def complex_pair(lam: float) -> tuple[float, float]:
    """Real and imaginary part of lambda1 = mu + i nu."""
    _check_open(lam)
    den = lam * lam + lam
    mu = -0.5 * (lam * lam - 6.0 * lam + 1.0) / den
    nu = 0.5 * math.sqrt(_radicand(lam)) * (1.0 - lam) / den
    return mu, nu


def c_coefficients(lam: float) -> tuple[complex, float]:
    """c1 (complex, both parts positive) and c3 = (l^2 - 1)/(l^2 + 4l + 1)."""
    _check_open(lam)
    q = lam * lam + 4.0 * lam + 1.0
    re = (1.0 - lam * lam) / (2.0 * q)
    im = (1.0 - lam) * (lam * lam + 10.0 * lam + 1.0) / (2.0 * q * math.sqrt(_radicand(lam)))
    return complex(re, im), (lam * lam - 1.0) / q


def c1_abs(lam: float) -> float:
    _check_open(lam)
    q = lam * lam + 4.0 * lam + 1.0
    return (1.0 - lam) * math.sqrt(8.0 * lam / (_radicand(lam) * q))


def polar_angles(lam: float) -> tuple[float, float]:
    """(theta, omega): arguments of lambda1 and c1.

    Both come from atan2 with the positive common factors cancelled, so
    there is no branch question and no cancellation near lambda3 = 1.
    """
    _check_open(lam)
    d = lam - LAMBDA_MIN
    return float(theta_from_offset(d)), float(omega_from_offset(d))


# The radicand -l^2 + 14 l - 1 = (l - LAMBDA_MIN)(LAMBDA_MAX - l) vanishes at
# LAMBDA_MIN, where the zero-finder works for large n.  The vectorized
# internals therefore take the offset d = l - LAMBDA_MIN as their variable
# and form the radicand as d (8 sqrt 3 - d), free of cancellation.


def _parts(d):
    lam = LAMBDA_MIN + d
    sq = np.sqrt(d * (SPAN - d))
    return lam, sq


def theta_from_offset(d):
    # atan2(nu, mu) after dropping the positive factor 1/(2(l^2+l))
    lam, sq = _parts(d)
    return np.arctan2(sq * (1.0 - lam), -(lam * lam - 6.0 * lam + 1.0))


def omega_from_offset(d):
    # atan2(Im c1, Re c1) after dropping (1-l)/(2 q sqrt(radicand))
    lam, sq = _parts(d)
    return np.arctan2(lam * lam + 10.0 * lam + 1.0, (lam + 1.0) * sq)


def scaled_q_from_offset(n: int, d):
    """Vectorized Q_n / (2 r^n |c1|) at lambda3 = LAMBDA_MIN + d, unchecked."""
    d = np.asarray(d, dtype=float)
    lam, sq = _parts(d)
    q = lam * lam + 4.0 * lam + 1.0
    # c3 / (2|c1|), simplified to avoid the 0/0 at lambda3 = 1
    ratio = -(lam + 1.0) * sq / (2.0 * np.sqrt(8.0 * lam * q))
    corr = ratio * np.exp(1.5 * n * np.log(lam))
    return np.cos(omega_from_offset(d) + n * theta_from_offset(d)) + corr


def x_from_offset(d):
    lam = LAMBDA_MIN + d
    return (lam - 1.0) ** 3 / (lam * lam + lam)


def eval_Q_scaled(n: int, lam: float) -> float:
    """Q_n(x_of_lambda(lam)) / (2 r^n s); same sign as Q_n there.

    The correction term carries lambda3^(3n/2) and underflows to zero for
    large n, which is harmless: the cosine then decides the sign alone.
    """
    if n < 1:
        raise ValueError("n must be positive")
    _check_open(lam)
    return float(scaled_q_from_offset(n, lam - LAMBDA_MIN))


@dataclass(frozen=True)
class FundamentalRoots:
    x: float
    lambda3: float
    mu: float
    nu: float
    r: float
    theta: float
    omega: float
    s_abs: float
    c3: float
    disc: float
    b_coeffs: tuple[complex, complex, complex] | None = None

    @property
    def lambda1(self) -> complex:
        return complex(self.mu, self.nu)

    @property
    def c1(self) -> complex:
        return cmath.rect(self.s_abs, self.omega)

    def q_value(self, n: int) -> float:
        """Q_n(x) reconstructed from the root decomposition."""
        return 2.0 * self.r**n * self.s_abs * math.cos(self.omega + n * self.theta) + self.c3 * self.lambda3**n


def b_coefficient(lam: complex) -> complex:
    return (lam * lam + lam) ** 2 / ((lam - 1) ** 2 * (lam * lam + 4 * lam + 1))


def fundamental_roots(x: float, with_b: bool = False) -> FundamentalRoots:
    lam3 = lambda3_of_x(x)
    mu, nu = complex_pair(lam3)
    theta, omega = polar_angles(lam3)
    c1, c3 = c_coefficients(lam3)
    b = None
    if with_b:
        lam1 = complex(mu, nu)
        b = (b_coefficient(lam1), b_coefficient(lam1.conjugate()), b_coefficient(complex(lam3)))
    return FundamentalRoots(
        x=x,
        lambda3=lam3,
        mu=mu,
        nu=nu,
        r=1.0 / math.sqrt(lam3),
        theta=float(theta),
        omega=float(omega),
        s_abs=abs(c1),
        c3=c3,
        disc=discriminant(x),
        b_coeffs=b,
    )


def arccot_angles(lam: float) -> tuple[float, float]:
    """theta and omega through arccot with the principal branch in (0, pi).

    Kept as a cross-check of ``polar_angles``.
    """
    _check_open(lam)
    sq = math.sqrt(_radicand(lam))
    cot_theta = (lam * lam - 6.0 * lam + 1.0) / ((lam - 1.0) * sq)
    cot_omega = (lam + 1.0) * sq / (lam * lam + 10.0 * lam + 1.0)
    return _arccot(cot_theta), _arccot(cot_omega)


def _arccot(t: float) -> float:
    return math.pi / 2.0 - math.atan(t)
