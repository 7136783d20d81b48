"""Self-checks behind ``qzeros verify``.

Each check returns a ``Check``; a suite passes when every check does.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from qzeros import cubicroots, dist, moments, polyfam, zeros
from qzeros.arith import ID, SQUARE

SUITES = ("recursion", "roots", "moments", "dist")

OEIS_A091527 = (1, 4, 30, 256, 2310, 21504, 204204, 1966080, 19122246)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)


def _run(suite: str, name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing check is a failed check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(suite, name, bool(ok), detail, time.perf_counter() - t0)


def _four_term(n_max: int = 200):
    qs = polyfam.four_term_prefix(n_max)
    bad = [n for n in range(1, n_max + 1) if qs[n] != polyfam.volterra_poly(SQUARE, n)]
    return not bad, f"n <= {n_max}, mismatches: {bad[:5]}"


def _non_orthogonal():
    sq = {polyfam.three_term_remainder(SQUARE, n)[n - 2] for n in range(3, 51)}
    idc = {polyfam.three_term_remainder(ID, n)[n - 2] for n in range(3, 51)}
    return sq == {8} and idc == {0}, f"x^(n-2) coefficients: s -> {sorted(sq)}, id -> {sorted(idc)}"


def _log_concave(n_max: int = 200):
    qs = polyfam.four_term_prefix(n_max)
    bad = [n for n in range(1, n_max + 1) if not polyfam.log_concavity_check(qs[n])]
    return not bad, f"n <= {n_max}, failures: {bad[:5]}"


def _fundamental_roots():
    grid = np.linspace(cubicroots.LAMBDA_MIN + 1e-6, 1.0 - 1e-6, 2001)
    worst = 0.0
    thetas, omegas = [], []
    for lam in grid:
        lam = float(lam)
        mu, nu = cubicroots.complex_pair(lam)
        c1, c3 = cubicroots.c_coefficients(lam)
        theta, omega = cubicroots.polar_angles(lam)
        x = cubicroots.x_of_lambda(lam)
        lam1 = complex(mu, nu)
        scale = abs(lam1) ** 3 + abs(x + 3) * abs(lam1) ** 2 + abs(x - 3) * abs(lam1) + 1
        errs = (
            abs(cubicroots.charpoly(lam1, x)) / scale,
            abs((mu * mu + nu * nu) * lam - 1.0),
            abs(2 * mu + lam - 3 - x) / (3 + abs(x)),
            abs(math.atan2(nu, mu) - theta),
            abs(math.atan2(c1.imag, c1.real) - omega),
        )
        worst = max(worst, *errs)
        # |c1|^2 - c3^2 ~ (1 - lambda3)^6 falls below binary64 resolution near 1
        separated = abs(c1) > abs(c3) or lam > 0.99
        if not (nu > 0 and c1.real > 0 and c1.imag > 0 and separated):
            return False, f"sign/ordering violated at lambda3={lam}"
        thetas.append(theta)
        omegas.append(omega)
    monotone = bool(np.all(np.diff(thetas) < 0) and np.all(np.diff(omegas) < 0))
    return worst <= 1e-10 and monotone, f"max identity error {worst:.3g}, angles decreasing: {monotone}"


def _sturm_agreement(n_max: int = 40):
    worst = 0.0
    for n in range(1, n_max + 1):
        rep = zeros.sturm_report(n)
        if not (rep["squarefree"] and rep["real_roots"] == n and rep["in_range"] == n):
            return False, f"Sturm report failed at n={n}: {rep}"
        worst = max(worst, float(np.max(np.abs(zeros.zeros_angle(n).zeros - zeros.zeros_exact(n).zeros))))
    return worst <= 1e-9, f"n <= {n_max}, max |angle - sturm| = {worst:.3g}"


def _angle_scaling(n: int = 2000):
    t0 = time.perf_counter()
    zs = zeros.zeros_angle(n)
    elapsed = time.perf_counter() - t0
    ok = (
        len(zs) == n
        and elapsed < 10.0
        and float(zs.residuals.max()) <= 1e-10
        and float(zs.zeros.max()) < zeros.UPPER
        and bool(np.all(np.diff(zs.zeros) > 0))
    )
    return ok, f"n={n} in {elapsed:.2f}s, max residual {zs.residuals.max():.3g}, max zero {zs.zeros.max():.12g}"


def _moment_triangle(m_max: int = 60):
    series = moments.L_series(m_max)
    bad = [m for m in range(1, m_max + 1) if not moments.L_closed(m) == moments.L_sum(m) == series[m - 1]]
    head = tuple(moments.L_closed(m) for m in range(9))
    ok = not bad and head == OEIS_A091527
    return ok, f"m <= {m_max}, disagreements: {bad[:5]}, first nine: {head}"


def _cdf_derivative():
    xs = dist.UPPER * np.arange(1, 1001) / 1001.0
    h = 1e-6
    fd = (dist.cdf_F(xs + h) - dist.cdf_F(xs - h)) / (2 * h)
    v = np.array([dist.density_v(float(x)) for x in xs])
    rel = float(np.max(np.abs(fd / v - 1.0)))
    norm = abs(dist.cdf_F(dist.UPPER) - dist.cdf_F(0.0) - 1.0)
    scal = max(abs(dist.density_v(float(x)) / (dist.density_v32(float(x) / 4) / 4) - 1.0) for x in xs)
    ok = rel <= 1e-6 and norm <= 1e-14 and scal <= 1e-12
    return ok, f"F'/v - 1: {rel:.3g}; F(6 sqrt 3) - F(0) - 1: {norm:.3g}; v vs v32: {scal:.3g}"


def _moment_closure(m_max: int = 8):
    rel = max(abs(dist.density_moment(m) / moments.L_closed(m) - 1.0) for m in range(1, m_max + 1))
    return rel <= 1e-8, f"m <= {m_max}, max relative error {rel:.3g}"


def _ks_sweep():
    ks = [dist.ks_statistic(zeros.zeros_angle(n)) for n in (100, 300, 1000)]
    ok = ks[0] > ks[1] > ks[2]
    return ok, "KS at n=100,300,1000: " + ", ".join(f"{k:.4g}" for k in ks)


_SUITE_CHECKS: dict[str, list[tuple[str, Callable[[], tuple[bool, str]]]]] = {
    "recursion": [
        ("four-term recursion equals hereditary recursion", _four_term),
        ("three-term obstruction (s: 8, id: 0)", _non_orthogonal),
        ("log-concavity of Q_n", _log_concave),
    ],
    "roots": [
        ("fundamental-root identities", _fundamental_roots),
        ("Sturm oracle vs angle method", _sturm_agreement),
        ("angle method at n=2000", _angle_scaling),
    ],
    "moments": [("closed = double sum = series", _moment_triangle)],
    "dist": [
        ("CDF derivative equals density", _cdf_derivative),
        ("density moments reproduce L_m", _moment_closure),
        ("KS decreases with n", _ks_sweep),
    ],
}


def run_suite(suite: str) -> list[Check]:
    names = SUITES if suite == "all" else (suite,)
    if any(s not in _SUITE_CHECKS for s in names):
        raise ValueError(f"unknown suite {suite!r}")
    return [_run(s, name, fn) for s in names for name, fn in _SUITE_CHECKS[s]]
