"""All n zeros of Q_n(-x).

``zeros_angle`` is the scalable route: the angle equation
omega(l) + n*theta(l) = k*pi, k = 1..n, gives n points in lambda3 at which
Q_n alternates in sign; each neighbouring pair brackets exactly one zero,
and x = 0 is the remaining one.  ``zeros_exact`` isolates the same roots
with Sturm sequences over the integers and serves as the oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from qzeros import sturm
from qzeros.cubicroots import (
    LAMBDA_MIN,
    SQRT3,
    omega_from_offset,
    scaled_q_from_offset,
    theta_from_offset,
    x_from_offset,
)
from qzeros.polyfam import volterra_poly
from qzeros.arith import SQUARE

UPPER = 6.0 * SQRT3
EXACT_MAX_N = 60
BRACKET_EPS = 1e-13


class Method(enum.Enum):
    ANGLE = "angle"
    STURM = "sturm"


@dataclass(frozen=True)
class ZeroSet:
    """Zeros of Q_n(-x), ascending, in [0, 6 sqrt 3)."""

    n: int
    zeros: np.ndarray
    method: Method
    residuals: np.ndarray | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.zeros)

    def roots_of_q(self) -> np.ndarray:
        """Zeros of Q_n(x) itself, ascending in (-6 sqrt 3, 0]."""
        return -self.zeros[::-1]


def _bisect(f, lo: np.ndarray, hi: np.ndarray, f_lo_positive: np.ndarray, iters: int = 200):
    """Vectorized bisection; ``f_lo_positive`` says which side of each root is > 0."""
    lo = lo.copy()
    hi = hi.copy()
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        done = (mid <= lo) | (mid >= hi)
        if done.all():
            break
        pos = f(mid) > 0
        move_lo = (pos == f_lo_positive) & ~done
        lo = np.where(move_lo, mid, lo)
        hi = np.where(~move_lo & ~done, mid, hi)
    return 0.5 * (lo + hi)


def _bracket_offsets(n: int) -> np.ndarray:
    target = np.arange(1, n + 1, dtype=float) * np.pi
    lo = np.full(n, BRACKET_EPS)
    hi = np.full(n, 1.0 - LAMBDA_MIN - BRACKET_EPS)

    def f(d):
        return omega_from_offset(d) + n * theta_from_offset(d) - target

    return _bisect(f, lo, hi, np.ones(n, dtype=bool))


def angle_brackets(n: int) -> np.ndarray:
    """lambda_{3,n,k} for k = 1..n, solving omega + n theta = k pi.

    omega + n theta decreases in lambda3, so larger k sits at smaller lambda3.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return LAMBDA_MIN + _bracket_offsets(n)


def zeros_angle(n: int) -> ZeroSet:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return ZeroSet(1, np.zeros(1), Method.ANGLE, np.zeros(1))
    # bisection runs in d = lambda3 - LAMBDA_MIN, see cubicroots
    d_k = _bracket_offsets(n)
    # zero k (k = 1..n-1) lies between lambda_{k+1} < lambda_k
    lo, hi = d_k[1:], d_k[:-1]
    f_lo = scaled_q_from_offset(n, lo)
    f_hi = scaled_q_from_offset(n, hi)
    if np.any(np.sign(f_lo) * np.sign(f_hi) >= 0):
        bad = int(np.argmax(np.sign(f_lo) * np.sign(f_hi) >= 0)) + 1
        raise RuntimeError(f"no sign change of Q_{n} in bracket {bad}")

    def f(d):
        return scaled_q_from_offset(n, d)

    d_root = _bisect(f, lo, hi, f_lo > 0)
    residuals = np.abs(scaled_q_from_offset(n, d_root))
    x = x_from_offset(d_root)
    zs = np.concatenate(([0.0], -x))
    res = np.concatenate(([0.0], residuals))
    order = np.argsort(zs, kind="stable")
    return ZeroSet(n, zs[order], Method.ANGLE, res[order])


def q_neg_integer_poly(n: int) -> list[int]:
    """Integer coefficients of Q_n(-x)."""
    return list(volterra_poly(SQUARE, n).compose_neg().coeffs)


def zeros_exact(n: int, width: float = 1e-12) -> ZeroSet:
    """Sturm isolation on (-1, 15] followed by exact dyadic bisection."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > EXACT_MAX_N:
        raise ValueError(f"exact oracle limited to n <= {EXACT_MAX_N}")
    p = q_neg_integer_poly(n)
    seq = sturm.sturm_sequence(p)
    intervals = sturm.isolate(seq, Fraction(-1), Fraction(15))
    w = Fraction(width)
    roots = [float(sturm.refine(p, lo, hi, w)) for lo, hi in intervals]
    return ZeroSet(n, np.array(sorted(roots)), Method.STURM)


def sturm_report(n: int) -> dict:
    """Root count, squarefreeness and the total real-root count of Q_n(-x)."""
    p = q_neg_integer_poly(n)
    seq = sturm.sturm_sequence(p)
    return {
        "n": n,
        "squarefree": sturm.is_squarefree(seq),
        "real_roots": sturm.sign_changes_at_infinity(seq, False)
        - sturm.sign_changes_at_infinity(seq, True),
        "in_range": sturm.count_roots_in(seq, Fraction(-1, 10**9), Fraction(UPPER)),
    }


def min_distance_to(zs: ZeroSet, t: float) -> float:
    return float(np.min(np.abs(zs.zeros - t)))
