import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qzeros.cubicroots import LAMBDA_MIN, eval_Q_scaled, x_of_lambda
from qzeros.zeros import (
    UPPER,
    Method,
    angle_brackets,
    min_distance_to,
    sturm_report,
    zeros_angle,
    zeros_exact,
)

SQRT7 = math.sqrt(7.0)


def test_small_n_examples():
    assert list(zeros_angle(1).zeros) == [0.0]
    np.testing.assert_allclose(zeros_angle(2).zeros, [0.0, 4.0], atol=1e-12)
    np.testing.assert_allclose(zeros_angle(3).zeros, [0.0, 4 - SQRT7, 4 + SQRT7], atol=1e-12)


def test_exact_examples():
    assert list(zeros_exact(2).zeros) == [0.0, 4.0]
    np.testing.assert_allclose(zeros_exact(3).zeros, [0.0, 4 - SQRT7, 4 + SQRT7], atol=1e-11)
    assert zeros_exact(3).method is Method.STURM
    np.testing.assert_allclose(zeros_angle(10).zeros, zeros_exact(10).zeros, atol=1e-9)


def test_exact_range_limit():
    with pytest.raises(ValueError):
        zeros_exact(61)


def test_brackets_n1():
    (lam,) = angle_brackets(1)
    assert x_of_lambda(lam) < 0


@pytest.mark.parametrize("n", [2, 5, 17, 200, 2000])
def test_brackets_alternate(n):
    lam = angle_brackets(n)
    assert np.all(np.diff(lam) < 0)
    assert lam[-1] > LAMBDA_MIN
    vals = np.array([eval_Q_scaled(n, float(l)) for l in lam])
    k = np.arange(1, n + 1)
    correction = 0.5 * lam ** (1.5 * n)
    assert np.all(np.abs(vals - (-1.0) ** k) <= correction + 1e-9)
    assert np.all(np.sign(vals) == (-1.0) ** k)


def test_brackets_n2_enclose_zero():
    lo, hi = sorted(-x_of_lambda(float(l)) for l in angle_brackets(2))
    assert lo < 4.0 < hi


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3000))
def test_zero_set_invariants(n):
    zs = zeros_angle(n)
    assert len(zs) == n
    assert zs.zeros[0] == 0.0
    assert np.all(np.diff(zs.zeros) > 0)
    assert zs.zeros[-1] < UPPER
    assert zs.residuals.max() <= 1e-10


def test_sturm_squarefree_and_count():
    for n in (1, 7, 33, 60):
        rep = sturm_report(n)
        assert rep == {"n": n, "squarefree": True, "real_roots": n, "in_range": n}


def test_max_zero_approaches_upper():
    tops = [zeros_angle(n).zeros[-1] for n in (10, 100, 1000, 10000)]
    assert all(a < b for a, b in zip(tops, tops[1:]))
    assert UPPER - tops[-1] < 1e-5


def test_negated_orientation():
    zs = zeros_angle(5)
    q = zs.roots_of_q()
    assert q[-1] == 0.0 and np.all(np.diff(q) > 0)
    np.testing.assert_allclose(q, -zs.zeros[::-1])


def test_min_distance_examples():
    assert min_distance_to(zeros_angle(100), 0.0) == 0.0
    for t in (UPPER, 5.0):
        d = [min_distance_to(zeros_angle(n), t) for n in (50, 200, 800)]
        assert d[0] > d[1] > d[2]


def test_covering_radius_shrinks():
    # largest distance from any point of [0, 6 sqrt 3] to the nearest zero
    def radius(n):
        z = zeros_angle(n).zeros
        return max(np.max(np.diff(z)) / 2, UPPER - z[-1])

    r = [radius(n) for n in (50, 200, 800, 3200)]
    assert all(a > b for a, b in zip(r, r[1:]))
