from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import chebyshev_u, euler_product_coeffs, laguerre_1, partition_numbers, poly_eval, ramanujan_tau
from qzeros.arith import CUBE, ID, ONE, SIGMA, SQUARE, sigma_power
from qzeros.polyfam import (
    ExactPolynomial,
    FamilySpec,
    four_term_poly,
    four_term_prefix,
    laguerre_transform,
    log_concavity_check,
    orthogonality_obstruction,
    three_term_remainder,
    top_coefficients,
    volterra_poly,
)

Q = FamilySpec(SQUARE, ONE)


def P(*coeffs):
    return ExactPolynomial(coeffs)


def test_volterra_examples():
    assert volterra_poly(Q, 0) == P(1)
    assert volterra_poly(Q, 2) == P(0, 4, 1)
    assert volterra_poly(Q, 4) == P(0, 16, 34, 12, 1)


def test_four_term_examples():
    assert four_term_poly(1) == P(0, 1)
    assert four_term_poly(3) == P(0, 9, 8, 1)
    assert four_term_poly(5) == P(0, 25, 104, 75, 16, 1)


def test_four_term_rejects_zero():
    with pytest.raises(ValueError):
        four_term_poly(0)


def test_q4_hand_expansion():
    # x (Q3 + 4 Q2 + 9 Q1 + 16 Q0)
    q = [volterra_poly(Q, m) for m in range(4)]
    assert volterra_poly(Q, 4) == (q[3] + q[2] * 4 + q[1] * 9 + q[0] * 16).shift()


def test_q_invariants():
    for n in range(1, 60):
        q = volterra_poly(Q, n)
        assert q.degree == n
        assert q[0] == 0 and q[n] == 1
        assert all(isinstance(c, int) and c >= 0 for c in q.coeffs)


def test_h_id_gives_rationals():
    p = volterra_poly(FamilySpec(ID, ID), 3)
    # (x/3)(x^2/2 + 3x + 3)
    assert p == P(0, 1, 1, Fraction(1, 6))


@pytest.mark.parametrize("g", [ONE, ID, SQUARE, CUBE, SIGMA, sigma_power(4)])
def test_top_coefficients_match_generated(g):
    for n in range(0, 30):
        p = volterra_poly(FamilySpec(g), n)
        for j, value in enumerate(top_coefficients(g, n)):
            if n - j < 0:
                assert value is None
            else:
                assert value == p[n - j], (g, n, j)


def test_top_coefficients_examples():
    assert top_coefficients(SQUARE, 5)[1] == 16 == four_term_poly(5)[4]
    assert top_coefficients(SIGMA, 3)[0] == 1
    assert top_coefficients(SQUARE, 4)[2] == 34


def test_obstruction_values():
    assert orthogonality_obstruction(SQUARE) == 8
    assert orthogonality_obstruction(ID) == 0
    assert orthogonality_obstruction(SIGMA) == 10


def test_three_term_remainder():
    r = three_term_remainder(SQUARE, 4)
    assert r.degree <= 2 and r[2] == 8
    assert three_term_remainder(ID, 4)[2] == 0
    assert three_term_remainder(SQUARE, 3)[1] == 8
    with pytest.raises(ValueError):
        three_term_remainder(SQUARE, 2)


def test_three_term_remainder_brute_force():
    # direct polynomial arithmetic on Q_3, Q_4, Q_5
    q3, q4, q5 = (four_term_poly(n) for n in (3, 4, 5))
    brute = q5 - q4.shift() - q4 * 4 - q3 * (9 - 16)
    assert brute == three_term_remainder(SQUARE, 4)


def test_id_remainder_vanishes_identically():
    # Q^id is orthogonal: the remainder is the zero polynomial
    for n in range(3, 20):
        assert three_term_remainder(ID, n) == P(0)


def test_laguerre_transform():
    assert laguerre_transform(0) == P(1)
    assert laguerre_transform(2) == P(0, 4, Fraction(1, 2))
    assert laguerre_transform(3) == P(0, 9, 4, Fraction(1, 6))
    assert laguerre_transform(3) == volterra_poly(FamilySpec(CUBE, ID), 3)


def test_log_concavity_examples():
    assert log_concavity_check(P(0, 16, 34, 12, 1))
    assert not log_concavity_check(P(1, 1, 0, 1))
    assert log_concavity_check(P(0, 1))
    assert not log_concavity_check(P(1, 1, 5))


def test_chebyshev_identity():
    spec = FamilySpec(ID, ONE)
    for n in range(1, 25):
        p = volterra_poly(spec, n)
        for x in (Fraction(-7, 3), Fraction(1, 5), Fraction(4)):
            assert p(x) == x * chebyshev_u(n - 1, x / 2 + 1)


def test_laguerre_identity():
    spec = FamilySpec(ID, ID)
    for n in range(1, 25):
        p = volterra_poly(spec, n)
        for x in (Fraction(-7, 3), Fraction(1, 5), Fraction(4)):
            assert p(x) == x / n * laguerre_1(n - 1, -x)


def test_darcais_special_values():
    """P_n^{sigma,id}(1) = p(n); at -1 the values are those of prod (1 - q^k)."""
    spec = FamilySpec(SIGMA, ID)
    p = partition_numbers(40)
    euler = euler_product_coeffs(40)
    for n in range(1, 41):
        poly = volterra_poly(spec, n)
        assert poly(1) == p[n]
        assert poly(-1) == euler[n]
    # |P_n(-1)| = p(n) already fails at n = 2
    assert abs(volterra_poly(spec, 2)(-1)) != p[2]


def test_darcais_tau():
    spec = FamilySpec(SIGMA, ID)
    tau = ramanujan_tau(20)
    for n in range(1, 21):
        assert volterra_poly(spec, n - 1)(-24) == tau[n]


def test_sandwich_small():
    for h in (ONE, ID):
        for n in range(1, 30):
            a = volterra_poly(FamilySpec(ID, h), n)
            b = volterra_poly(FamilySpec(SIGMA, h), n)
            c = volterra_poly(FamilySpec(SQUARE, h), n)
            assert all(0 < a[k] <= b[k] <= c[k] for k in range(1, n + 1))


def test_prefix_matches():
    qs = four_term_prefix(30)
    assert all(qs[n] == volterra_poly(Q, n) for n in range(1, 31))


small_fracs = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))
small_polys = st.lists(small_fracs, min_size=1, max_size=6)


@given(small_polys, small_polys, small_fracs)
def test_polynomial_ring_ops_commute_with_evaluation(a, b, x):
    pa, pb = ExactPolynomial(a), ExactPolynomial(b)
    assert (pa + pb)(x) == poly_eval(a, x) + poly_eval(b, x)
    assert (pa - pb)(x) == poly_eval(a, x) - poly_eval(b, x)
    assert (pa * pb)(x) == poly_eval(a, x) * poly_eval(b, x)
    assert pa.shift(2)(x) == x * x * poly_eval(a, x)
    assert pa.compose_neg()(x) == poly_eval(a, -x)
