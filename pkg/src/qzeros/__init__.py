"""Zeros, moments and limit distribution of the polynomials Q_n = P_n^{s,1}.

Q_n(x) = x * sum_{k=1}^n k^2 Q_{n-k}(x), Q_0 = 1.
"""

from qzeros.arith import (
    CUBE,
    ID,
    ONE,
    SIGMA,
    SQUARE,
    ArithmeticFunction,
    eval_arith,
    sigma_power,
)
from qzeros.polyfam import ExactPolynomial, FamilySpec, four_term_poly, volterra_poly
from qzeros.zeros import ZeroSet, zeros_angle, zeros_exact

__all__ = [
    "CUBE",
    "ID",
    "ONE",
    "SIGMA",
    "SQUARE",
    "ArithmeticFunction",
    "ExactPolynomial",
    "FamilySpec",
    "ZeroSet",
    "eval_arith",
    "four_term_poly",
    "sigma_power",
    "volterra_poly",
    "zeros_angle",
    "zeros_exact",
]
