"""Exact generation of P_n^{g,h} and the structural facts about Q_n = P_n^{s,1}.

Coefficients are Python ints where integral and ``Fraction`` otherwise, so
every identity in this module is checked with exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from numbers import Rational
from typing import Sequence

from qzeros.arith import ID, ONE, SQUARE, ArithmeticFunction


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _strip(coeffs: Sequence) -> tuple:
    out = [_norm(c) for c in coeffs]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out) if out else (0,)


@dataclass(frozen=True)
class ExactPolynomial:
    """Dense polynomial; ``coeffs[k]`` is the coefficient of x^k."""

    coeffs: tuple

    def __init__(self, coeffs: Sequence):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @property
    def degree(self) -> int:
        if self.coeffs == (0,):
            return 0
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc) if isinstance(acc, Rational) else acc

    def __eq__(self, other):
        if isinstance(other, ExactPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: ExactPolynomial) -> ExactPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ExactPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> ExactPolynomial:
        return ExactPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: ExactPolynomial) -> ExactPolynomial:
        return self + (-other)

    def __mul__(self, other) -> ExactPolynomial:
        if isinstance(other, ExactPolynomial):
            a, b = self.coeffs, other.coeffs
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return ExactPolynomial(out)
        return ExactPolynomial([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> ExactPolynomial:
        """Multiply by x^k."""
        return ExactPolynomial([0] * k + list(self.coeffs))

    def compose_neg(self) -> ExactPolynomial:
        """p(-x)."""
        return ExactPolynomial([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    def derivative(self) -> ExactPolynomial:
        return ExactPolynomial([k * c for k, c in enumerate(self.coeffs)][1:] or [0])

    def __repr__(self):
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return "ExactPolynomial(" + (" + ".join(terms) or "0") + ")"


X = ExactPolynomial([0, 1])


@dataclass(frozen=True)
class FamilySpec:
    g: ArithmeticFunction
    h: ArithmeticFunction = ONE

    def __post_init__(self):
        if self.h not in (ONE, ID):
            raise ValueError("h must be One or Id")


# (g, h) -> list of coefficient tuples P_0, P_1, ...
_PREFIX: dict[FamilySpec, list[tuple]] = {}


def _extend(spec: FamilySpec, n: int) -> list[tuple]:
    prefix = _PREFIX.setdefault(spec, [(1,)])
    g = spec.g
    gs = [0] + [g(k) for k in range(1, n + 1)]
    for m in range(len(prefix), n + 1):
        acc = [0] * m
        for k in range(1, m + 1):
            gk = gs[k]
            for i, c in enumerate(prefix[m - k]):
                acc[i] += gk * c
        hm = spec.h(m)
        if hm != 1:
            acc = [_norm(Fraction(c, hm)) if isinstance(c, int) else _norm(c / hm) for c in acc]
        prefix.append(tuple([0] + acc))
    return prefix


def volterra_poly(spec: FamilySpec | ArithmeticFunction, n: int) -> ExactPolynomial:
    """P_n^{g,h}(x) = (x / h(n)) * sum_{k=1}^n g(k) P_{n-k}(x), P_0 = 1.

    The whole prefix P_0..P_n is cached per family; the recursion is
    hereditary so there is nothing cheaper for general g.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if isinstance(spec, ArithmeticFunction):
        spec = FamilySpec(spec)
    return ExactPolynomial(_extend(spec, n)[n])


def volterra_prefix(spec: FamilySpec, n: int) -> list[ExactPolynomial]:
    return [ExactPolynomial(c) for c in _extend(spec, n)[: n + 1]]


def clear_cache() -> None:
    _PREFIX.clear()


def four_term_prefix(n: int) -> list[ExactPolynomial]:
    """Q_0..Q_n from Q_n = (x+3)Q_{n-1} + (x-3)Q_{n-2} + Q_{n-3}, n >= 4."""
    qs = [(1,), (0, 1), (0, 4, 1), (0, 9, 8, 1)][: n + 1]
    for m in range(4, n + 1):
        a, b, c = qs[m - 1], qs[m - 2], qs[m - 3]
        out = [0] * (m + 1)
        for i, v in enumerate(a):
            out[i + 1] += v
            out[i] += 3 * v
        for i, v in enumerate(b):
            out[i + 1] += v
            out[i] -= 3 * v
        for i, v in enumerate(c):
            out[i] += v
        qs.append(tuple(out))
    return [ExactPolynomial(q) for q in qs]


def four_term_poly(n: int) -> ExactPolynomial:
    if n < 1:
        raise ValueError("four-term recursion starts at n = 1")
    return four_term_prefix(n)[n]


def _binom(n: int, k: int) -> int:
    # zero whenever n < k, including negative n
    if k < 0 or n < k:
        return 0
    return comb(n, k)


def top_coefficients(g: ArithmeticFunction, n: int) -> tuple:
    """Closed forms for A_{n,n}, A_{n,n-1}, A_{n,n-2}, A_{n,n-3} of P_n^{g,1}.

    Entries whose index n-j would be negative are ``None``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    g2, g3, g4 = g(2), g(3), g(4)
    vals = (
        1,
        g2 * (n - 1),
        g2**2 * _binom(n - 2, 2) + g3 * (n - 2),
        g2**3 * _binom(n - 3, 3) + 2 * g2 * g3 * _binom(n - 3, 2) + g4 * (n - 3),
    )
    return tuple(v if n - j >= 0 else None for j, v in enumerate(vals))


def orthogonality_obstruction(g: ArithmeticFunction) -> int:
    """g(2)^3 - 2 g(2) g(3) + g(4); nonzero rules out orthogonality."""
    g2 = g(2)
    return g2**3 - 2 * g2 * g(3) + g(4)


def three_term_remainder(g: ArithmeticFunction, n: int) -> ExactPolynomial:
    """P_{n+1} - (x + g(2)) P_n - (g(3) - g(2)^2) P_{n-1} for h = 1.

    Favard would need this to vanish; its x^{n-2} coefficient is the
    obstruction above.
    """
    if n < 3:
        raise ValueError("three_term_remainder needs n >= 3")
    spec = FamilySpec(g)
    p_next, p, p_prev = (volterra_poly(spec, m) for m in (n + 1, n, n - 1))
    g2 = g(2)
    return p_next - p.shift() - p * g2 - p_prev * (g(3) - g2 * g2)


def laguerre_transform(n: int) -> ExactPolynomial:
    """Coefficients A_{n,k}^{s,1} / k!; equal to P_n^{cube,id}."""
    q = volterra_poly(SQUARE, n)
    return ExactPolynomial([Fraction(c, factorial(k)) for k, c in enumerate(q.coeffs)])


def log_concavity_check(p: ExactPolynomial) -> bool:
    """A_k^2 >= A_{k-1} A_{k+1} over the support, with no internal zeros."""
    cs = p.coeffs
    if any(c < 0 for c in cs):
        raise ValueError("log-concavity check expects nonnegative coefficients")
    support = [k for k, c in enumerate(cs) if c != 0]
    if not support:
        return True
    lo, hi = support[0], support[-1]
    for k in range(lo + 1, hi):
        if cs[k] * cs[k] < cs[k - 1] * cs[k + 1] or cs[k] == 0:
            return False
    return True
