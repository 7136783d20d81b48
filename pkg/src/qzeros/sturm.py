"""Sturm sequences over the integers, for exact real-root counting and isolation.

Polynomials are lists of ints, lowest degree first.  Remainders are taken
as positive multiples of the true remainder and divided by their content,
which keeps the coefficients from blowing up without changing any sign.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm


def strip(p: list[int]) -> list[int]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def primitive(p: list[int]) -> list[int]:
    c = reduce(gcd, p, 0)
    if c in (0, 1):
        return p
    return [a // c for a in p]


def integer_poly(coeffs) -> list[int]:
    """Clear denominators of rational coefficients (positive multiplier)."""
    fr = [Fraction(c) for c in coeffs]
    den = reduce(lcm, (c.denominator for c in fr), 1)
    return primitive(strip([int(c * den) for c in fr]))


def derivative(p: list[int]) -> list[int]:
    return strip([k * c for k, c in enumerate(p)][1:] or [0])


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def positive_prem(a: list[int], b: list[int]) -> list[int]:
    """A positive multiple of rem(a, b), made primitive."""
    a = strip(a)
    b = strip(b)
    db = len(b) - 1
    lb = b[-1]
    alb, sb = abs(lb), _sign(lb)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        la = a[-1]
        shift = da - db
        # a <- |lb| a - sign(lb) la x^shift b ; leading terms cancel
        a = [alb * c for c in a]
        for i, c in enumerate(b):
            a[i + shift] -= sb * la * c
        a = strip(a[:-1] or [0])
    return primitive(a)


def sturm_sequence(p: list[int]) -> list[list[int]]:
    p = primitive(strip(p))
    if len(p) == 1:
        return [p]
    seq = [p, primitive(derivative(p))]
    while len(seq[-1]) > 1:
        r = positive_prem(seq[-2], seq[-1])
        if not any(r):
            break
        seq.append([-c for c in r])
    return seq


def is_squarefree(seq: list[list[int]]) -> bool:
    """The last Sturm element is gcd(p, p') up to a constant."""
    return len(seq[-1]) == 1 and seq[-1][0] != 0


def eval_scaled(p: list[int], num: int, den: int) -> int:
    """den^deg * p(num/den) as an exact integer."""
    acc = 0
    dpow = 1
    for c in reversed(p):
        acc = acc * num + c * dpow
        dpow *= den
    return acc


def eval_sign(p: list[int], num: int, den: int) -> int:
    """Sign of p(num/den), den > 0."""
    return _sign(eval_scaled(p, num, den))


def variations(signs) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sign_changes_at(seq: list[list[int]], num: int, den: int) -> int:
    return variations(eval_sign(p, num, den) for p in seq)


def sign_changes_at_infinity(seq: list[list[int]], positive: bool) -> int:
    signs = []
    for p in seq:
        s = _sign(p[-1])
        if not positive and (len(p) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return variations(signs)


def count_real_roots(p: list[int]) -> int:
    """Number of distinct real roots of p."""
    seq = sturm_sequence(p)
    return sign_changes_at_infinity(seq, False) - sign_changes_at_infinity(seq, True)


def count_roots_in(seq: list[list[int]], a: Fraction, b: Fraction) -> int:
    """Distinct roots in the half-open interval (a, b]."""
    a, b = Fraction(a), Fraction(b)
    return sign_changes_at(seq, a.numerator, a.denominator) - sign_changes_at(
        seq, b.numerator, b.denominator
    )


def isolate(seq: list[list[int]], a: Fraction, b: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi] each holding exactly one root in (a, b]."""
    out = []
    stack = [(Fraction(a), Fraction(b), count_roots_in(seq, a, b))]
    while stack:
        lo, hi, c = stack.pop()
        if c == 0:
            continue
        if c == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = count_roots_in(seq, lo, mid)
        stack.append((mid, hi, c - left))
        stack.append((lo, mid, left))
    return sorted(out)


def refine(p: list[int], lo: Fraction, hi: Fraction, width: Fraction) -> Fraction:
    """Bisect the single root of p in (lo, hi] down to ``width``; returns the midpoint
    (or the root itself when a dyadic point hits it exactly)."""
    if eval_sign(p, hi.numerator, hi.denominator) == 0:
        return hi
    dp = derivative(p)
    s_lo = eval_sign(p, lo.numerator, lo.denominator)
    if s_lo == 0:
        # lo is a neighbouring simple root; p just right of it has the sign of p'
        s_lo = eval_sign(dp, lo.numerator, lo.denominator)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = eval_sign(p, mid.numerator, mid.denominator)
        if s == 0:
            return mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2
