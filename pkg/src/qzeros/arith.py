"""Normalized, non-vanishing arithmetic functions g, h driving the recursions."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class Tag(enum.Enum):
    ONE = "one"
    ID = "id"
    SQUARE = "s"
    CUBE = "cube"
    SIGMA = "sigma"
    SIGMA_POWER = "sigma_k"


@dataclass(frozen=True)
class ArithmeticFunction:
    """One of 1, id, n^2, n^3, sigma, or n -> sum_{d|n} d^(k-1)."""

    tag: Tag
    k: int | None = None

    def __post_init__(self):
        if self.tag is Tag.SIGMA_POWER:
            if self.k is None or self.k < 1:
                raise ValueError("SigmaPower needs a positive integer k")
        elif self.k is not None:
            raise ValueError(f"{self.tag.value} takes no parameter k")

    def __call__(self, n: int) -> int:
        return eval_arith(self, n)

    @property
    def name(self) -> str:
        if self.tag is Tag.SIGMA_POWER:
            return f"sigma_{self.k}"
        return self.tag.value


ONE = ArithmeticFunction(Tag.ONE)
ID = ArithmeticFunction(Tag.ID)
SQUARE = ArithmeticFunction(Tag.SQUARE)
CUBE = ArithmeticFunction(Tag.CUBE)
SIGMA = ArithmeticFunction(Tag.SIGMA)


def sigma_power(k: int) -> ArithmeticFunction:
    return ArithmeticFunction(Tag.SIGMA_POWER, k)


def divisors(n: int) -> list[int]:
    """Divisors of n in increasing order (trial division up to sqrt(n))."""
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def eval_arith(f: ArithmeticFunction, n: int) -> int:
    if n < 1:
        raise ValueError(f"arithmetic functions are defined for n >= 1, got {n}")
    tag = f.tag
    if tag is Tag.ONE:
        return 1
    if tag is Tag.ID:
        return n
    if tag is Tag.SQUARE:
        return n * n
    if tag is Tag.CUBE:
        return n * n * n
    if tag is Tag.SIGMA:
        return sum(divisors(n))
    return sum(d ** (f.k - 1) for d in divisors(n))


_BY_NAME = {
    "one": ONE,
    "1": ONE,
    "id": ID,
    "s": SQUARE,
    "square": SQUARE,
    "cube": CUBE,
    "sigma": SIGMA,
}

NAMES = ("one", "id", "s", "cube", "sigma", "sigma_k")


def parse_arith(name: str, k: int | None = None) -> ArithmeticFunction:
    """Look up a function by its command-line name; ``sigma_k`` needs ``k``."""
    key = name.strip().lower()
    if key == "sigma_k":
        if k is None:
            raise ValueError("sigma_k requires k")
        return sigma_power(k)
    try:
        return _BY_NAME[key]
    except KeyError:
        raise ValueError(f"unknown arithmetic function {name!r}") from None
