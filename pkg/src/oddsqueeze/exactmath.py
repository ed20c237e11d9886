"""Exact integer/rational combinatorics for the completeness checks.

Everything here returns `fractions.Fraction` built on Python's unbounded
integers, so no intermediate quantity is ever rounded. Half-integer Gamma
values are carried as (rational) * sqrt(pi); only ratios are exposed, so
sqrt(pi) always cancels and results stay rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Exact rational carrier used throughout the exact evaluation paths.
BigRational = Fraction


def factorial(n: int) -> Fraction:
    """n! as an exact rational (integer-valued)."""
    if n < 0:
        raise ValueError("factorial requires n >= 0")
    return Fraction(math.factorial(n))


def binom_int(n: int, k: int) -> Fraction:
    """Binomial coefficient C(n, k); zero when k < 0 or k > n."""
    if n < 0:
        raise ValueError("binom_int requires n >= 0")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def binom_half(n: int, k: int) -> Fraction:
    """Half-integer binomial C(n + 1/2, k), exactly.

    Uses the falling product (n+1/2)(n-1/2)...(n+1/2-k+1) / k!, kept in
    integers by working with doubled arguments: the product of the odd
    numbers (2n+1)(2n-1)...(2n-2k+3) over 2^k k!.
    """
    if n < 0 or k < 0:
        raise ValueError("binom_half requires n, k >= 0")
    num = 1
    for j in range(k):
        num *= 2 * n + 1 - 2 * j
    return Fraction(num, (1 << k) * math.factorial(k))


def _half_gamma_coeff(k: int) -> Fraction:
    """Gamma(k + 1/2) / sqrt(pi) = (2k)! / (4^k k!), exact."""
    if k < 0:
        raise ValueError("half-integer Gamma needs k >= 0")
    return Fraction(math.factorial(2 * k), (1 << (2 * k)) * math.factorial(k))


@dataclass(frozen=True)
class HalfGamma:
    """Gamma(k + 1/2) represented exactly as sqrt_pi_coeff * sqrt(pi)."""

    k: int

    @property
    def sqrt_pi_coeff(self) -> Fraction:
        return _half_gamma_coeff(self.k)

    def ratio_to(self, other: "HalfGamma") -> Fraction:
        """Gamma(self.k + 1/2) / Gamma(other.k + 1/2); sqrt(pi) cancels."""
        lo, hi = sorted((self.k, other.k))
        prod = 1
        for j in range(lo, hi):
            prod *= 2 * j + 1  # (j + 1/2) doubled
        ratio = Fraction(prod, 1 << (hi - lo))
        return ratio if self.k >= other.k else 1 / ratio

    def __float__(self) -> float:
        return float(self.sqrt_pi_coeff) * math.sqrt(math.pi)


def gamma_half_ratio(a: int, b: int) -> Fraction:
    """Gamma(a + 3/2) / Gamma(b + 3/2) as an exact rational."""
    if a < 0 or b < 0:
        raise ValueError("gamma_half_ratio requires a, b >= 0")
    return HalfGamma(a + 1).ratio_to(HalfGamma(b + 1))


def beta_int(a: int, l: int) -> Fraction:
    """Integral of x^a (1-x)^(l-1/2) over [0, 1], exactly.

    Equals Gamma(l+1/2) Gamma(a+1) / Gamma(a+l+3/2); the sqrt(pi) of the
    two half-integer Gamma values cancels, leaving a rational.
    """
    if a < 0 or l < 0:
        raise ValueError("beta_int requires a, l >= 0")
    return factorial(a) * HalfGamma(l).ratio_to(HalfGamma(a + l + 1))
