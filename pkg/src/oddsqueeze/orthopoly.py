"""Jacobi, Gegenbauer and associated Legendre polynomial machinery.

Two exact closed forms for the Jacobi family P_n^(alpha, 1/2) evaluated at
1 - 2x are provided (`jacobi_sum_a`, `jacobi_sum_b`); both take a rational
x in [0, 1] and return identical exact rationals. A floating three-term
recurrence (`jacobi_recurrence`) serves as the independent oracle. The two
cross-relations to Gegenbauer and associated Legendre functions are exposed
as (lhs, rhs) pairs whose residual callers assert to be small.

Exact paths accept rational x only; float paths accept float arguments.
The two are never mixed.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exactmath import HalfGamma, binom_half, binom_int, factorial, gamma_half_ratio

RationalLike = Fraction | int


class RationalPoly:
    """Polynomial in one variable with exact rational coefficients.

    Coefficients are stored in the monomial basis, index i holding the
    coefficient of x^i, with trailing zeros trimmed (the zero polynomial
    is the empty list).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: list[Fraction] | None = None):
        coeffs = [Fraction(c) for c in (coeffs or [])]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs))

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return RationalPoly(out)

    def __mul__(self, other: "RationalPoly | RationalLike") -> "RationalPoly":
        if isinstance(other, (Fraction, int)):
            return RationalPoly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def square(self) -> "RationalPoly":
        return self * self

    def __call__(self, x: RationalLike) -> Fraction:
        if isinstance(x, float):
            raise TypeError("exact polynomial evaluation needs a rational x")
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"RationalPoly({self.coeffs!r})"


def _check_exact_args(n: int, alpha: int, x: RationalLike) -> Fraction:
    if n < 0 or alpha < 0:
        raise ValueError("degree and alpha must be nonnegative")
    if isinstance(x, float):
        raise TypeError("exact Jacobi forms need rational x; use jacobi_recurrence for floats")
    return Fraction(x)


def jacobi_sum_a(n: int, alpha: int, x: RationalLike) -> Fraction:
    """P_n^(alpha,1/2)(1-2x) via the binomial-pair expansion, exactly.

    Sum over l of C(alpha+n, l) C(n+1/2, n-l) (-1)^(n-l) x^(n-l) (1-x)^l.
    """
    xf = _check_exact_args(n, alpha, x)
    p = alpha + n
    one_minus = 1 - xf
    total = Fraction(0)
    for l in range(n + 1):
        term = binom_int(p, l) * binom_half(n, n - l) * xf ** (n - l) * one_minus**l
        if (n - l) % 2:
            term = -term
        total += term
    return total


def jacobi_poly_coeffs(n: int, alpha: int) -> RationalPoly:
    """Exact monomial coefficients of P_n^(alpha,1/2)(1-2x) in the variable x.

    Coefficient of x^m is (p!/n!) (-1)^m C(n,m) [Gamma(p+m+3/2)/Gamma(p+3/2)]
    / (alpha+m)! with p = alpha + n.
    """
    if n < 0 or alpha < 0:
        raise ValueError("degree and alpha must be nonnegative")
    p = alpha + n
    lead = factorial(p) / factorial(n)
    coeffs = []
    for m in range(n + 1):
        c = lead * binom_int(n, m) * gamma_half_ratio(p + m, p) / factorial(alpha + m)
        coeffs.append(-c if m % 2 else c)
    return RationalPoly(coeffs)


def jacobi_sum_b(n: int, alpha: int, x: RationalLike) -> Fraction:
    """P_n^(alpha,1/2)(1-2x) via the Gamma-ratio power series, exactly.

    Same value as `jacobi_sum_a` through a structurally different sum; all
    Gamma ratios are reduced rationally before evaluation.
    """
    xf = _check_exact_args(n, alpha, x)
    return jacobi_poly_coeffs(n, alpha)(xf)


def jacobi_recurrence(n: int, alpha: float, beta: float, y: float) -> float:
    """P_n^(alpha,beta)(y) by the standard three-term recurrence, in floats.

    Independent oracle for the exact closed forms (note those are evaluated
    at 1 - 2x, so compare against jacobi_recurrence(n, alpha, 1/2, 1 - 2x)).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha = float(alpha)
    beta = float(beta)
    if n == 0:
        return 1.0
    prev = 1.0
    cur = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * y
    for k in range(2, n + 1):
        s = alpha + beta
        a = 2.0 * k * (k + s) * (2.0 * k + s - 2.0)
        b = (2.0 * k + s - 1.0) * ((2.0 * k + s) * (2.0 * k + s - 2.0) * y + alpha**2 - beta**2)
        c = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + s)
        cur, prev = (b * cur - c * prev) / a, cur
    return cur


def gegenbauer(nu: int, lam: float, t: float) -> float:
    """Gegenbauer polynomial C_nu^(lam)(t) by three-term recurrence."""
    if nu < 0:
        raise ValueError("degree must be nonnegative")
    if lam <= 0:
        raise ValueError("lambda must be positive")
    if nu == 0:
        return 1.0
    prev = 1.0
    cur = 2.0 * lam * t
    for k in range(2, nu + 1):
        cur, prev = (2.0 * t * (k + lam - 1.0) * cur - (k + 2.0 * lam - 2.0) * prev) / k, cur
    return cur


def assoc_legendre(l: int, mu: int, x: float) -> float:
    """Associated Legendre function P_l^mu(x), Condon-Shortley sign included.

    Stable upward recurrence in the degree, seeded at l = mu. The (-1)^mu
    factor matters for odd mu; squared uses are convention independent.
    """
    if mu < 0 or mu > l:
        raise ValueError("order must satisfy 0 <= mu <= l")
    # P_mu^mu = (-1)^mu (2mu-1)!! (1-x^2)^(mu/2)
    pmm = 1.0
    somx2 = math.sqrt(max(0.0, (1.0 - x) * (1.0 + x)))
    fact = 1.0
    for _ in range(mu):
        pmm *= -fact * somx2
        fact += 2.0
    if l == mu:
        return pmm
    pmmp1 = x * (2.0 * mu + 1.0) * pmm
    if l == mu + 1:
        return pmmp1
    for ll in range(mu + 2, l + 1):
        pmmp1, pmm = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + mu - 1.0) * pmm) / (ll - mu), pmmp1
    return pmmp1


def relation_gegenbauer(n: int, alpha: int, x: float) -> tuple[float, float]:
    """Both sides of the Jacobi-to-Gegenbauer relation at argument x.

    lhs is P_n^(alpha,1/2)(x) by recurrence; rhs rewrites it through
    C_(2n+1)^(alpha+1/2) evaluated at sqrt((1+x)/2). Defined for x > -1.
    """
    if n < 0 or alpha < 0:
        raise ValueError("degree and alpha must be nonnegative")
    if x <= -1.0:
        raise ValueError("relation needs x > -1")
    lhs = jacobi_recurrence(n, alpha, 0.5, x)
    t = math.sqrt((1.0 + x) / 2.0)
    factor = HalfGamma(n + 1).sqrt_pi_coeff * HalfGamma(alpha).sqrt_pi_coeff / HalfGamma(alpha + n + 1).sqrt_pi_coeff
    rhs = float(factor) / t * gegenbauer(2 * n + 1, alpha + 0.5, t)
    return lhs, rhs


def relation_legendre(n: int, alpha: int, x: float) -> tuple[float, float]:
    """Both sides of the Jacobi-to-associated-Legendre relation at x.

    lhs is P_n^(alpha,1/2)(x) by recurrence; rhs uses P_(2n+alpha+1)^alpha at
    sqrt((1+x)/2). The relation presumes the Legendre convention without the
    Condon-Shortley sign, so the (-1)^alpha of `assoc_legendre` is undone
    here (this is the single place the convention choice enters unsquared).
    Defined for x > -1, and x < 1 when alpha > 0 (singular prefactor).
    """
    if n < 0 or alpha < 0:
        raise ValueError("degree and alpha must be nonnegative")
    if x <= -1.0:
        raise ValueError("relation needs x > -1")
    if alpha > 0 and x >= 1.0:
        raise ValueError("relation needs x < 1 when alpha > 0")
    lhs = jacobi_recurrence(n, alpha, 0.5, x)
    t = math.sqrt((1.0 + x) / 2.0)
    ratio = float(gamma_half_ratio(n, alpha + n))
    sign = -1.0 if alpha % 2 else 1.0
    rhs = (
        0.5**alpha
        * ratio
        * ((1.0 - x) / 2.0) ** (-0.5 * alpha)
        / t
        * sign
        * assoc_legendre(2 * n + alpha + 1, alpha, t)
    )
    return lhs, rhs
