"""Squeeze parameter map and closed-form odd-sector overlap amplitudes.

The amplitude <2m+1|zeta;2n+1> between an odd number state and a squeezed
odd number state has a closed form: a phase, a square-rooted ratio of
factorial/half-integer Gamma values, a power of |zeta|, the factor
(1-|zeta|^2)^(3/4), and a Jacobi polynomial P^(gap,1/2) of degree
min(m, n) at 1 - 2|zeta|^2. Two branches cover m >= n and m <= n; they
agree at m = n and are validated elsewhere against a truncated matrix
exponential of the generator.

`overlap_sq_form` exposes the exact squared magnitude as rational data
(prefactor, power of x = |zeta|^2, squared Jacobi polynomial) with an
implicit (1-x)^(3/2); this is what the radial integrals consume.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import factorial, gamma_half_ratio
from .orthopoly import RationalPoly, jacobi_poly_coeffs, jacobi_recurrence

_TWO_PI = 2.0 * math.pi


def _wrap_phase(phi: float) -> float:
    phi = math.fmod(phi, _TWO_PI)
    return phi + _TWO_PI if phi < 0.0 else phi


@dataclass(frozen=True)
class SqueezeParam:
    """Squeeze strength |xi| >= 0 and phase phi stored in [0, 2*pi)."""

    xi_modulus: float
    phase: float = 0.0

    def __post_init__(self) -> None:
        if self.xi_modulus < 0:
            raise ValueError("xi_modulus must be nonnegative")
        object.__setattr__(self, "phase", _wrap_phase(self.phase))

    @property
    def value(self) -> complex:
        return self.xi_modulus * cmath.exp(-1j * self.phase)


@dataclass(frozen=True)
class ZetaPoint:
    """Point zeta = |zeta| e^(-i phi) in the open unit disc."""

    zeta_modulus: float
    phase: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.zeta_modulus < 1.0:
            raise ValueError("zeta_modulus must lie in [0, 1)")
        object.__setattr__(self, "phase", _wrap_phase(self.phase))

    @property
    def x(self) -> float:
        """Radial variable |zeta|^2 in [0, 1)."""
        return self.zeta_modulus * self.zeta_modulus


def zeta_from_xi(p: SqueezeParam) -> ZetaPoint:
    """Map the squeeze parameter to the disc: |zeta| = tanh|xi|, phase kept.

    tanh saturates in floating point for large |xi|; the result is clamped
    below 1 so the open-disc invariant always holds.
    """
    zmod = math.tanh(p.xi_modulus)
    if zmod >= 1.0:
        zmod = math.nextafter(1.0, 0.0)
    return ZetaPoint(zmod, p.phase)


@dataclass(frozen=True)
class SquaredOverlapForm:
    """Exact |<2m+1|zeta;2n+1>|^2 = prefactor * x^x_power * (1-x)^(3/2) * poly(x)."""

    prefactor: Fraction
    x_power: int
    poly: RationalPoly = field(compare=False)

    def value_at(self, x: float) -> float:
        """Floating evaluation, including the implicit (1-x)^(3/2).

        The squared polynomial has large alternating coefficients, so it is
        evaluated exactly at the (exactly representable) float x and rounded
        once, instead of accumulating float cancellation.
        """
        poly_val = float(self.poly(Fraction(x)))
        return float(self.prefactor) * x**self.x_power * (1.0 - x) ** 1.5 * poly_val


def overlap_sq_form(m: int, n: int) -> SquaredOverlapForm:
    """Exact squared-magnitude data for the (m, n) overlap."""
    if m < 0 or n < 0:
        raise ValueError("state indices must be nonnegative")
    lo, hi = sorted((m, n))
    pref = factorial(lo) / factorial(hi) * gamma_half_ratio(hi, lo)
    return SquaredOverlapForm(pref, hi - lo, jacobi_poly_coeffs(lo, hi - lo).square())


def overlap_value(m: int, n: int, z: ZetaPoint) -> complex:
    """Closed-form amplitude <2m+1|zeta;2n+1>.

    At zeta = 0 the squeeze is the identity and number-state orthogonality
    gives delta_{mn} directly (avoiding 0^0 in the |zeta|^(m-n) factor).

    The phase factor is e^(-i(m-n)phi) on both branches: conjugating the
    squeeze by the number-operator rotation shows the (m, n) element of
    the operator for phase phi is e^(-i(m-n)phi) times the phi = 0
    element, and the matrix-exponential oracle confirms it, including for
    m < n.
    """
    if m < 0 or n < 0:
        raise ValueError("state indices must be nonnegative")
    if z.zeta_modulus == 0.0:
        return 1.0 + 0.0j if m == n else 0.0 + 0.0j
    lo, hi = sorted((m, n))
    gap = hi - lo
    x = z.x
    pref = math.sqrt(float(factorial(lo) / factorial(hi) * gamma_half_ratio(hi, lo)))
    radial = pref * z.zeta_modulus**gap * (1.0 - x) ** 0.75 * jacobi_recurrence(lo, gap, 0.5, 1.0 - 2.0 * x)
    if m < n:
        radial *= (-1.0) ** gap
    return cmath.exp(-1j * (m - n) * z.phase) * radial


def unitarity_column_sum(n: int, z: ZetaPoint, m_max: int) -> float:
    """Partial sum over m of |<2m+1|zeta;2n+1>|^2 up to m_max.

    Converges to 1 from below as m_max grows (the squeeze is unitary and
    parity preserving); successive term ratios approach |zeta|^2.
    """
    if m_max < n:
        raise ValueError("m_max must be at least n")
    return sum(abs(overlap_value(m, n, z)) ** 2 for m in range(m_max + 1))


def unitarity_column_sum_adaptive(n: int, z: ZetaPoint, tol: float = 1e-10) -> float:
    """Column norm with m_max doubled until the sum is stable to tol/10."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    x = z.x
    m_max = max(n, math.ceil(4.0 * (n + 1) / max(1.0 - x, 1e-12)))
    total = unitarity_column_sum(n, z, m_max)
    while True:
        new_m = 2 * m_max
        extra = sum(abs(overlap_value(m, n, z)) ** 2 for m in range(m_max + 1, new_m + 1))
        total += extra
        m_max = new_m
        if extra < tol / 10.0:
            return total
