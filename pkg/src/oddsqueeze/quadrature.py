"""Quadrature rules for the radial completeness integrals.

Three rules cover every integral in the suite:

* ``gauss_jacobi_01``: Gaussian rule on [0, 1] absorbing the (1-x)^(-1/2)
  endpoint weight, so a polynomial remainder of degree <= 2n-1 is integrated
  exactly. Nodes and weights come from the Golub-Welsch construction
  (symmetric tridiagonal eigenproblem built from the weight's three-term
  recurrence coefficients).
* ``gauss_legendre_01``: plain Gaussian rule on [0, 1] for the polynomial
  integrands of the two derived integral identities.
* ``tanh_sinh``: double-exponential rule, used as the method-independent
  cross-check; it handles the integrable endpoint singularity directly.

The tanh-sinh integrand callback receives both x and 1-x so integrands with
endpoint factors can avoid cancellation near x = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

GAUSS_JACOBI = "gauss-jacobi"
GAUSS_LEGENDRE = "gauss-legendre"
TANH_SINH = "tanh-sinh"
_KINDS = (GAUSS_JACOBI, GAUSS_LEGENDRE, TANH_SINH)


@dataclass(frozen=True)
class QuadratureSpec:
    """Requested rule: kind, node count (Gaussian rules), target tolerance."""

    kind: str = GAUSS_JACOBI
    node_count: int = 16
    target_tol: float = 1e-12

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown quadrature kind {self.kind!r}; expected one of {_KINDS}")
        if self.node_count < 1:
            raise ValueError("node_count must be >= 1")
        if not self.target_tol > 0:
            raise ValueError("target_tol must be positive")


@lru_cache(maxsize=None)
def gauss_jacobi_01(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [0, 1] for the weight (1-x)^(-1/2).

    sum_i w_i f(x_i) reproduces the integral of f(x) (1-x)^(-1/2) exactly
    for polynomials f of degree <= 2n-1.
    """
    if n < 1:
        raise ValueError("need at least one node")
    # Recurrence coefficients for Jacobi weight (1-t)^a (1+t)^b, a=-1/2, b=0.
    a, b = -0.5, 0.0
    ab = a + b
    i = np.arange(n, dtype=float)
    diag = np.empty(n)
    diag[0] = (b - a) / (ab + 2.0)
    if n > 1:
        ii = i[1:]
        diag[1:] = (b * b - a * a) / ((2.0 * ii + ab) * (2.0 * ii + ab + 2.0))
        s = 2.0 * ii + ab
        off = np.sqrt(4.0 * ii * (ii + a) * (ii + b) * (ii + ab) / (s * s * (s * s - 1.0)))
    else:
        off = np.empty(0)
    nodes_t, vecs = eigh_tridiagonal(diag, off)
    mu0 = 2.0 ** (ab + 1.0) * math.gamma(a + 1.0) * math.gamma(b + 1.0) / math.gamma(ab + 2.0)
    weights_t = mu0 * vecs[0, :] ** 2
    # Map [-1, 1] to [0, 1]: (1-x)^a x^b dx = 2^(-a-b-1) (1-t)^a (1+t)^b dt.
    nodes = 0.5 * (nodes_t + 1.0)
    weights = weights_t * 2.0 ** (-a - b - 1.0)
    return nodes, weights


@lru_cache(maxsize=None)
def gauss_legendre_01(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped to [0, 1]."""
    if n < 1:
        raise ValueError("need at least one node")
    t, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (t + 1.0), 0.5 * w


def tanh_sinh(f: Callable[[float, float], float], target_tol: float = 1e-12, max_level: int = 12) -> float:
    """Integrate f over (0, 1) with the double-exponential transformation.

    ``f(x, one_minus_x)`` is evaluated at transformed trapezoid points; the
    step is halved until two successive levels agree to target_tol
    (relative). Integrable endpoint singularities like (1-x)^(-1/2) are
    handled without special casing.
    """
    t_max = 4.5

    def point(t: float) -> tuple[float, float, float]:
        v = 0.5 * math.pi * math.sinh(t)
        e2 = math.exp(-2.0 * abs(v))
        sig = e2 / (1.0 + e2)  # sigmoid(-2|v|)
        x = 1.0 - sig if v >= 0 else sig
        omx = sig if v >= 0 else 1.0 - sig
        w = math.pi * math.cosh(t) * e2 / (1.0 + e2) ** 2
        return x, omx, w

    h = 1.0
    x0, omx0, w0 = point(0.0)
    total = w0 * f(x0, omx0)
    k = 1
    while True:
        t = k * h
        if t > t_max:
            break
        for tt in (t, -t):
            x, omx, w = point(tt)
            if w > 0.0:
                total += w * f(x, omx)
        k += 1
    estimate = h * total
    for _ in range(max_level):
        h *= 0.5
        t = h
        while t <= t_max:
            for tt in (t, -t):
                x, omx, w = point(tt)
                if w > 0.0:
                    total += w * f(x, omx)
            t += 2.0 * h
        new_estimate = h * total
        if abs(new_estimate - estimate) <= target_tol * max(1.0, abs(new_estimate)):
            return new_estimate
        estimate = new_estimate
    return estimate
