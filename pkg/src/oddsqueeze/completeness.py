"""Core checks: the radial completeness integral and its corollaries.

The central quantity is the weighted radial integral of the squared overlap
between odd number states and squeezed odd number states,

    (1/2) * R(p, n) * integral_0^1 x^(p-n) [P_n^(p-n,1/2)(1-2x)]^2 (1-x)^(-1/2) dx

with R the factorial/half-integer-Gamma prefactor. It equals 1 for every
0 <= n <= p, which is exactly the statement that the squeezed odd states
resolve the identity on the odd sector. This module evaluates it

* exactly, twice: once by expanding both closed forms of the Jacobi
  polynomial, integrating term by term (Beta integrals) and collapsing the
  inner alternating sum with `racah_inner_sum`; once by squaring one exact
  expansion and integrating term by term. Both paths must return the same
  rational, and that rational must be 1.
* numerically, by Gauss-Jacobi quadrature with the (1-x)^(-1/2) weight
  absorbed (exact for the polynomial part), cross-checked by tanh-sinh.

Two derived polynomial integral identities (a Gegenbauer form and an
associated-Legendre form) and a divergence probe for the even sector round
out the checks.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .exactmath import HalfGamma, beta_int, factorial, gamma_half_ratio
from .orthopoly import assoc_legendre, gegenbauer, jacobi_recurrence
from .overlaps import overlap_sq_form
from .quadrature import (
    GAUSS_JACOBI,
    GAUSS_LEGENDRE,
    TANH_SINH,
    QuadratureSpec,
    gauss_jacobi_01,
    gauss_legendre_01,
    tanh_sinh,
)
from .records import VerificationRecord


def _require_ordered(p: int, n: int) -> None:
    if n < 0 or p < n:
        raise ValueError("indices must satisfy 0 <= n <= p")


def racah_inner_sum(p: int, n: int, l: int) -> Fraction:
    """Alternating factorial sum over m of (-1)^m (p+n-l-m)! / (m!(n-m)!(p-m)!).

    For 0 <= l <= n <= p the value collapses to 1 at l = 0 and 0 for
    1 <= l <= n; callers assert that expectation, this function only
    computes the finite sum exactly.
    """
    _require_ordered(p, n)
    if l < 0 or l > n:
        raise ValueError("l must satisfy 0 <= l <= n")
    total = Fraction(0)
    for m in range(n + 1):
        term = Fraction(
            math.factorial(p + n - l - m),
            math.factorial(m) * math.factorial(n - m) * math.factorial(p - m),
        )
        total += -term if m % 2 else term
    return total


def completeness_integral_racah(p: int, n: int) -> Fraction:
    """Exact value via the double-sum route with the inner sum collapsed.

    The per-l ratio Gamma(l+1/2)/Gamma(l+3/2) reduces to 2/(2l+1), keeping
    the whole evaluation rational.
    """
    _require_ordered(p, n)
    outer = Fraction(math.factorial(n) * math.factorial(p), 2)
    total = Fraction(0)
    for l in range(n + 1):
        coeff = Fraction(2, 2 * l + 1) / (
            math.factorial(l) * math.factorial(p - l) * math.factorial(n - l)
        )
        term = coeff * racah_inner_sum(p, n, l)
        total += -term if l % 2 else term
    return outer * total


def completeness_integral_beta(p: int, n: int) -> Fraction:
    """Exact value by squaring the Jacobi expansion and Beta integration."""
    _require_ordered(p, n)
    form = overlap_sq_form(p, n)
    total = Fraction(0)
    for j, c in enumerate(form.poly.coeffs):
        if c != 0:
            total += c * beta_int(form.x_power + j, 0)
    return Fraction(1, 2) * form.prefactor * total


def completeness_integral_exact(p: int, n: int) -> Fraction:
    """Exact value, computed by both independent routes.

    Raises ArithmeticError if the two routes ever disagree; they are
    algebraically equal, so a mismatch means an implementation bug.
    """
    via_racah = completeness_integral_racah(p, n)
    via_beta = completeness_integral_beta(p, n)
    if via_racah != via_beta:
        raise ArithmeticError(
            f"exact completeness routes disagree at (p={p}, n={n}): {via_racah} vs {via_beta}"
        )
    return via_racah


def gauss_jacobi_min_nodes(p: int, n: int) -> int:
    """Node count that integrates the degree p+n polynomial part exactly."""
    return (p + n) // 2 + 1


def completeness_integral_quadrature(p: int, n: int, spec: QuadratureSpec) -> float:
    """Numerical value of the radial integral under the requested rule.

    Gauss-Jacobi absorbs the (1-x)^(-1/2) weight, so with at least
    (p+n)//2 + 1 nodes the rule is exact up to rounding; fewer nodes emit
    a warning. Tanh-sinh integrates the singular integrand directly.
    Gauss-Legendre is rejected: the integrand's endpoint singularity makes
    it converge too slowly to be meaningful here.
    """
    _require_ordered(p, n)
    pref = 0.5 * float(factorial(n) / factorial(p) * gamma_half_ratio(p, n))
    gap = p - n

    def poly_part(x: float) -> float:
        return x**gap * jacobi_recurrence(n, gap, 0.5, 1.0 - 2.0 * x) ** 2

    if spec.kind == GAUSS_JACOBI:
        needed = gauss_jacobi_min_nodes(p, n)
        if spec.node_count < needed:
            warnings.warn(
                f"{spec.node_count} Gauss-Jacobi nodes cannot integrate degree {p + n} exactly"
                f" (need {needed})",
                stacklevel=2,
            )
        nodes, weights = gauss_jacobi_01(spec.node_count)
        return pref * float(np.dot(weights, [poly_part(float(x)) for x in nodes]))
    if spec.kind == TANH_SINH:
        value = tanh_sinh(lambda x, omx: poly_part(x) / math.sqrt(omx), spec.target_tol)
        return pref * value
    raise ValueError("the radial integral needs gauss-jacobi or tanh-sinh (endpoint singularity)")


def identity_gegenbauer_rhs(p: int, n: int) -> Fraction:
    """Exact right side of the Gegenbauer integral identity."""
    _require_ordered(p, n)
    coeff = HalfGamma(p - n).sqrt_pi_coeff
    return factorial(p) / factorial(n) * gamma_half_ratio(p, n) / (coeff * coeff)


def identity_legendre_rhs(p: int, n: int) -> Fraction:
    """Exact right side of the associated-Legendre integral identity."""
    _require_ordered(p, n)
    return Fraction(math.factorial(2 * p + 1), math.factorial(2 * n + 1))


def _polynomial_identity_lhs(
    integrand: Callable[[float], float], degree: int, spec: QuadratureSpec
) -> float:
    if spec.kind == GAUSS_LEGENDRE:
        nodes, weights = gauss_legendre_01(max(spec.node_count, degree // 2 + 1))
        return float(np.dot(weights, [integrand(float(x)) for x in nodes]))
    if spec.kind == TANH_SINH:
        return tanh_sinh(lambda x, omx: integrand(x), spec.target_tol)
    raise ValueError("identity integrands are polynomials; use gauss-legendre or tanh-sinh")


def identity_gegenbauer(p: int, n: int, spec: QuadratureSpec) -> VerificationRecord:
    """Check the Gegenbauer integral identity at (p, n).

    lhs integrates (1-x^2)^(p-n) [C_(2n+1)^(p-n+1/2)(x)]^2 / x^2 over [0, 1];
    the odd degree makes the integrand an even polynomial of degree 2(p+n),
    so the default Gauss-Legendre rule is exact up to rounding.
    """
    _require_ordered(p, n)
    lam = p - n + 0.5
    gap = p - n

    def integrand(x: float) -> float:
        g = gegenbauer(2 * n + 1, lam, x) / x
        return (1.0 - x * x) ** gap * g * g

    lhs = _polynomial_identity_lhs(integrand, 2 * (p + n), spec)
    rhs = identity_gegenbauer_rhs(p, n)
    return VerificationRecord.compare_float(
        "identity_gegenbauer", {"p": p, "n": n}, lhs, float(rhs), spec.target_tol
    )


def identity_legendre(p: int, n: int, spec: QuadratureSpec) -> VerificationRecord:
    """Check the associated-Legendre integral identity at (p, n).

    lhs integrates [P_(p+n+1)^(p-n)(x)]^2 / x^2 over [0, 1]; the squared
    function is an odd-degree-squared polynomial, again exactly integrable.
    """
    _require_ordered(p, n)
    l, mu = p + n + 1, p - n

    def integrand(x: float) -> float:
        v = assoc_legendre(l, mu, x) / x
        return v * v

    lhs = _polynomial_identity_lhs(integrand, 2 * (p + n), spec)
    rhs = identity_legendre_rhs(p, n)
    return VerificationRecord.compare_float(
        "identity_legendre", {"p": p, "n": n}, lhs, float(rhs), spec.target_tol
    )


def even_divergence_analytic(eps: float) -> float:
    """Closed form of the truncated even-sector normalization integral."""
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must lie in (0, 1)")
    return 1.0 / math.sqrt(eps) - 1.0


def even_divergence_probe(
    epsilons: Sequence[float],
    dim: int | None = None,
    vacuum_prob: Callable[[float], float] | None = None,
) -> list[tuple[float, float]]:
    """Truncated even-sector integral J(eps) for each requested cutoff.

    J(eps) = (1/2) * integral_0^(1-eps) of s(x) / (1-x)^2 dx, where s(x) is
    the squeezed-vacuum occupation probability |<0|zeta;0>|^2 = sqrt(1-x).
    When `dim` is given, that closed form is first validated against the
    truncated squeeze operator of that dimension at moderate x (evaluating
    the operator at the near-boundary quadrature nodes themselves would
    need a dimension of order 1/eps, so the validated closed form is what
    gets integrated). The substitution u = 1-x = e^(-s) turns the
    integrand into a smooth exponential handled by composite
    Gauss-Legendre panels.

    J grows without bound as eps -> 0, which is why no even-sector
    resolution of the identity with this measure exists.
    """
    if dim is not None:
        from .operators import squeeze_matrix
        from .overlaps import SqueezeParam

        for x in (0.3, 0.6):
            xi = math.atanh(math.sqrt(x))
            numeric = abs(squeeze_matrix(SqueezeParam(xi), dim)[0, 0]) ** 2
            expected = math.sqrt(1.0 - x)
            if abs(numeric - expected) > 1e-6 * expected:
                raise ValueError(
                    f"dim={dim} is too small: vacuum probability off by "
                    f"{abs(numeric - expected) / expected:.2e} at x={x}"
                )
    s_of = vacuum_prob if vacuum_prob is not None else lambda x: math.sqrt(1.0 - x)
    out = []
    for eps in epsilons:
        if not 0.0 < eps < 1.0:
            raise ValueError("each eps must lie in (0, 1)")
        s_top = math.log(1.0 / eps)
        panels = max(1, math.ceil(s_top))
        nodes, weights = gauss_legendre_01(16)
        total = 0.0
        width = s_top / panels
        for k in range(panels):
            base = k * width
            for t, w in zip(nodes, weights):
                s = base + width * float(t)
                u = math.exp(-s)  # u = 1 - x
                total += width * float(w) * s_of(1.0 - u) / u**2 * u
        out.append((float(eps), 0.5 * total))
    return out


def even_divergence_slope(samples: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of log J against log eps."""
    if len(samples) < 2:
        raise ValueError("need at least two samples to fit a slope")
    xs = np.log([e for e, _ in samples])
    ys = np.log([v for _, v in samples])
    return float(np.polyfit(xs, ys, 1)[0])


def resolution_diagonal(
    n: int, p_max: int, mode: str = "exact", spec: QuadratureSpec | None = None
) -> list[Fraction] | list[float]:
    """Diagonal of the resolution-of-identity operator in the odd basis.

    Entry p is the radial integral with indices sorted (the integral is
    defined for ordered indices and enters symmetrically); every entry
    must equal 1.
    """
    if n < 0 or p_max < 0:
        raise ValueError("n and p_max must be nonnegative")
    if mode == "exact":
        return [completeness_integral_exact(max(p, n), min(p, n)) for p in range(p_max + 1)]
    if mode == "quadrature":
        out = []
        for p in range(p_max + 1):
            hi, lo = max(p, n), min(p, n)
            rule = spec or QuadratureSpec(GAUSS_JACOBI, gauss_jacobi_min_nodes(hi, lo), 1e-12)
            out.append(completeness_integral_quadrature(hi, lo, rule))
        return out
    raise ValueError("mode must be 'exact' or 'quadrature'")
