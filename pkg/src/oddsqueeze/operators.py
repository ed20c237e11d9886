"""Truncated Fock-space operators: the independent numerical oracle.

The squeeze operator exp((xi a_dag^2 - conj(xi) a^2)/2) is built on the
first `dim` number states and exponentiated densely. Truncation corrupts
the top of the spectrum, so results are trusted only on indices below
dim/2 and `recommended_dim` picks a dimension from the target index and
squeeze strength. The closed-form overlap amplitudes are validated against
matrix entries, and the resolution of the identity is assembled by
quadrature over the unit disc (uniform phase grid, which integrates the
e^(i k phi) dependence exactly; Gauss-Jacobi radial rule, which integrates
the polynomial radial part exactly).
"""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import expm

from .overlaps import SqueezeParam, ZetaPoint, overlap_value, zeta_from_xi
from .quadrature import GAUSS_JACOBI, QuadratureSpec, gauss_jacobi_01
from .records import VerificationRecord


def ladder_ops(dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Annihilation and creation operators on the first dim Fock levels.

    a[r, c] = sqrt(c) for r = c - 1; the creation operator is the conjugate
    transpose. The commutator [a, a_dag] equals the identity except in the
    (dim-1, dim-1) corner, the usual truncation artifact.
    """
    if dim < 2:
        raise ValueError("dim must be at least 2")
    a = np.diag(np.sqrt(np.arange(1, dim, dtype=float)), k=1).astype(complex)
    return a, a.conj().T


def recommended_dim(max_index: int, xi_modulus: float) -> int:
    """Truncation dimension that keeps Fock index max_index trustworthy.

    Squeezing populates tails like |zeta|^(2k), so the dimension grows with
    1/(1 - tanh^2|xi|); only indices below dim/2 should be read off.
    """
    if max_index < 0:
        raise ValueError("max_index must be nonnegative")
    shrink = 1.0 - math.tanh(xi_modulus) ** 2
    return max(4 * max_index, math.ceil((2 * max_index + 8) / shrink), 2)


def squeeze_matrix(param: SqueezeParam, dim: int) -> np.ndarray:
    """Matrix exponential of (xi a_dag^2 - conj(xi) a^2)/2 on dim levels.

    The generator is anti-Hermitian, so the untruncated exponential is
    unitary; the unitarity defect of the returned matrix on the retained
    block is the quality gauge (see `unitarity_defect`).
    """
    a, a_dag = ladder_ops(dim)
    xi = param.value
    gen = 0.5 * (xi * (a_dag @ a_dag) - np.conj(xi) * (a @ a))
    mat = expm(gen)
    if not np.all(np.isfinite(mat)):
        raise ArithmeticError("matrix exponential did not converge to finite entries")
    return mat


def unitarity_defect(mat: np.ndarray, retained: int | None = None) -> float:
    """Max-norm of (D_dag D - I) restricted to the first `retained` indices."""
    dim = mat.shape[0]
    retained = dim // 2 if retained is None else retained
    gram = mat.conj().T @ mat
    block = gram[:retained, :retained] - np.eye(retained)
    return float(np.max(np.abs(block)))


def parity_offblock_max(mat: np.ndarray, retained: int | None = None) -> float:
    """Largest |<even|D|odd>| style entry on the retained block.

    The generator changes the number by two, so D preserves parity and all
    cross-parity entries must vanish to rounding.
    """
    dim = mat.shape[0]
    retained = dim // 2 if retained is None else retained
    block = mat[:retained, :retained]
    even = np.arange(0, retained, 2)
    odd = np.arange(1, retained, 2)
    m1 = np.max(np.abs(block[np.ix_(even, odd)])) if even.size and odd.size else 0.0
    m2 = np.max(np.abs(block[np.ix_(odd, even)])) if even.size and odd.size else 0.0
    return float(max(m1, m2))


def overlap_crosscheck(
    m: int,
    n: int,
    param: SqueezeParam,
    dim: int,
    mat: np.ndarray | None = None,
    tol: float = 1e-8,
) -> VerificationRecord:
    """Closed-form amplitude against the matrix-exponential entry.

    Both the modulus and the complex phase are compared (the record stores
    real and imaginary parts through the complex difference magnitude).
    A precomputed matrix for the same (param, dim) may be passed to avoid
    repeated exponentials when scanning an (m, n) grid.
    """
    row, col = 2 * m + 1, 2 * n + 1
    if max(row, col) >= dim // 2:
        raise ValueError(f"dim {dim} retains indices < {dim // 2}; need {max(row, col)}")
    if mat is None:
        mat = squeeze_matrix(param, dim)
    numeric = complex(mat[row, col])
    closed = overlap_value(m, n, zeta_from_xi(param))
    abs_err = abs(numeric - closed)
    scale = max(abs(numeric), abs(closed))
    rel_err = abs_err / scale if scale > 0.0 else 0.0
    return VerificationRecord(
        check_id="overlap_crosscheck",
        params={"m": m, "n": n, "xi": param.xi_modulus, "phi": param.phase, "dim": dim},
        lhs=abs(closed),
        rhs=abs(numeric),
        abs_err=abs_err,
        rel_err=rel_err,
        exact=False,
        passed=rel_err <= tol,
        tol=tol,
    )


def disc_resolution_check(
    n: int,
    p_max: int,
    radial_spec: QuadratureSpec | None = None,
    phase_nodes: int | None = None,
) -> np.ndarray:
    """Resolution-of-identity matrix over the odd sector, by disc quadrature.

    Assembles X[p, q] = (1/2pi) * integral over the unit disc of
    d^2 zeta / (1-|zeta|^2)^2 times <2p+1|zeta;2n+1><zeta;2n+1|2q+1> for
    p, q <= p_max, using `phase_nodes` uniform phase points (exact for the
    trigonometric dependence once phase_nodes exceeds 2 p_max) and the
    Gauss-Jacobi radial rule (exact for the polynomial radial part). The
    result should match the identity matrix.
    """
    if n < 0 or p_max < 0:
        raise ValueError("n and p_max must be nonnegative")
    min_phase = 4 * (p_max + n) + 4
    if phase_nodes is None:
        phase_nodes = min_phase
    if phase_nodes < min_phase:
        raise ValueError(f"need at least {min_phase} phase nodes for exact angular integrals")
    if radial_spec is None:
        radial_spec = QuadratureSpec(GAUSS_JACOBI, p_max + n + 2, 1e-12)
    if radial_spec.kind != GAUSS_JACOBI:
        raise ValueError("the radial measure needs the gauss-jacobi rule")
    nodes, weights = gauss_jacobi_01(radial_spec.node_count)
    phis = 2.0 * math.pi * np.arange(phase_nodes) / phase_nodes

    # amplitudes[p, i, k] = <2p+1 | zeta(x_i, phi_k); 2n+1>
    amplitudes = np.empty((p_max + 1, len(nodes), phase_nodes), dtype=complex)
    for i, x in enumerate(nodes):
        zmod = math.sqrt(float(x))
        for k, phi in enumerate(phis):
            z = ZetaPoint(zmod, float(phi))
            for p in range(p_max + 1):
                amplitudes[p, i, k] = overlap_value(p, n, z)

    # Radial factor: weights already absorb (1-x)^(-1/2); the overlap pair
    # carries (1-x)^(3/2) while the measure contributes (1-x)^(-2) and 1/2.
    radial = 0.5 * weights / (1.0 - nodes) ** 1.5
    x_mat = np.einsum("i,pik,qik->pq", radial, amplitudes, np.conj(amplitudes)) / phase_nodes
    return x_mat.real
