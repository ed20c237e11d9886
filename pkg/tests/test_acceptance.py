"""Acceptance criteria, one test per criterion.

Each test prints a single `criterion N: PASS|FAIL` line (run pytest with
-s or -rA to see them all) and then asserts. Tolerances are pinned here
and nowhere else.

Criterion 4b is expected to fail: the two integral identities are both
true (4a passes), but their closed-form constants are not equal to each
other in general. They differ by the square of the odd double factorial
of the index gap, so plain equality already breaks at p=2, n=0 where the
constants are 40/3 and 120. The equality check is kept as stated rather
than weakened; `test_completeness.test_identity_rhs_proportionality`
verifies the true relation exactly.
"""

import math
import time
from fractions import Fraction

import numpy as np

from oddsqueeze.completeness import (
    completeness_integral_beta,
    completeness_integral_quadrature,
    completeness_integral_racah,
    even_divergence_probe,
    even_divergence_slope,
    gauss_jacobi_min_nodes,
    identity_gegenbauer,
    identity_gegenbauer_rhs,
    identity_legendre,
    identity_legendre_rhs,
    racah_inner_sum,
)
from oddsqueeze.operators import (
    overlap_crosscheck,
    parity_offblock_max,
    recommended_dim,
    squeeze_matrix,
)
from oddsqueeze.operators import disc_resolution_check
from oddsqueeze.orthopoly import jacobi_sum_a, jacobi_sum_b, relation_gegenbauer, relation_legendre
from oddsqueeze.overlaps import SqueezeParam, ZetaPoint, unitarity_column_sum_adaptive
from oddsqueeze.quadrature import QuadratureSpec

X_EXACT = (Fraction(0), Fraction(1, 7), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1))


def _announce(label: str, ok: bool, detail: str = "") -> None:
    suffix = f" ({detail})" if detail else ""
    print(f"{label}: {'PASS' if ok else 'FAIL'}{suffix}")


def test_criterion_1_exact_completeness():
    start = time.perf_counter()
    failures = []
    for p in range(21):
        for n in range(p + 1):
            racah = completeness_integral_racah(p, n)
            beta = completeness_integral_beta(p, n)
            if not (racah == beta == Fraction(1)):
                failures.append((p, n, racah, beta))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60.0
    _announce("criterion 1 (exact completeness, both routes, 231 cases)", ok, f"{elapsed:.2f}s")
    assert not failures, f"non-unit or mismatched values: {failures[:3]}"
    assert elapsed < 60.0, f"exact sweep took {elapsed:.1f}s"


def test_criterion_2_racah_collapse():
    failures = []
    for p in range(21):
        for n in range(p + 1):
            for l in range(n + 1):
                value = racah_inner_sum(p, n, l)
                if value != (1 if l == 0 else 0):
                    failures.append((p, n, l, value))
    _announce("criterion 2 (Racah collapse, p <= 20)", not failures)
    assert not failures, failures[:3]


def test_criterion_3_quadrature_agreement():
    worst_gj = worst_ts = 0.0
    for p in range(11):
        for n in range(p + 1):
            gj = QuadratureSpec("gauss-jacobi", gauss_jacobi_min_nodes(p, n), 1e-14)
            worst_gj = max(worst_gj, abs(completeness_integral_quadrature(p, n, gj) - 1.0))
            ts = QuadratureSpec("tanh-sinh", 1, 1e-11)
            worst_ts = max(worst_ts, abs(completeness_integral_quadrature(p, n, ts) - 1.0))
    ok = worst_gj <= 1e-12 and worst_ts <= 1e-9
    _announce("criterion 3 (quadrature agreement)", ok, f"gj={worst_gj:.2e} ts={worst_ts:.2e}")
    assert worst_gj <= 1e-12
    assert worst_ts <= 1e-9


def test_criterion_4a_new_identities_numeric():
    worst = 0.0
    for p in range(9):
        for n in range(p + 1):
            spec = QuadratureSpec("gauss-legendre", p + n + 2, 1e-8)
            for record in (identity_gegenbauer(p, n, spec), identity_legendre(p, n, spec)):
                worst = max(worst, record.rel_err)
    ok = worst <= 1e-8
    _announce("criterion 4a (integral identities, n <= p <= 8)", ok, f"worst rel={worst:.2e}")
    assert worst <= 1e-8


def test_criterion_4b_identity_rhs_cross_equality():
    mismatches = []
    for p in range(21):
        for n in range(p + 1):
            geg = identity_gegenbauer_rhs(p, n)
            leg = identity_legendre_rhs(p, n)
            if geg != leg:
                mismatches.append((p, n, geg, leg))
    _announce(
        "criterion 4b (identity right sides coincide rationally, p,n <= 20)",
        not mismatches,
        f"first mismatch {mismatches[0][:2] if mismatches else None}",
    )
    assert not mismatches, (
        "the two identity constants are proportional, not equal: "
        f"at (p, n) = {mismatches[0][:2]} they are {mismatches[0][2]} and {mismatches[0][3]}; "
        "the exact relation is geg * [(2(p-n)-1)!!]^2 = leg for every pair "
        "(verified in test_completeness.py), so equality holds only for p - n <= 1 "
        f"and fails for {len(mismatches)} of 231 pairs"
    )


def test_criterion_5_overlap_oracle():
    worst_rel = 0.0
    worst_parity = 0.0
    for xi in (0.2, 0.5, 0.8):
        dim = recommended_dim(17, xi)
        for phi in (0.0, 1.1, math.pi):
            param = SqueezeParam(xi, phi)
            mat = squeeze_matrix(param, dim)
            worst_parity = max(worst_parity, parity_offblock_max(mat))
            for m in range(9):
                for n in range(9):
                    rec = overlap_crosscheck(m, n, param, dim, mat=mat)
                    worst_rel = max(worst_rel, rec.rel_err)
    ok = worst_rel <= 1e-8 and worst_parity <= 1e-12
    _announce(
        "criterion 5 (closed form vs operator oracle)",
        ok,
        f"worst rel={worst_rel:.2e} parity={worst_parity:.2e}",
    )
    assert worst_rel <= 1e-8
    assert worst_parity <= 1e-12


def test_criterion_6_disc_resolution():
    worst = 0.0
    for n in range(5):
        x_mat = disc_resolution_check(n, 6)
        worst = max(worst, float(np.max(np.abs(x_mat - np.eye(7)))))
    ok = worst <= 1e-10
    _announce("criterion 6 (resolution of identity on the disc)", ok, f"worst={worst:.2e}")
    assert worst <= 1e-10


def test_criterion_7_even_divergence():
    samples = even_divergence_probe((1e-2, 1e-3, 1e-4, 1e-5, 1e-6))
    slope = even_divergence_slope(samples)
    ok = abs(slope + 0.5) <= 0.05
    _announce("criterion 7 (even-sector divergence)", ok, f"slope={slope:.4f}")
    assert abs(slope + 0.5) <= 0.05


def test_criterion_8_polynomial_machinery():
    for n in range(13):
        for alpha in range(13):
            for x in X_EXACT:
                assert jacobi_sum_a(n, alpha, x) == jacobi_sum_b(n, alpha, x)
    worst = 0.0
    for n in range(9):
        for alpha in range(9):
            for x in (-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9, 1.0):
                lhs, rhs = relation_gegenbauer(n, alpha, x)
                worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))
            for x in (-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9, 0.99):
                lhs, rhs = relation_legendre(n, alpha, x)
                worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))
    ok = worst <= 1e-10
    _announce("criterion 8 (polynomial machinery)", ok, f"worst relation residual={worst:.2e}")
    assert worst <= 1e-10


def test_criterion_9_unitarity_columns():
    worst = 0.0
    for n in range(7):
        for zmod in (0.1, 0.3, 0.5, 0.7, 0.9):
            total = unitarity_column_sum_adaptive(n, ZetaPoint(zmod), 1e-10)
            worst = max(worst, abs(total - 1.0))
    ok = worst <= 1e-10
    _announce("criterion 9 (adaptive unitarity column sums)", ok, f"worst={worst:.2e}")
    assert worst <= 1e-10
