"""Polynomial machinery: closed forms vs the recurrence oracle, relations."""

import math
from fractions import Fraction

import pytest

from oddsqueeze.orthopoly import (
    RationalPoly,
    assoc_legendre,
    gegenbauer,
    jacobi_poly_coeffs,
    jacobi_recurrence,
    jacobi_sum_a,
    jacobi_sum_b,
    relation_gegenbauer,
    relation_legendre,
)

X_GRID = (Fraction(0), Fraction(1, 7), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1))


def test_rational_poly_basics():
    p = RationalPoly([Fraction(1), Fraction(-2), Fraction(1)])
    assert p.degree == 2
    assert p(Fraction(1, 2)) == Fraction(1, 4)
    assert (p * p).degree == 4
    assert RationalPoly([Fraction(0)]).degree == -1
    q = RationalPoly([Fraction(2), Fraction(1)])
    assert (p + q)(Fraction(3)) == p(Fraction(3)) + q(Fraction(3))


def test_rational_poly_rejects_float_eval():
    with pytest.raises(TypeError):
        RationalPoly([Fraction(1)])(0.5)


def test_jacobi_sum_a_examples():
    assert jacobi_sum_a(0, 4, Fraction(1, 3)) == 1
    assert jacobi_sum_a(1, 1, Fraction(0)) == 2
    assert jacobi_sum_a(1, 1, Fraction(1)) == Fraction(-3, 2)


def test_jacobi_sum_b_examples():
    assert jacobi_sum_b(0, 0, Fraction(1, 2)) == 1
    assert jacobi_sum_b(1, 1, Fraction(0)) == 2
    # P_1^(1,1/2)(1-2x) = 2 - (7/2) x, so at x = 1/2 the value is 1/4.
    assert jacobi_sum_b(1, 1, Fraction(1, 2)) == Fraction(1, 4)


def test_exact_forms_reject_floats_and_negatives():
    with pytest.raises(TypeError):
        jacobi_sum_a(1, 1, 0.5)
    with pytest.raises(TypeError):
        jacobi_sum_b(1, 1, 0.5)
    with pytest.raises(ValueError):
        jacobi_sum_a(-1, 0, Fraction(0))
    with pytest.raises(ValueError):
        jacobi_sum_b(0, -1, Fraction(0))


def test_form_equivalence_exact():
    for n in range(13):
        for alpha in range(13):
            for x in X_GRID:
                assert jacobi_sum_a(n, alpha, x) == jacobi_sum_b(n, alpha, x)


def test_poly_coeffs_match_sum_b():
    for n in range(7):
        for alpha in range(7):
            poly = jacobi_poly_coeffs(n, alpha)
            assert poly.degree == n
            for x in X_GRID:
                assert poly(x) == jacobi_sum_b(n, alpha, x)


def test_jacobi_recurrence_examples():
    assert jacobi_recurrence(0, 3.0, 0.5, 0.2) == 1.0
    assert abs(jacobi_recurrence(1, 1, 0.5, 1.0) - 2.0) < 1e-14
    assert abs(jacobi_recurrence(1, 1, 0.5, -1.0) + 1.5) < 1e-14


def test_closed_forms_against_recurrence_oracle():
    for n in range(13):
        for alpha in range(13):
            for k in range(21):
                x = k / 20.0
                expected = jacobi_recurrence(n, alpha, 0.5, 1.0 - 2.0 * x)
                got = float(jacobi_sum_a(n, alpha, Fraction(k, 20)))
                assert abs(got - expected) <= 1e-10 * max(1.0, abs(expected))


def test_gegenbauer_examples():
    assert gegenbauer(0, 2.5, 0.3) == 1.0
    assert abs(gegenbauer(1, 1.5, 0.5) - 1.5) < 1e-14
    # C_n^(1/2) is the Legendre polynomial; P_3(1) = 1.
    assert abs(gegenbauer(3, 0.5, 1.0) - 1.0) < 1e-12


def test_gegenbauer_odd_parity():
    for n in range(9):
        lam = n + 0.5
        for t in (0.1, 0.35, 0.8):
            assert abs(gegenbauer(2 * n + 1, lam, -t) + gegenbauer(2 * n + 1, lam, t)) <= 1e-12


def test_assoc_legendre_examples():
    assert abs(assoc_legendre(1, 0, 0.42) - 0.42) < 1e-15
    assert abs(assoc_legendre(2, 1, 0.5) - (-3.0 * 0.5 * math.sqrt(0.75))) < 1e-12
    assert abs(assoc_legendre(2, 2, 0.0) - 3.0) < 1e-14


def test_assoc_legendre_rejects_bad_order():
    with pytest.raises(ValueError):
        assoc_legendre(2, 3, 0.5)


def test_relation_gegenbauer_examples():
    lhs, rhs = relation_gegenbauer(0, 0, 1.0)
    assert abs(lhs - 1.0) < 1e-14 and abs(rhs - 1.0) < 1e-12
    lhs, rhs = relation_gegenbauer(1, 1, 0.0)
    assert abs(lhs - 0.25) < 1e-14
    assert abs(lhs - rhs) <= 1e-12
    lhs, rhs = relation_gegenbauer(2, 3, 0.3)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


def test_relation_legendre_examples():
    lhs, rhs = relation_legendre(0, 0, 0.0)
    assert abs(lhs - 1.0) < 1e-14 and abs(rhs - 1.0) < 1e-12
    for n, alpha in ((1, 0), (1, 2)):
        lhs, rhs = relation_legendre(n, alpha, 0.5)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


@pytest.mark.parametrize("x", (-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9, 1.0))
def test_relation_gegenbauer_grid(x):
    for n in range(9):
        for alpha in range(9):
            lhs, rhs = relation_gegenbauer(n, alpha, x)
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs), abs(rhs))


@pytest.mark.parametrize("x", (-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9, 0.99))
def test_relation_legendre_grid(x):
    for n in range(9):
        for alpha in range(9):
            lhs, rhs = relation_legendre(n, alpha, x)
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs), abs(rhs))


def test_relation_domain_errors():
    with pytest.raises(ValueError):
        relation_gegenbauer(1, 1, -1.0)
    with pytest.raises(ValueError):
        relation_legendre(1, 1, 1.0)
