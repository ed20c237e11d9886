"""Exact combinatorics: frozen values and algebraic invariants."""

from fractions import Fraction

import pytest

from oddsqueeze.exactmath import HalfGamma, beta_int, binom_half, binom_int, factorial, gamma_half_ratio
from oddsqueeze.quadrature import tanh_sinh


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(12) == 479001600


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binom_int_values():
    assert binom_int(5, 2) == 10
    assert binom_int(5, 7) == 0
    assert binom_int(5, -1) == 0
    assert binom_int(0, 0) == 1


def test_binom_int_rejects_negative_n():
    with pytest.raises(ValueError):
        binom_int(-2, 1)


def test_binom_half_values():
    assert binom_half(1, 0) == 1
    assert binom_half(1, 1) == Fraction(3, 2)
    assert binom_half(1, 2) == Fraction(3, 8)


def test_gamma_half_ratio_values():
    assert gamma_half_ratio(4, 4) == 1
    assert gamma_half_ratio(1, 0) == Fraction(3, 2)
    assert gamma_half_ratio(3, 1) == Fraction(35, 4)


def test_beta_int_values():
    assert beta_int(0, 0) == 2
    assert beta_int(1, 0) == Fraction(4, 3)
    assert beta_int(0, 1) == Fraction(2, 3)


def test_half_gamma_ratio_is_rational():
    assert HalfGamma(3).ratio_to(HalfGamma(1)) == Fraction(3, 2) * Fraction(5, 2)
    assert HalfGamma(0).sqrt_pi_coeff == 1


def test_binomial_factorial_identity():
    for n in range(31):
        for k in range(n + 1):
            assert binom_int(n, k) == factorial(n) / (factorial(k) * factorial(n - k))


def test_gamma_half_ratio_reciprocal():
    for a in range(0, 41, 4):
        for b in range(0, 41, 3):
            assert gamma_half_ratio(a, b) * gamma_half_ratio(b, a) == 1


def test_beta_contiguous_relation():
    # 2(a+1) B(a, l) = (2a+2l+3) B(a+1, l), cross-multiplied exact.
    for a in range(21):
        for l in range(21):
            assert 2 * (a + 1) * beta_int(a, l) == (2 * a + 2 * l + 3) * beta_int(a + 1, l)


@pytest.mark.parametrize("a", range(0, 11, 2))
@pytest.mark.parametrize("l", range(0, 11, 2))
def test_beta_against_quadrature(a, l):
    numeric = tanh_sinh(lambda x, omx: x**a * omx ** (l - 0.5), 1e-13)
    exact = float(beta_int(a, l))
    assert abs(numeric - exact) <= 1e-12 * exact
