from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from riesz_mellin.gegenbauer import (gegenbauer, gegenbauer_partial_sum, gegenbauer_sequence,
                                     gegenbauer_tail_sum)
from riesz_mellin.kernels import CutPoint, riesz_kernel


def _binom(x, k):
    out = Fraction(1)
    for i in range(k):
        out = out * (x - i) / (i + 1)
    return out


def taylor_coefficient(j, lam, xi):
    """Coefficient of (-t)^j in (1 + 2 t xi + t^2)^(-lam), from the binomial double sum
    (1 + t(2xi + t))^(-lam) = sum_k binom(-lam, k) t^k sum_i binom(k, i) (2xi)^(k-i) t^i."""
    lam, xi = Fraction(lam), Fraction(xi)
    total = Fraction(0)
    for k in range((j + 1) // 2, j + 1):
        i = j - k
        total += _binom(-lam, k) * _binom(k, i) * (2 * xi) ** (k - i)
    return float((-1) ** j * total)


def test_degree_zero_and_one():
    assert gegenbauer(0, 2.3 + 1j, 0.4) == 1
    assert abs(gegenbauer(1, 1.5, 0.3) - 2 * 1.5 * 0.3) < 1e-15


def test_degree_four_against_taylor_oracle():
    ref = taylor_coefficient(4, Fraction(3, 2), Fraction(3, 10))
    assert abs(gegenbauer(4, 1.5, 0.3) - ref) <= 1e-14 * abs(ref)


@pytest.mark.parametrize("lam", [Fraction(1, 2), Fraction(3, 4), Fraction(5, 2), Fraction(7, 3)])
@pytest.mark.parametrize("xi", [Fraction(-9, 10), Fraction(-1, 5), Fraction(0), Fraction(3, 5)])
def test_recurrence_matches_taylor_oracle(lam, xi):
    seq = gegenbauer_sequence(20, float(lam), float(xi))
    for j in range(21):
        ref = taylor_coefficient(j, lam, xi)
        assert abs(seq[j] - ref) <= 1e-12 * max(1.0, abs(ref))


def test_partial_sum_examples():
    assert gegenbauer_partial_sum(0, 1.7, 3.0, 0.2) == 1
    assert abs(gegenbauer_partial_sum(1, 1, 0.5, 0.2) - 0.8) < 1e-15
    lam, u, xi = Fraction(3, 4), Fraction(9, 10), Fraction(-2, 5)
    ref = sum(float((-u) ** j) * taylor_coefficient(j, lam, xi) for j in range(6))
    assert abs(gegenbauer_partial_sum(5, 0.75, 0.9, -0.4) - ref) <= 1e-13 * abs(ref)


@pytest.mark.parametrize("lam", [0.5, 1.0, 2.5])
@pytest.mark.parametrize("xi", [-0.9, 0.0, 0.9])
def test_generating_function(lam, xi):
    k = riesz_kernel(0.5, CutPoint(xi), lam)
    s = gegenbauer_partial_sum(80, lam, 0.5, xi)
    assert abs(k - s) <= 1e-10 * abs(k)


def test_generating_function_converges_geometrically():
    errs = [abs(riesz_kernel(0.8, CutPoint(0.3), 1.2) - gegenbauer_partial_sum(J, 1.2, 0.8, 0.3))
            for J in (10, 20, 40)]
    assert errs[0] > errs[1] > errs[2]


@given(st.integers(0, 30), st.floats(0.05, 4), st.floats(-0.99, 0.99))
def test_parity(j, lam, xi):
    a, b = gegenbauer(j, lam, xi), gegenbauer(j, lam, -xi)
    assert abs(b - (-1) ** j * a) <= 1e-12 * max(abs(a), 1e-300) + 1e-300


@pytest.mark.parametrize("j", [0, 1, 3, 6, 10])
def test_polynomial_degree(j):
    xs = np.cos(np.pi * (np.arange(j + 1) + 0.5) / (j + 1))
    ys = np.array([gegenbauer(j, 1.3, x).real for x in xs])
    coeffs = np.polynomial.polynomial.polyfit(xs, ys, j)
    x_new = 0.123
    ref = gegenbauer(j, 1.3, x_new).real
    assert abs(np.polynomial.polynomial.polyval(x_new, coeffs) - ref) <= 1e-10 * max(1.0, abs(ref))


def test_complex_lambda_matches_taylor_in_lambda():
    # coefficient is a polynomial in lambda: check via C_2 = 2 lam (lam+1) xi^2 - lam
    lam, xi = 0.4 + 1.1j, 0.35
    assert abs(gegenbauer(2, lam, xi) - (2 * lam * (lam + 1) * xi ** 2 - lam)) < 1e-14


def test_tail_sum_completes_partial_sum():
    lam, u, xi = 1.1, 0.3, -0.25
    k = riesz_kernel(u, CutPoint(xi), lam)
    total = gegenbauer_partial_sum(3, lam, u, xi) + gegenbauer_tail_sum(3, lam, u, xi)
    assert abs(total - k) <= 1e-14
