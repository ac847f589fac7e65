import math

import pytest

from riesz_mellin.errors import PoleError, StripError
from riesz_mellin.kernels import HKernelSpec
from riesz_mellin.mellin import (COROLLARY_FORMS, VALIDATED_COROLLARY_FORM, MellinPoint, QuadratureConfig,
                                 by_parts_prefactor, corollary_closed, h_integrand, mellin_by_parts,
                                 mellin_h_closed, mellin_numeric, mellin_riesz_closed, mellin_riesz_xi0,
                                 riesz_integrand)
from riesz_mellin.special_core import gamma

CFG = QuadratureConfig()


def numeric_riesz(lam, xi, s):
    return mellin_numeric(riesz_integrand(lam, xi), MellinPoint.for_riesz(lam, s), CFG)


def numeric_h(spec, s):
    return mellin_numeric(h_integrand(spec), MellinPoint.for_h(spec, s), CFG)


def rel(a, b):
    return abs(a - b) / abs(b)


def test_beta_examples():
    assert rel(numeric_riesz(1, 0.0, 1).value, math.pi / 2) < 1e-10
    ref = 0.5 * math.gamma(0.25) * math.gamma(0.75)
    assert abs(ref - math.pi / (2 * math.sin(math.pi / 4))) < 1e-14
    assert rel(numeric_riesz(1, 0.0, 0.5).value, ref) < 1e-10


@pytest.mark.parametrize("lam, s", [(0.5, 0.3), (1.0, 1.7 + 2j), (2.3, 2.0 - 2j), (1.5 + 0.5j, 1.1 + 1j)])
def test_xi0_beta_oracle(lam, s):
    beta = 0.5 * gamma(s / 2) * gamma(lam - s / 2) / gamma(lam)
    assert rel(mellin_riesz_xi0(lam, s), beta) < 1e-13
    assert rel(numeric_riesz(lam, 0.0, s).value, beta) < 1e-9
    assert rel(mellin_riesz_closed(lam, s, 0.0), beta) < 1e-11


@pytest.mark.parametrize("q", [0, 1, 2, 3])
def test_h_transform_error_contract(q):
    res = numeric_h(HKernelSpec(1.3, q, -0.45), -q - 0.5 + 1j)
    assert math.isfinite(abs(res.value)) and 0 <= res.est_error <= CFG.rel_tol * abs(res.value)
    assert res.evaluations > 0


def test_riesz_closed_examples():
    assert rel(mellin_riesz_closed(1, 1, 0.0), math.pi / 2) < 1e-13
    assert rel(mellin_riesz_closed(0.75, 0.6, 0.5), numeric_riesz(0.75, 0.5, 0.6).value) < 1e-9
    assert rel(mellin_riesz_closed(1.5, 1 + 2j, -0.3), numeric_riesz(1.5, -0.3, 1 + 2j).value) < 1e-8


def test_riesz_closed_strip_and_poles():
    with pytest.raises(StripError):
        mellin_riesz_closed(1, 2.5, 0.1)
    with pytest.raises(PoleError):
        mellin_riesz_closed(1, 2.0, 0.1, strict=False)


def test_h_closed_examples():
    spec = HKernelSpec(1, 0, 0.0)
    assert rel(mellin_h_closed(spec, -0.5), numeric_h(spec, -0.5).value) < 1e-8
    for q in range(4):
        spec = HKernelSpec(0.8, q, 0.35)
        s = -q - 0.5 + 3j
        assert rel(mellin_h_closed(spec, s), numeric_h(spec, s).value) < 1e-7


def test_printed_kernel_without_factor_two_disagrees():
    # integrating (1 + u^2 + u xi)^(-lam) instead of the 2 u xi kernel misses the closed form
    # (q = 0: for q >= 1 the printed kernel no longer cancels the linear term and diverges)
    lam, q, xi, s = 1.2, 0, 0.6, -0.5
    spec = HKernelSpec(lam, q, xi)
    closed = mellin_h_closed(spec, s)

    def h_printed(u):
        return -(1 + u * u + u * xi) ** (-lam) + 1

    printed = mellin_numeric(h_printed, MellinPoint.for_h(spec, s), CFG).value
    assert rel(numeric_h(spec, s).value, closed) < 1e-9
    assert rel(printed, closed) > 1e-2


def test_by_parts_examples():
    spec = HKernelSpec(1, 0, 0.0)
    assert rel(mellin_by_parts(spec, -0.5).value, numeric_h(spec, -0.5).value) < 1e-7
    assert rel(mellin_by_parts(spec, 0.7).value, mellin_h_closed(spec, 0.7)) < 1e-7
    spec = HKernelSpec(2, 2, 0.4)
    # -1.5 lies in the by-parts strip (-3, 4) but not in h's own strip (-3, -2)
    with pytest.raises(StripError):
        numeric_h(spec, -1.5)
    assert rel(mellin_by_parts(spec, -1.5).value, mellin_h_closed(spec, -1.5)) < 1e-7
    assert rel(mellin_by_parts(spec, -2.5).value, numeric_h(spec, -2.5).value) < 1e-6


def test_by_parts_guards():
    spec = HKernelSpec(1, 2, 0.2)
    with pytest.raises(StripError):
        mellin_by_parts(spec, -3 + 5e-4)
    with pytest.raises(StripError):
        mellin_by_parts(spec, 2 - 5e-4)
    with pytest.raises(PoleError):
        mellin_by_parts(spec, -1 + 1e-7)


def test_by_parts_prefactor():
    s = 0.3 + 0.2j
    assert abs(by_parts_prefactor(2, s) - 1 / (s * (s + 1) * (s + 2))) < 1e-14


@pytest.mark.parametrize("k", [0, 1, 2])
def test_pole_structure(k):
    spec = HKernelSpec(1.1, 2, 0.3)
    d = 1e-3
    # the prefactor has a simple pole at -k
    for sgn in (1, -1):
        s = -k + sgn * d
        assert abs(by_parts_prefactor(2, s) * (s + k)) < 10
    res = [(sgn * d) * mellin_by_parts(spec, -k + sgn * d).value for sgn in (1, -1)]
    assert abs(res[0] / res[1] - 1) < 0.01
    for sgn in (1, -1):
        s = -k + sgn * d
        assert rel(mellin_by_parts(spec, s).value, mellin_h_closed(spec, s)) < 1e-6


def test_continuation_is_smooth():
    spec = HKernelSpec(1.4, 1, -0.25)
    s0, hstep = 0.45, 0.02
    f = lambda s: mellin_by_parts(spec, s).value
    fd = (f(s0 + hstep) - f(s0 - hstep)) / (2 * hstep)
    fd_half = (f(s0 + hstep / 2) - f(s0 - hstep / 2)) / hstep
    rich = (4 * fd_half - fd) / 3
    g = lambda s: mellin_h_closed(spec, s)
    eps = 1e-5
    closed_deriv = (g(s0 + eps) - g(s0 - eps)) / (2 * eps)
    assert rel(rich, closed_deriv) < 1e-4


def test_transform_guards():
    spec = HKernelSpec(1, 0, 0.1)
    with pytest.raises(StripError):
        numeric_h(spec, 0.2)
    with pytest.raises(Exception):
        numeric_h(spec, -0.5 + 11j)
    with pytest.raises(Exception):
        MellinPoint(-0.5, -1, 0, rho=0.4)


def test_corollary_example_n3():
    rho, xi = 0.5, 0.3
    val = corollary_closed(3, 0, rho, xi, "second")
    from riesz_mellin.legendre_cut import LegendreOrder, ferrers_p
    ref = math.pi * ferrers_p(LegendreOrder(0, rho), xi) / math.sin(math.pi * rho)
    assert rel(val, ref) < 1e-12
    assert rel(val, numeric_h(HKernelSpec(0.5, 0, xi), -rho).value) < 1e-8


@pytest.mark.parametrize("rho", [0.3, 1.5 + 0.7j, 2.8 - 1j])
@pytest.mark.parametrize("xi", [-0.7, 0.1])
def test_corollary_forms_differ_by_sign(rho, xi):
    q = int(math.floor(complex(rho).real))
    a = corollary_closed(5, q, rho, xi, "first")
    b = corollary_closed(5, q, rho, xi, "second")
    assert abs(a / b + 1) < 1e-12


def test_corollary_sign_adjudication():
    assert set(COROLLARY_FORMS) == {"first", "second"}
    spec = HKernelSpec(1.0, 1, 0.2)
    num = numeric_h(spec, -1.5).value
    assert rel(corollary_closed(4, 1, 1.5, 0.2, "second"), num) < 1e-7
    assert rel(corollary_closed(4, 1, 1.5, 0.2, "first"), num) > 1.9
    assert VALIDATED_COROLLARY_FORM == "second"
    assert corollary_closed(4, 1, 1.5, 0.2) == corollary_closed(4, 1, 1.5, 0.2, "second")


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_corollary_matches_proposition(n):
    for q, rho in [(0, 0.4 + 0.5j), (2, 2.5), (1, 1.7 - 2j)]:
        spec = HKernelSpec((n - 2) / 2, q, -0.35)
        assert rel(corollary_closed(n, q, rho, -0.35), mellin_h_closed(spec, -rho)) < 1e-10


def test_corollary_guards():
    with pytest.raises(StripError):
        corollary_closed(4, 1, 0.5, 0.2)
    with pytest.raises(PoleError):
        corollary_closed(4, 1, 1 + 1e-8 + 0j, 0.2)
    with pytest.raises(Exception):
        corollary_closed(4, 1, 1.5, 0.2, "third")
