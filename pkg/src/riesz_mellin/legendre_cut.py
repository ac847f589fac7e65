"""Ferrers functions (associated Legendre functions of the first kind on the
cut -1 < xi < 1) for complex order and degree.

    P^mu_nu(xi) = ((1+xi)/(1-xi))^(mu/2) F(-nu, nu+1; 1-mu; (1-xi)/2) / Gamma(1-mu)

The regularized hypergeometric function F/Gamma(c) is entire in c, so
integer orders need no special casing at this level.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .kernels import CutPoint
from .special_core import digamma, pochhammer, reciprocal_gamma

SERIES_TOL = 1e-17
SERIES_QUIET_TERMS = 3
SERIES_MAX_TERMS = 100_000
INTEGER_TOL = 1e-13
# below this distance from an integer c-a-b the connection formula loses
# about log10(1/distance) digits, so the direct series is preferred
NEAR_DEGENERATE = 1e-2
EDGE_TOL = 1e-10


@dataclass(frozen=True)
class LegendreOrder:
    mu: complex
    nu: complex

    def __post_init__(self):
        object.__setattr__(self, "mu", complex(self.mu))
        object.__setattr__(self, "nu", complex(self.nu))


def _nonpositive_int(x: complex, tol: float = 1e-14) -> int | None:
    if abs(x.imag) > tol or x.real > tol:
        return None
    k = round(x.real)
    return int(k) if abs(x.real - k) <= tol else None


def _sum_series(first: complex, ratio, start: int) -> complex:
    """Sum terms t_k with t_{k+1} = t_k * ratio(k), starting at k = start."""
    total = first
    term = first
    quiet = 0
    for k in range(start, start + SERIES_MAX_TERMS):
        term = term * ratio(k)
        total += term
        if abs(term) <= SERIES_TOL * abs(total):
            quiet += 1
            if quiet >= SERIES_QUIET_TERMS:
                return total
        else:
            quiet = 0
    raise ConvergenceError(f"hypergeometric series did not converge in {SERIES_MAX_TERMS} terms")


def _direct_series(a: complex, b: complex, c: complex, z: float) -> complex:
    if z == 0.0:
        return reciprocal_gamma(c)
    k0 = 0
    cn = _nonpositive_int(c)
    if cn is not None:
        # 1/Gamma(c+k) vanishes for k <= -c: the first surviving term is k0 = 1 - c
        k0 = 1 - cn
    first = (pochhammer(a, k0) * pochhammer(b, k0) * z ** k0
             / math.factorial(k0) * reciprocal_gamma(c + k0))
    if first == 0:
        return 0j
    return _sum_series(first, lambda k: (a + k) * (b + k) * z / ((k + 1) * (c + k)), k0)


def _log_connection(a: complex, b: complex, m: int, w: float) -> complex:
    """F(a, b; a+b+m; 1-w) / Gamma(a+b+m) for integer m >= 0 and 0 < w < 1/2.

    Logarithmic form of the connection formula when c - a - b = m.
    """
    lw = math.log(w)
    finite = 0j
    if m > 0:
        poch = 1.0 + 0j
        for k in range(m):
            finite += poch * math.factorial(m - k - 1) / math.factorial(k) * (-w) ** k
            poch *= (a + k) * (b + k)
        finite *= reciprocal_gamma(a + m) * reciprocal_gamma(b + m)

    psi_1 = digamma(1.0)
    psi_k1 = psi_1                          # psi(k+1)
    psi_km1 = digamma(m + 1.0)              # psi(k+m+1)
    psi_a = digamma(a + m)                  # psi(a+k+m)
    psi_b = digamma(b + m)                  # psi(b+k+m)
    coef = 1.0 / math.factorial(m) + 0j     # (a+m)_k (b+m)_k / (k! (k+m)!) w^k
    total = 0j
    quiet = 0
    for k in range(SERIES_MAX_TERMS):
        term = coef * (lw - psi_k1 - psi_km1 + psi_a + psi_b)
        total += term
        if abs(term) <= SERIES_TOL * abs(total) or coef == 0:
            quiet += 1
            if quiet >= SERIES_QUIET_TERMS:
                break
        else:
            quiet = 0
        coef *= (a + m + k) * (b + m + k) * w / ((k + 1) * (k + m + 1))
        psi_k1 += 1.0 / (k + 1)
        psi_km1 += 1.0 / (k + m + 1)
        psi_a += 1.0 / (a + k + m)
        psi_b += 1.0 / (b + k + m)
    else:
        raise ConvergenceError("logarithmic connection series did not converge")
    return finite - (-w) ** m * reciprocal_gamma(a) * reciprocal_gamma(b) * total


def _hyp2f1_reg(a: complex, b: complex, c: complex, z: float, w: float) -> complex:
    # w = 1 - z, supplied separately to keep digits when z is close to 1
    if z <= 0.5 or _nonpositive_int(a) is not None or _nonpositive_int(b) is not None:
        return _direct_series(a, b, c, z)
    d = c - a - b
    m = round(d.real)
    dist = abs(d - m)
    if dist <= INTEGER_TOL:
        if m >= 0:
            return _log_connection(a, b, m, w)
        # Euler: F(a,b;c;z) = (1-z)^(c-a-b) F(c-a, c-b; c; z), and c = (c-a)+(c-b)+|m|
        return w ** m * _log_connection(c - a, c - b, -m, w)
    if dist < NEAR_DEGENERATE and z <= 0.95:
        return _direct_series(a, b, c, z)
    first = reciprocal_gamma(c - a) * reciprocal_gamma(c - b) * _direct_series(a, b, 1.0 - d, w)
    second = (cmath.exp(d * math.log(w)) * reciprocal_gamma(a) * reciprocal_gamma(b)
              * _direct_series(c - a, c - b, 1.0 + d, w))
    return math.pi / cmath.sin(math.pi * d) * (first - second)


def hyp2f1_regularized(a, b, c, z) -> complex:
    """Regularized Gauss function 2F1(a, b; c; z) / Gamma(c) for real 0 <= z < 1.

    Direct power series for z <= 1/2; above that, the connection formula to
    the variable 1 - z, including the logarithmic case of integer c - a - b.
    """
    z = float(z)
    if not 0.0 <= z < 1.0:
        raise DomainError(f"z = {z} outside [0, 1)")
    return _hyp2f1_reg(complex(a), complex(b), complex(c), z, 1.0 - z)


def ferrers_p(order: LegendreOrder, xi) -> complex:
    """Ferrers function of the first kind P^mu_nu(xi) on the cut."""
    x = xi.xi if isinstance(xi, CutPoint) else float(xi)
    if not 1.0 - abs(x) >= EDGE_TOL:
        raise DomainError(f"xi = {x} is too close to (or beyond) +-1")
    mu, nu = order.mu, order.nu
    z = 0.5 * (1.0 - x)
    w = 0.5 * (1.0 + x)
    pref = cmath.exp(0.5 * mu * (math.log1p(x) - math.log1p(-x)))
    return pref * _hyp2f1_reg(-nu, nu + 1.0, 1.0 - mu, z, w)


def remark_recurrence_residual(order: LegendreOrder, theta: float) -> float:
    """Relative residual of
    (nu-mu+1) P^mu_{nu+1}(cos t) - (nu+mu+1) cos t P^mu_nu(cos t) = sin t P^{mu+1}_nu(cos t).
    """
    if not 1e-3 <= theta <= math.pi - 1e-3:
        raise DomainError("theta must stay 1e-3 away from 0 and pi")
    mu, nu = order.mu, order.nu
    c, s = math.cos(theta), math.sin(theta)
    lhs = ((nu - mu + 1) * ferrers_p(LegendreOrder(mu, nu + 1), c)
           - (nu + mu + 1) * c * ferrers_p(order, c))
    rhs = s * ferrers_p(LegendreOrder(mu + 1, nu), c)
    return abs(lhs - rhs) / (abs(lhs) + abs(rhs) + 1e-300)
