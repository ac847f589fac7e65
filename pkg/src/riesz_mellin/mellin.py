"""Mellin transforms of the Riesz kernel and of the genus-q kernel h.

Numerical transforms integrate f(u) u^(s-1) over (0, split] and map the
tail by u -> 1/v; each piece is then written in the logarithmic variable
y = -log(v / v_max), where the integrand decays like exp(-alpha y) with alpha
the distance of Re s to the corresponding strip edge.

Closed forms assemble their gamma factors as one complex logarithm and
exponentiate once.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError, StripError
from .kernels import CutPoint, HKernelSpec, h_kernel, riesz_derivative, riesz_kernel
from .legendre_cut import LegendreOrder, ferrers_p
from .quadrature import adaptive_gk
from .special_core import DimensionSpec, LOG_PI, _log_sinpi, log_gamma

POLE_GUARD = 1e-6
EDGE_GUARD = 1e-3
MAX_IMAG_S = 10.0
LOG2 = math.log(2.0)

COROLLARY_FORMS = ("first", "second")
# fixed by the quadrature adjudication (scripts/adjudicate_corollary_sign.py)
VALIDATED_COROLLARY_FORM = "second"


@dataclass(frozen=True)
class MellinPoint:
    """Transform variable s with the open strip strip_lo < Re s < strip_hi."""

    s: complex
    strip_lo: float
    strip_hi: float
    rho: complex | None = None

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        if self.rho is not None:
            object.__setattr__(self, "rho", complex(self.rho))
            if self.s + self.rho != 0:
                raise DomainError("s and rho must satisfy s = -rho")
        if not self.strip_lo < self.strip_hi:
            raise DomainError("empty strip")
        if not self.strip_lo < self.s.real < self.strip_hi:
            raise StripError(
                f"Re s = {self.s.real} outside the strip ({self.strip_lo}, {self.strip_hi})")

    @classmethod
    def for_riesz(cls, lam, s):
        return cls(s, 0.0, 2.0 * complex(lam).real)

    @classmethod
    def for_h(cls, spec: HKernelSpec, s):
        return cls(s, -spec.q - 1.0, -float(spec.q))

    @classmethod
    def for_by_parts(cls, spec: HKernelSpec, s):
        return cls(s, -spec.q - 1.0, 2.0 * spec.lam.real)

    @classmethod
    def from_rho(cls, rho, q: int):
        rho = complex(rho)
        return cls(-rho, -q - 1.0, -float(q), rho=rho)


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-300
    max_depth: int = 60
    split_point: float = 1.0

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")
        if not self.split_point > 0:
            raise DomainError("split_point must be positive")


@dataclass(frozen=True)
class MellinResult:
    value: complex
    est_error: float
    evaluations: int


def _piece(f, s: complex, log_u0: float, direction: float, alpha: float,
           cfg: QuadratureConfig, y_cap: float, rel_tol: float):
    """Integrate f(u) u^s dy with log u = log_u0 + direction * y over y >= 0."""
    if alpha <= 0:
        raise StripError("point on the strip edge")

    def g(y):
        log_u = log_u0 + direction * y
        return f(np.exp(log_u)) * np.exp(s * log_u)

    y_max = (math.log(1.0 / rel_tol) + 12.0) / alpha
    y_max = min(y_max, y_cap)
    width = 1.0 if s.imag == 0 else min(1.0, 1.5 / abs(s.imag))
    res = adaptive_gk(g, 0.0, y_max, rel_tol=0.25 * rel_tol, abs_tol=cfg.abs_tol,
                      max_depth=cfg.max_depth, initial_width=width)
    # integrand decays like exp(-alpha y) beyond y_max
    tail = float(np.abs(g(np.array(y_max)))) / alpha
    return res.value, res.error + tail, res.evaluations + 1


def mellin_numeric(integrand, point: MellinPoint, cfg: QuadratureConfig | None = None) -> MellinResult:
    """Numerical Mellin transform  int_0^inf f(u) u^(s-1) du.

    ``integrand`` maps an ndarray of u > 0 to complex values.  The strip in
    ``point`` must be the convergence strip of the integrand: it fixes the
    algebraic decay rates used to truncate both pieces.
    """
    cfg = cfg or QuadratureConfig()
    s = point.s
    if abs(s.imag) > MAX_IMAG_S:
        raise DomainError(f"|Im s| = {abs(s.imag)} exceeds the supported {MAX_IMAG_S}")
    split = cfg.split_point
    a0 = s.real - point.strip_lo
    a_inf = point.strip_hi - s.real if math.isfinite(point.strip_hi) else 1.0
    # keep u inside the double range: u >= e^-700 near zero, u^2 finite at infinity
    head_cap, tail_cap = 700.0 + math.log(split), 340.0 - math.log(split)
    rel_tol = cfg.rel_tol
    evaluations = 0
    for attempt in range(2):
        head_val, head_err, n0 = _piece(integrand, s, math.log(split), -1.0, a0, cfg, head_cap, rel_tol)
        tail_val, tail_err, n1 = _piece(integrand, s, math.log(split), 1.0, a_inf, cfg, tail_cap, rel_tol)
        evaluations += n0 + n1
        value = head_val + tail_val
        err = head_err + tail_err
        if err <= max(cfg.rel_tol * abs(value), cfg.abs_tol):
            break
        # head and tail cancel: tighten the per-piece tolerance once
        scale = abs(value) / max(abs(head_val) + abs(tail_val), 1e-300)
        rel_tol = max(cfg.rel_tol * scale, 1e-15)
    else:
        raise ConvergenceError(f"Mellin quadrature error {err:.3g} exceeds tolerance for |value| {abs(value):.3g}")
    return MellinResult(value, err, evaluations)


def _as_xi(xi) -> CutPoint:
    return (xi if isinstance(xi, CutPoint) else CutPoint(xi)).require_open()


def _s_of(point) -> complex:
    return point.s if isinstance(point, MellinPoint) else complex(point)


def _guard_gamma_arg(z: complex, what: str):
    k = round(z.real)
    if k <= 0 and abs(z - k) < POLE_GUARD:
        raise PoleError(f"{what} = {z} is within {POLE_GUARD:g} of a gamma pole")


def riesz_integrand(lam, xi):
    lam = complex(lam)
    x = _as_xi(xi).xi
    return lambda u: riesz_kernel(u, x, lam)


def h_integrand(spec: HKernelSpec):
    return lambda u: h_kernel(spec, u)


def mellin_riesz_closed(lam, point, xi, strict: bool = True) -> complex:
    """Closed form of the Mellin transform of the Riesz kernel through P^mu_nu
    with mu = 1/2 - lam and nu = s - lam - 1/2."""
    lam = complex(lam)
    s = _s_of(point)
    x = _as_xi(xi).xi
    mu = 0.5 - lam
    nu = s - lam - 0.5
    if strict and not (mu.real - nu.real < 1 and mu.real + nu.real < 0):
        raise StripError(f"s = {s} outside 0 < Re s < 2 Re lambda = {2 * lam.real}")
    _guard_gamma_arg(s, "s")
    _guard_gamma_arg(2 * lam - s, "2 lambda - s")
    log_mag = (log_gamma(1 - mu) + log_gamma(nu - mu + 1) + log_gamma(-mu - nu)
               - mu * LOG2 - log_gamma(1 - 2 * mu) + 0.5 * mu * math.log1p(-x * x))
    return cmath.exp(log_mag) * ferrers_p(LegendreOrder(mu, nu), x)


def mellin_riesz_xi0(lam, s) -> complex:
    """Beta-function value of the Riesz transform at xi = 0:
    (1/2) B(s/2, lam - s/2), computed from gamma functions only."""
    lam = complex(lam)
    s = complex(s)
    return 0.5 * cmath.exp(log_gamma(s / 2) + log_gamma(lam - s / 2) - log_gamma(lam))


def mellin_h_closed(spec: HKernelSpec, point) -> complex:
    """Closed form of M(h, s); meromorphic in s, so it also serves as the
    analytic continuation outside -q-1 < Re s < -q."""
    s = _s_of(point)
    lam = spec.lam
    x = spec.xi.require_open().xi
    _guard_gamma_arg(s, "s")
    _guard_gamma_arg(2 * lam - s, "2 lambda - s")
    log_mag = (0.5 * LOG_PI + log_gamma(s) + log_gamma(2 * lam - s) - (lam - 0.5) * LOG2
               - log_gamma(lam) + 0.25 * (1 - 2 * lam) * math.log1p(-x * x))
    return -cmath.exp(log_mag) * ferrers_p(LegendreOrder(0.5 - lam, s - lam - 0.5), x)


def by_parts_prefactor(q: int, s: complex) -> complex:
    """(-1)^q / prod_{k=0}^q (s + k)."""
    prod = 1.0 + 0j
    for k in range(q + 1):
        prod *= s + k
    return (-1) ** q / prod


def mellin_by_parts(spec: HKernelSpec, point, cfg: QuadratureConfig | None = None) -> MellinResult:
    """M(h, s) after q+1 integrations by parts:

        (-1)^q / prod_{k<=q}(s+k) * int_0^inf u^(s+q) d^(q+1)/du^(q+1) k_lam(u, xi) du

    valid on the widened strip -q-1 < Re s < 2 Re lam minus the prefactor poles.
    """
    cfg = cfg or QuadratureConfig()
    s = _s_of(point)
    q = spec.q
    lo, hi = -q - 1.0, 2.0 * spec.lam.real
    if not lo + EDGE_GUARD <= s.real <= hi - EDGE_GUARD:
        raise StripError(f"Re s = {s.real} not inside ({lo}, {hi}) by {EDGE_GUARD:g}")
    for k in range(q + 1):
        if abs(s + k) < POLE_GUARD:
            raise PoleError(f"s = {s} is within {POLE_GUARD:g} of the prefactor pole {-k}")
    x = spec.xi.require_open().xi
    deriv = riesz_derivative(q + 1, spec.lam, x)
    res = mellin_numeric(lambda u: u ** (q + 1) * deriv(u), MellinPoint(s, lo, hi), cfg)
    pref = by_parts_prefactor(q, s)
    return MellinResult(pref * res.value, abs(pref) * res.est_error, res.evaluations)


def _corollary_log_parts(n: DimensionSpec, rho: complex, x: float):
    m = n.n
    log_prod = sum((cmath.log(rho + k) for k in range(1, m - 2)), 0j)
    log_sin = _log_sinpi(rho)
    ferrers = ferrers_p(LegendreOrder((3 - m) / 2.0, -rho - (m - 1) / 2.0), x)
    return log_prod, log_sin, 0.25 * (3 - m) * math.log1p(-x * x), ferrers


def corollary_closed(n, q: int, rho, xi, form: str = "validated") -> complex:
    """M(h, -rho) for lam = (n-2)/2 in one of the two printed Corollary forms.

    ``form`` is "first", "second" or "validated" (the form that agrees with
    quadrature; see VALIDATED_COROLLARY_FORM).
    """
    if not isinstance(n, DimensionSpec):
        n = DimensionSpec(n)
    rho = complex(rho)
    x = _as_xi(xi).xi
    if form == "validated":
        form = VALIDATED_COROLLARY_FORM
    if form not in COROLLARY_FORMS:
        raise DomainError(f"unknown Corollary form {form!r}")
    if not q < rho.real < q + 1:
        raise StripError(f"Re rho = {rho.real} outside ({q}, {q + 1})")
    k = round(rho.real)
    if abs(rho - k) < POLE_GUARD:
        raise PoleError(f"rho = {rho} is within {POLE_GUARD:g} of the sine pole {k}")
    m = n.n
    log_prod, log_sin, log_w, P = _corollary_log_parts(n, rho, x)
    if form == "first":
        log_c = (1.5 * LOG_PI + 0.5 * (3 - m) * LOG2 + log_prod + log_w
                 - log_sin - log_gamma((m - 2) / 2.0))
        return -cmath.exp(log_c) * P
    log_c = (LOG_PI + 0.5 * (m - 3) * LOG2 + log_prod + log_gamma((m - 1) / 2.0) + log_w
             - math.lgamma(m - 2) - log_sin)
    return cmath.exp(log_c) * P
