"""Riesz kernel, genus-q kernel h, Weierstrass primary kernel and the exact
u-derivatives of the Riesz kernel.

    k_lam(u, xi) = (1 + u^2 + 2 u xi)^(-lam)
    h(lam, q, u, xi) = -k_lam(u, xi) + sum_{j<=q} (-u)^j C^lam_j(xi)

Kernel evaluators accept scalar or numpy-array ``u``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, PoleError
from .gegenbauer import gegenbauer_partial_sum, gegenbauer_tail_sum, gegenbauer_sequence
from .special_core import DimensionSpec

U_SWITCH = 0.25
MAX_DERIVATIVE_ORDER = 12


@dataclass(frozen=True)
class CutPoint:
    """A point xi of [-1, 1], optionally remembered as the angle psi."""

    xi: float
    psi: float | None = None

    def __post_init__(self):
        xi = float(self.xi)
        if not -1.0 <= xi <= 1.0:
            raise DomainError(f"xi = {xi} is outside [-1, 1]")
        if self.psi is not None:
            if not -math.pi <= self.psi <= math.pi:
                raise DomainError(f"psi = {self.psi} is outside [-pi, pi]")
            if abs(math.cos(self.psi) - xi) >= 1e-12:
                raise DomainError("psi and xi disagree: cos(psi) != xi")
        object.__setattr__(self, "xi", xi)

    @classmethod
    def from_angle(cls, psi: float) -> "CutPoint":
        return cls(math.cos(psi), psi)

    def require_open(self):
        if not -1.0 < self.xi < 1.0:
            raise DomainError(f"xi = {self.xi} must lie strictly inside (-1, 1)")
        return self


def _xi(xi) -> float:
    return xi.xi if isinstance(xi, CutPoint) else float(xi)


@dataclass(frozen=True)
class HKernelSpec:
    lam: complex
    q: int
    xi: CutPoint

    def __post_init__(self):
        object.__setattr__(self, "lam", complex(self.lam))
        if not isinstance(self.xi, CutPoint):
            object.__setattr__(self, "xi", CutPoint(self.xi))
        if self.lam.real <= 0:
            raise DomainError(f"Re lambda must be positive, got {self.lam}")
        if int(self.q) != self.q or self.q < 0:
            raise DomainError(f"genus q must be a nonnegative integer, got {self.q}")
        object.__setattr__(self, "q", int(self.q))


def _log_base(u, xi: float):
    """log(1 + u^2 + 2 u xi), overflow-safe for huge u."""
    u = np.asarray(u, dtype=float)
    if np.any(u < 0):
        raise DomainError("u must be nonnegative")
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        base = 1.0 + u * u + 2.0 * u * xi
        if np.any(base <= 1e-300):
            raise PoleError(f"Riesz kernel base vanishes (xi = {xi})")
        big = u > 1e100
        if np.any(big):
            ub = np.where(big, u, 1.0)
            alt = 2.0 * np.log(ub) + np.log1p((2.0 * xi * ub + 1.0) / (ub * ub))
            return np.where(big, alt, np.log(np.where(big, 1.0, base)))
    return np.log(base)


def riesz_kernel(u, xi, lam):
    """(1 + u^2 + 2 u xi)^(-lam) through the real logarithm of the base."""
    val = np.exp(-complex(lam) * _log_base(u, _xi(xi)))
    return complex(val) if np.ndim(val) == 0 else val


def h_kernel(spec: HKernelSpec, u):
    """Genus-q kernel h; the small-u branch sums the Gegenbauer tail directly
    since the defining difference cancels to O(u^(q+1))."""
    u_arr = np.asarray(u, dtype=float)
    if np.any(u_arr < 0):
        raise DomainError("u must be nonnegative")
    xi = spec.xi.xi
    small = u_arr <= U_SWITCH
    out = np.empty(u_arr.shape, dtype=complex)
    if np.any(small):
        out[small] = -gegenbauer_tail_sum(spec.q, spec.lam, u_arr[small], xi)
    if np.any(~small):
        ub = u_arr[~small]
        out[~small] = (-riesz_kernel(ub, xi, spec.lam)
                       + gegenbauer_partial_sum(spec.q, spec.lam, ub, xi))
    return complex(out) if out.ndim == 0 else out


def h_bound_certificate(spec: HKernelSpec, u_grid):
    """Empirical content of |h| <= C min(u^q, u^(q+1)).

    Returns ``(C, (slope_at_0, slope_at_inf))``: C is the largest ratio
    |h| / min(u^q, u^(q+1)) over the grid and the slopes are log-log slopes
    taken between the two smallest and the two largest grid points.
    """
    if abs(spec.lam.imag) > 0:
        raise DomainError("the bound certificate is defined for real lambda")
    u = np.sort(np.asarray(u_grid, dtype=float))
    if u[0] > 1e-6 or u[-1] < 1e6:
        raise DomainError("u_grid must span at least [1e-6, 1e6]")
    absh = np.abs(h_kernel(spec, u))
    q = spec.q
    ref = np.minimum(u ** q, u ** (q + 1))
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = absh / ref
    c_est = float(np.max(ratio)) if np.all(np.isfinite(ratio)) else math.inf

    def slope(i, j):
        if absh[i] == 0 or absh[j] == 0:
            return math.inf
        return float((math.log(absh[j]) - math.log(absh[i])) / (math.log(u[j]) - math.log(u[i])))

    return c_est, (slope(0, 1), slope(-2, -1))


def weierstrass_kernel(r: float, t: float, psi: float, n, q: int) -> float:
    """Weierstrass primary kernel K_q of genus q in R^n, as a function of
    |x| = r, |y| = t and the angle psi between x and y.

    For r/t <= 0.25 the subtracted Taylor polynomial is folded into a tail
    series in r/t, which keeps full relative accuracy near the origin.
    """
    if not isinstance(n, DimensionSpec):
        n = DimensionSpec(n)
    if t <= 0 or r < 0:
        raise DomainError("need t > 0 and r >= 0")
    lam = n.lam
    c = math.cos(psi)
    ratio = r / t
    scale = t ** (2 - n.n)
    if ratio <= U_SWITCH:
        # (r^2 + t^2 - 2 t r c)^(-lam) = t^(2-n) sum_j (r/t)^j C_j(c)
        seq = gegenbauer_sequence(q, lam, c)
        tail = 0.0
        term_pow = ratio ** (q + 1)
        # continue the recurrence past q
        prev, cur = (seq[q - 1] if q >= 1 else None), seq[q]
        j = q
        small = 0
        while True:
            j += 1
            if j == 1:
                nxt = 2.0 * lam * c
            else:
                nxt = (2.0 * (j + lam - 1.0) * c * cur - (j + 2.0 * lam - 2.0) * prev) / j
            prev, cur = cur, nxt
            term = (term_pow * cur).real
            tail += term
            term_pow *= ratio
            if abs(term) <= 1e-18 * abs(tail):
                small += 1
                if small >= 2:
                    break
            else:
                small = 0
            if j > 4000:
                break
        return -scale * tail
    dist2 = r * r + t * t - 2.0 * t * r * c
    if dist2 <= 1e-300 * t * t:
        raise PoleError("K_q is singular at coincident points (r = t, psi = 0)")
    poly = sum(ratio ** j * g.real for j, g in enumerate(gegenbauer_sequence(q, lam, c)))
    return -dist2 ** (-lam) + scale * poly


@dataclass(frozen=True)
class RieszDerivativeForm:
    """d^m/du^m k_lam(u, xi) written as sum_i p_i(u) k_{lam + shift_i}(u, xi).

    ``terms`` holds ``(coefficients, shift)`` pairs, coefficients in
    ascending powers of u.
    """

    order: int
    lam: complex
    xi: float
    terms: tuple = field(default_factory=tuple)

    def __call__(self, u):
        u_arr = np.asarray(u, dtype=float)
        log_base = _log_base(u_arr, self.xi)
        inv_base = np.exp(-log_base)
        acc = np.zeros(u_arr.shape, dtype=complex)
        for coefs, shift in self.terms:
            acc = acc + np.polynomial.polynomial.polyval(u_arr, np.asarray(coefs)) * inv_base ** shift
        val = np.exp(-self.lam * log_base) * acc
        return complex(val) if np.ndim(val) == 0 else val


def riesz_derivative(m: int, lam, xi) -> RieszDerivativeForm:
    """Symbolic m-th u-derivative of k_lam built from
    d/du k_a = -2 a (u + xi) k_{a+1}."""
    if m < 0 or m > MAX_DERIVATIVE_ORDER:
        raise DomainError(f"derivative order must lie in [0, {MAX_DERIVATIVE_ORDER}], got {m}")
    lam = complex(lam)
    xi = _xi(xi)
    P = np.polynomial.polynomial
    terms = {0: np.array([1.0 + 0j])}
    for _ in range(m):
        nxt: dict[int, np.ndarray] = {}
        for shift, coefs in terms.items():
            d = P.polyder(coefs) if len(coefs) > 1 else np.array([0j])
            nxt[shift] = P.polyadd(nxt.get(shift, np.array([0j])), d)
            chain = P.polymul(coefs, np.array([xi, 1.0])) * (-2.0 * (lam + shift))
            nxt[shift + 1] = P.polyadd(nxt.get(shift + 1, np.array([0j])), chain)
        terms = {s: c for s, c in nxt.items() if np.any(c != 0)}
    packed = tuple((tuple(complex(c) for c in coefs), shift) for shift, coefs in sorted(terms.items()))
    return RieszDerivativeForm(order=m, lam=lam, xi=xi, terms=packed)
