"""Gegenbauer (ultraspherical) polynomials C^lam_j(xi).

The expansion (1 + 2 t xi + t^2)^(-lam) = sum_j (-t)^j G_j(xi) used by the
kernels coincides with the standard ultraspherical polynomials, so the usual
three-term recurrence applies.  ``xi`` and ``u`` may be numpy arrays.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError


def gegenbauer_sequence(jmax: int, lam, xi):
    """Return [C_0, ..., C_jmax] evaluated at ``xi``."""
    if jmax < 0:
        raise DomainError("degree must be >= 0")
    lam = complex(lam)
    xi = np.asarray(xi, dtype=float)
    prev = np.ones_like(xi, dtype=complex)
    out = [prev]
    if jmax == 0:
        return out
    cur = 2.0 * lam * xi + 0j
    out.append(cur)
    for j in range(2, jmax + 1):
        nxt = (2.0 * (j + lam - 1.0) * xi * cur - (j + 2.0 * lam - 2.0) * prev) / j
        prev, cur = cur, nxt
        out.append(cur)
    return out


def gegenbauer(j: int, lam, xi):
    """Gegenbauer polynomial of degree ``j`` with parameter ``lam`` at ``xi``."""
    val = gegenbauer_sequence(j, lam, xi)[-1]
    return complex(val) if np.ndim(val) == 0 else val


def gegenbauer_partial_sum(q: int, lam, u, xi):
    """sum_{j=0}^q (-u)^j C^lam_j(xi), accumulated Horner style."""
    if q < 0:
        raise DomainError("q must be >= 0")
    seq = gegenbauer_sequence(q, lam, xi)
    mu = -np.asarray(u, dtype=float)
    acc = seq[q] * np.ones_like(mu)
    for j in range(q - 1, -1, -1):
        acc = seq[j] + mu * acc
    return complex(acc) if np.ndim(acc) == 0 else acc


def gegenbauer_tail_sum(q: int, lam, u, xi, rel_tol: float = 1e-18, max_terms: int = 2000):
    """sum_{j>q} (-u)^j C^lam_j(xi) for 0 <= u < 1.

    Terms come from the recurrence; summation stops once two consecutive
    terms fall below ``rel_tol`` times the running sum everywhere.
    """
    lam = complex(lam)
    u = np.asarray(u, dtype=float)
    xi = np.broadcast_to(np.asarray(xi, dtype=float), u.shape)
    prev = np.ones(u.shape, dtype=complex)
    cur = 2.0 * lam * xi + 0j
    power = -u + 0j          # (-u)^j for the current j
    total = np.zeros(u.shape, dtype=complex)
    if q == 0:
        total += power * cur
    small = 0
    j = 1
    while True:
        j += 1
        nxt = (2.0 * (j + lam - 1.0) * xi * cur - (j + 2.0 * lam - 2.0) * prev) / j
        prev, cur = cur, nxt
        power = power * -u
        if j <= q:
            continue
        term = power * cur
        total += term
        if np.all(np.abs(term) <= rel_tol * np.abs(total)):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
        if j - q > max_terms:
            break
    return complex(total) if total.ndim == 0 else total
