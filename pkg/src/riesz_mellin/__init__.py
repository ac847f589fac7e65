"""Mellin transforms of Riesz and Weierstrass-type kernels expressed through
Ferrers functions, with quadrature-based verification."""
from .errors import ConvergenceError, DomainError, PoleError, RieszMellinError, StripError
from .gegenbauer import gegenbauer, gegenbauer_partial_sum
from .kernels import (CutPoint, HKernelSpec, RieszDerivativeForm, h_bound_certificate, h_kernel,
                      riesz_derivative, riesz_kernel, weierstrass_kernel)
from .legendre_cut import LegendreOrder, ferrers_p, hyp2f1_regularized, remark_recurrence_residual
from .mellin import (MellinPoint, MellinResult, QuadratureConfig, corollary_closed, mellin_by_parts,
                     mellin_h_closed, mellin_numeric, mellin_riesz_closed, mellin_riesz_xi0)
from .special_core import (DimensionSpec, duplication_residual, gamma, half_integer_gamma_residual,
                           log_gamma, reciprocal_gamma)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError", "DomainError", "PoleError", "RieszMellinError", "StripError",
    "gegenbauer", "gegenbauer_partial_sum",
    "CutPoint", "HKernelSpec", "RieszDerivativeForm", "h_bound_certificate", "h_kernel",
    "riesz_derivative", "riesz_kernel", "weierstrass_kernel",
    "LegendreOrder", "ferrers_p", "hyp2f1_regularized", "remark_recurrence_residual",
    "MellinPoint", "MellinResult", "QuadratureConfig", "corollary_closed", "mellin_by_parts",
    "mellin_h_closed", "mellin_numeric", "mellin_riesz_closed", "mellin_riesz_xi0",
    "DimensionSpec", "duplication_residual", "gamma", "half_integer_gamma_residual", "log_gamma",
    "reciprocal_gamma",
]
