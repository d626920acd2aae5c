"""Independent reference computations used to cross-check the main kernels."""

from .heat import (
    elliptic_bracket_integrand,
    heat_kernel_kp,
    image_sum_lhs,
    image_sum_rhs,
    quad_elliptic_zeta_strip,
    quad_identity_zeta_strip,
)
from .lattice import LatticeBracket, brute_barnes_sum
from .quadrature import QuadratureConfig, QuadResult

__all__ = [
    "LatticeBracket",
    "QuadResult",
    "QuadratureConfig",
    "brute_barnes_sum",
    "elliptic_bracket_integrand",
    "heat_kernel_kp",
    "image_sum_lhs",
    "image_sum_rhs",
    "quad_elliptic_zeta_strip",
    "quad_identity_zeta_strip",
]
