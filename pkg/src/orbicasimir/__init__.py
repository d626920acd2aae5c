"""High-precision Casimir energies of elliptic fixed points on hyperbolic orbifolds."""
from .errors import ConvergenceError, DomainError, UnsupportedVariantError
from .numkernel import (
    bernoulli_number,
    bernoulli_poly,
    log_gamma,
    precision,
    set_working_digits,
    working_digits,
)
from .hurwitz import hurwitz_zeta, hurwitz_zeta_ds, riemann_zeta
from .barnes import (
    ResidueClassWeight,
    barnes_zeta2,
    barnes_zeta2_ds,
    gen_bernoulli_b32,
    residue_weights,
)
from .casimir import (
    CasimirReport,
    PropagationChoice,
    TriangleSignature,
    elliptic_casimir,
    elliptic_zeta,
    identity_zeta,
    large_p_ratio,
    residue_bracket,
    surface_report,
    triangle_area,
)

__version__ = "0.1.0"
