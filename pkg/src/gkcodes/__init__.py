"""Two-point algebraic-geometry codes on generalized
Giulietti-Korchmaros curves: Weierstrass semigroup arithmetic at the two
distinguished places, Riemann-Roch dimensions, order-bound tables for
dual minimum distances, and an exact small-field oracle for
cross-validation.
"""

from ._kernels import backend_name
from .curve import CurveParams, new_curve
from .orderbound import (
    BestCodeRow,
    BoundTable,
    best_codes_per_dimension,
    bound,
    build_table,
    nu_q0,
    nu_qinf,
)
from .riemann_roch import TwoPointDivisor, basis_exponents, codes_equal_after_adding, dim_code, dim_l
from .semigroup import (
    PoleTriple,
    decompose,
    gaps_q0,
    gaps_qinf,
    in_generated_semigroup,
    is_nongap_q0,
    is_nongap_qinf,
    tau,
    tau_inv,
)

__version__ = "0.1.0"

__all__ = [
    "BestCodeRow",
    "BoundTable",
    "CurveParams",
    "PoleTriple",
    "TwoPointDivisor",
    "backend_name",
    "basis_exponents",
    "best_codes_per_dimension",
    "bound",
    "build_table",
    "codes_equal_after_adding",
    "decompose",
    "dim_code",
    "dim_l",
    "gaps_q0",
    "gaps_qinf",
    "in_generated_semigroup",
    "is_nongap_q0",
    "is_nongap_qinf",
    "new_curve",
    "nu_q0",
    "nu_qinf",
    "tau",
    "tau_inv",
    "__version__",
]
