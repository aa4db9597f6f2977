"""polarconst: polarization constants of homogeneous polynomials on l_p spaces.

Exact rational closed-form constants, two independent evaluators of the
associated symmetric multilinear form, certified lower-bound optimizers for
sup-type norms, and the eta-net quotient construction transferring constants
from finite l_1 spaces.
"""

from .constants import (
    balanced_partition,
    exact_c_l1,
    exact_c_l1_bruteforce,
    harris_bound,
    lp3_interpolation_upper_bound,
    lp3_lower_bound,
    partition_value,
    root_sequence,
)
from .experiments import ExperimentReport, run
from .optimize import (
    BochnakEstimate,
    NormEstimate,
    OptimConfig,
    RatioEstimate,
    estimate_blocked_norm,
    estimate_bochnak_ratio,
    estimate_multilinear_norm,
    estimate_poly_norm,
    estimate_ratio,
    spectral_norm_quadratic,
)
from .polarize import BlockTuple, BudgetError, derivative_pairing, polarize_blocked, polarize_sign_sum
from .poly import (
    HomogeneousPolynomial,
    complexify,
    compose_linear,
    evaluate,
    gradient,
    load_polynomial,
    product,
    random_polynomial,
    real_l1_example,
    save_polynomial,
    varopoulos,
)
from .quotient import (
    ConvergenceError,
    QuotientMap,
    apply_quotient,
    build_eta_net,
    build_quotient,
    greedy_preimage,
    lift_l1_norm,
    verify_net_covering,
    verify_transfer_bound,
)
from .spaces import Field, SpaceSpec, dual_align, norm, project_to_sphere

__version__ = "0.1.0"

__all__ = [
    "Field",
    "SpaceSpec",
    "norm",
    "project_to_sphere",
    "dual_align",
    "HomogeneousPolynomial",
    "evaluate",
    "gradient",
    "compose_linear",
    "product",
    "complexify",
    "real_l1_example",
    "varopoulos",
    "random_polynomial",
    "load_polynomial",
    "save_polynomial",
    "BlockTuple",
    "BudgetError",
    "polarize_sign_sum",
    "polarize_blocked",
    "derivative_pairing",
    "partition_value",
    "balanced_partition",
    "exact_c_l1",
    "exact_c_l1_bruteforce",
    "root_sequence",
    "harris_bound",
    "lp3_lower_bound",
    "lp3_interpolation_upper_bound",
    "OptimConfig",
    "NormEstimate",
    "RatioEstimate",
    "BochnakEstimate",
    "estimate_poly_norm",
    "estimate_multilinear_norm",
    "estimate_blocked_norm",
    "spectral_norm_quadratic",
    "estimate_ratio",
    "estimate_bochnak_ratio",
    "QuotientMap",
    "ConvergenceError",
    "build_eta_net",
    "build_quotient",
    "greedy_preimage",
    "verify_net_covering",
    "verify_transfer_bound",
    "ExperimentReport",
    "run",
]
