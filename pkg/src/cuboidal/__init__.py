"""Cuboidal lattice sums L(A;s), the HCP sum, and their analytic continuation."""
from .arithmetic import (
    CoefficientTable,
    RepCount,
    r2,
    r2_enumerate,
    theta_coefficients,
    u2,
    u2_enumerate,
    u2_shifted,
)
from .config import FormulaUsed, LaurentData, SumConfig, SumPoint
from .continuation import functional_equation_check, laurent_constant, madelung, residue_at_pole
from .geometry import (
    LatticeParam,
    equivalent_grams,
    generator_matrix,
    gram_matrix,
    kissing_number,
    min_distance,
    minimal_vectors,
    normalized_form,
    packing_density,
    packing_density_derivative,
    quadratic_form,
)
from .hcp import HCP, hcp_s1, hcp_s2, hcp_sum
from .oracle import direct_sum_T1, direct_sum_T2
from .special import (
    EULER_GAMMA,
    SpecialValue,
    bessel_k,
    character,
    dirichlet_l3,
    dirichlet_l4,
    gamma,
    hurwitz_zeta,
    reciprocal_gamma,
    riemann_zeta,
)
from .sums import (
    lattice_sum_L,
    lsum_dA,
    t1_bessel_v1,
    t1_bessel_v2,
    t2_bessel_v1,
    t2_bessel_v2,
)

__version__ = "0.1.0"
