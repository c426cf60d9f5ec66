"""
Exact rational computations for Lie bialgebras, Drinfeld doubles and
Poisson homogeneous spaces.
"""

from .linalg import DimensionError, Subspace
from .exterior import Multivector, interior, member_of_wedge_ideal, pair, schouten, wedge
from .lie import (LieAlgebraData, SubalgebraHandle, ValidationReport, Violation, ad_matrix,
                  adjoint_character, quotient_basis, validate_lie)
from .double import (BialgebraData, DoubleData, FrameError, NotABialgebra, PointFrame,
                     ad_group_on_double, build_double, check_frame, frame_from_group,
                     is_lagrangian)
from .drinfeld import (DrinfeldReport, HomogeneousSpaceData, anchor_at_point, b_lambda,
                       check_drinfeld, check_h0_closure, check_lambda_conditions, chi_h0_lambda,
                       coefficient_weight_at_identity, l_from_lambda, lagrangian_from_r,
                       modular_element, r_from_lagrangian, twisted_bracket, verify_lambda_chi)
from .cohomology import (FiniteModule, RelativeComplex, build_relative_complex, check_f_zero,
                         cohomology_dims, cup_product, descend_pairing, nu_pairing,
                         validate_module)
from .twist import (ConventionError, PointPiP, QuasiTripleData, check_eq_gg, check_xi_h,
                    delta_g_prime, g_prime, phi, point_pi_p)

__version__ = "0.1.0"
