"""numrad: numerical range and numerical radius toolkit for complex matrix
algebras, with a verified catalogue of radius inequalities.

The radius v(a) is the largest modulus attained by states (positive
normalized linear functionals) on the element a; for matrices it equals the
maximum over unit phases of the top eigenvalue of Re(phase * a). The package
computes v(a), numerical-range geometry, every bound in the catalogue, and
verifies the whole chain lower <= v^p <= upper under fuzzing.
"""

from .bounds import (BoundValue, ChainConfig, ChainReport, chain_bound_ids,
                     commutator_bound, corollary_product_bound,
                     corollary_sum_bound, lower_bound_alpha_beta, lower_bounds,
                     reverse_power_bound, sum_bound, triple_product_bound,
                     two_sum_bound, two_sum_selfadjoint_bound, upper_bounds,
                     verify_chain)
from .genlab import KINDS, GenSpec, generate, sample_grid
from .kernels import backend
from .matcore import (HermitianEigenSystem, abs_parts, adjoint,
                      cartesian_parts, herm_eig, herm_eigvals,
                      matrix_from_json, matrix_to_json, psd_power,
                      spectral_norm)
from .numrange import (EqualityClass, RangeBoundary, equality_class,
                       numerical_radius, radius_via_pm_formula, range_boundary,
                       support_function)
from .states import (AlphaBetaResult, State, Verdict, alpha_beta,
                     density_state, eval_state, functional_check,
                     list_functional_inequalities, random_state,
                     state_from_json, state_to_json, vector_state)

__version__ = "0.1.0"
