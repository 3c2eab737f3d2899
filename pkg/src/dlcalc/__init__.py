"""Exact Demazure-Lusztig operator calculus for finite crystallographic root systems."""

from .hecke import (HeckeElement, bar_involution, bernstein_residual, hecke_inverse_basis,
                    hecke_mul, kl_element, kl_polynomials, module_act, zeta_act)
from .laurent import (ONE, V, ZERO, TorusFunction, VPolynomial, coefficient_sum, invert_z,
                      monomial, specialize_v, weyl_twist)
from .operators import (apply_word, demazure, demazure_character, demazure_prime, lusztig_op,
                        op_D, op_D_prime, op_T, op_T_prime, s_twist)
from .rootsys import (RootSystem, RootSystemError, WeylElement, bruhat_leq, build_root_system,
                      cartan_matrix, mobius, reduced_word, reflect_simple, weyl_enumerate)
from .schubert import (AscentError, correction_census, correction_coeffs,
                       correction_coeffs_prime, fiber_euler, h_prime_set, h_set,
                       verify_fiber_decomposition)
from .whittaker import (DominanceError, c_basis, check_v0, check_v1, correction_from_residue,
                        permutahedron_sum, smoothness_census, x_basis_hecke, x_basis_recursive,
                        x_table_recursive, y_basis, z_partial, z_word)

__version__ = "0.1.0"

__all__ = [
    "AscentError", "DominanceError", "HeckeElement", "ONE", "RootSystem", "RootSystemError",
    "TorusFunction", "V", "VPolynomial", "WeylElement", "ZERO", "apply_word", "bar_involution",
    "bernstein_residual", "bruhat_leq", "build_root_system", "c_basis", "cartan_matrix",
    "check_v0", "check_v1", "coefficient_sum", "correction_census", "correction_coeffs",
    "correction_coeffs_prime", "correction_from_residue", "demazure", "demazure_character",
    "demazure_prime", "fiber_euler", "h_prime_set", "h_set", "hecke_inverse_basis", "hecke_mul",
    "invert_z", "kl_element", "kl_polynomials", "lusztig_op", "mobius", "module_act", "monomial",
    "op_D", "op_D_prime", "op_T", "op_T_prime", "permutahedron_sum", "reduced_word",
    "reflect_simple", "s_twist", "smoothness_census", "specialize_v", "verify_fiber_decomposition",
    "weyl_enumerate", "weyl_twist", "x_basis_hecke", "x_basis_recursive", "x_table_recursive",
    "y_basis", "z_partial", "z_word", "zeta_act",
]
