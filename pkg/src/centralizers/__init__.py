"""Exact centralizers of matrices over F_p and Q.

Nilpotent matrices are handled through a Jordan chain basis and polynomial
matrices acting on polynomial row vectors; general matrices whose
characteristic polynomial splits are reduced to the nilpotent case on each
generalized eigenspace. Everything is checked against a brute-force
commutant computed from the d^2 x d^2 commutator system.
"""
__version__ = "0.1.0"

from .centralizer import (
    CentralizerBasis, Containment, P_from_psi, PolyMatrix, bound_check, centralizer_basis,
    centralizer_dimension, containment, dim_formula, in_M_phi, in_M_phi_by_generators, in_V,
    polynomial_coeffs, psi_from_P, striped_view,
)
from .errors import (
    ConsistencyError, DomainError, NotInCentralizer, NotInMPhi, NotNilpotent, NotSplit,
)
from .exactalg import (
    FieldElem, FieldSpec, Matrix, Poly, Vector, commutant_oracle, kernel_basis,
    minimal_polynomial, poly_apply, poly_cut, poly_eval_matrix,
)
from .jordan import (
    BlockProfile, JordanBase, block_profile, block_projection, is_indecomposable, jordan_base,
    nilpotency_index,
)
from .phi import PolyVector, in_ker_phi, phi_map, phi_preimage, vector_cut
from .picheck import IdentityReport, fuzz_identity, standard_polynomial
from .spectral import (
    SpectralDecomposition, centralizer_dim_total, decompose, fitting_exponent, pi_degree_bound,
    split_eigenvalues,
)

__all__ = [
    "__version__", "block_profile", "block_projection", "BlockProfile", "bound_check",
    "centralizer_basis", "centralizer_dim_total", "centralizer_dimension", "CentralizerBasis",
    "commutant_oracle", "ConsistencyError", "Containment", "containment", "decompose",
    "dim_formula", "DomainError", "FieldElem", "FieldSpec", "fitting_exponent",
    "fuzz_identity", "IdentityReport", "in_ker_phi", "in_M_phi", "in_M_phi_by_generators",
    "in_V", "is_indecomposable", "jordan_base", "JordanBase", "kernel_basis", "Matrix",
    "minimal_polynomial", "nilpotency_index", "NotInCentralizer", "NotInMPhi", "NotNilpotent",
    "NotSplit", "P_from_psi", "phi_map", "phi_preimage", "pi_degree_bound", "Poly",
    "poly_apply", "poly_cut", "poly_eval_matrix", "PolyMatrix", "polynomial_coeffs",
    "PolyVector", "psi_from_P", "SpectralDecomposition", "split_eigenvalues",
    "standard_polynomial", "striped_view", "Vector", "vector_cut",
]
