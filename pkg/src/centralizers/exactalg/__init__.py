"""Exact field, polynomial and dense matrix arithmetic plus the brute-force
commutant oracle."""
from .field import FieldElem, FieldSpec, is_prime
from .linalg import (
    commutant_oracle,
    commutator_operator,
    kernel_basis,
    minimal_polynomial,
    poly_apply,
    poly_eval_matrix,
    solve,
    span_matrix,
    span_rank,
)
from .matrix import Matrix, Vector
from .poly import Poly, poly_cut

__all__ = [
    "FieldElem", "FieldSpec", "Matrix", "Poly", "Vector",
    "commutant_oracle", "commutator_operator", "is_prime", "kernel_basis",
    "minimal_polynomial", "poly_apply", "poly_cut", "poly_eval_matrix",
    "solve", "span_matrix", "span_rank",
]
