"""Exact linear algebra on top of ``Matrix``: kernels, solves, polynomial
actions, the brute-force commutant and the minimal polynomial."""
from __future__ import annotations

import numpy as np

from .matrix import Matrix, Vector
from .poly import Poly


def kernel_basis(A: Matrix) -> list[Vector]:
    """Null space basis read off the RREF, one vector per free column."""
    F = A.field
    if A.cols == 0:
        return []
    if A.rows == 0:
        return [Vector.unit(F, A.cols, j) for j in range(A.cols)]
    R, piv = A.rref()
    pivset = set(piv)
    out = []
    for f in range(A.cols):
        if f in pivset:
            continue
        v = F.zeros(A.cols)
        v[f] = F.one
        for r, c in enumerate(piv):
            v[c] = F.neg(R.data[r, f])
        out.append(Vector(F, v, canonical=True))
    return out


def solve(A: Matrix, B: Matrix) -> Matrix | None:
    """A solution X of ``A X = B`` (free variables set to zero), or None."""
    if A.rows != B.rows:
        raise ValueError("row count mismatch")
    F = A.field
    n = A.cols
    aug = Matrix(F, np.concatenate([A.data, B.data], axis=1), canonical=True)
    R, piv = aug.rref()
    if any(c >= n for c in piv):
        return None
    X = F.zeros((n, B.cols))
    for r, c in enumerate(piv):
        X[c] = R.data[r, n:]
    return Matrix(F, X, canonical=True)


def span_matrix(vectors, dim=None) -> Matrix:
    """Matrix whose columns are the given vectors (or vec of matrices)."""
    vecs = [v.vec() if isinstance(v, Matrix) else v for v in vectors]
    if not vecs:
        raise ValueError("empty family; pass dim for an empty span")
    return Matrix.from_columns(vecs[0].field, vecs)


def span_rank(family) -> int:
    family = list(family)
    if not family:
        return 0
    return span_matrix(family).rank()


def poly_apply(f: Poly, A: Matrix, u: Vector) -> Vector:
    """``f(A) u`` by Horner iteration, never forming powers of A."""
    if not A.is_square or A.cols != u.dim:
        raise ValueError(f"dimension mismatch: A {A.shape}, u ({u.dim},)")
    if f.field != A.field or u.field != A.field:
        raise ValueError("field mismatch")
    acc = Vector.zeros(A.field, u.dim)
    for c in reversed(f.coeffs):
        acc = A @ acc + u.scale(c)
    return acc


def poly_eval_matrix(f: Poly, A: Matrix) -> Matrix:
    """``f(A)`` as a matrix (Horner)."""
    if not A.is_square:
        raise ValueError("polynomial of a non-square matrix")
    F = A.field
    acc = Matrix.zeros(F, A.rows)
    eye = Matrix.identity(F, A.rows)
    for c in reversed(f.coeffs):
        acc = A @ acc + eye.scale(c)
    return acc


def commutator_operator(A: Matrix) -> Matrix:
    """Matrix of X -> AX - XA on column-major vec(X)."""
    F = A.field
    d = A.rows
    eye = Matrix.identity(F, d)
    left = np.kron(eye.data, A.data)
    right = np.kron(A.data.T, eye.data)
    if F.is_prime:
        return Matrix(F, (left - right) % F.p, canonical=True)
    return Matrix(F, F.array(left - right), canonical=True)


def commutant_oracle(A: Matrix) -> list[Matrix]:
    """Basis of {X : AX = XA} from the d^2 x d^2 commutator kernel.

    Independent of any Jordan-form machinery; used as the reference for
    every centralizer computation.
    """
    if not A.is_square:
        raise ValueError("commutant of a non-square matrix")
    d = A.rows
    F = A.field
    return [
        Matrix(F, v.data.reshape((d, d), order="F").copy(), canonical=True)
        for v in kernel_basis(commutator_operator(A))
    ]


def minimal_polynomial(A: Matrix) -> Poly:
    """Monic generator of the annihilating ideal of A.

    Found as the first linear dependency among vec(I), vec(A), vec(A^2), ...
    """
    if not A.is_square:
        raise ValueError("minimal polynomial of a non-square matrix")
    F = A.field
    d = A.rows
    powers = [Matrix.identity(F, d)]
    while True:
        M = span_matrix(powers)
        ker = kernel_basis(M)
        if ker:
            v = ker[0]
            return Poly(F, v.data).monic()
        powers.append(A @ powers[-1])
