"""Seeded constructors for test matrices: Jordan blocks, random invertible
conjugators, random nilpotent and split matrices, integer partitions."""
from __future__ import annotations

import numpy as np

from .exactalg import FieldSpec, Matrix


def partitions(n, largest=None):
    """All partitions of ``n`` as descending tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def random_partition(n, rng, max_parts=None):
    """Uniformly chosen partition of ``n`` (optionally with few parts)."""
    pool = [p for p in partitions(n) if max_parts is None or len(p) <= max_parts]
    return pool[int(rng.integers(len(pool)))]


def jordan_block(field: FieldSpec, n: int, eigenvalue=0) -> Matrix:
    """n x n block sending e_i to e_{i+1} (plus eigenvalue * I)."""
    data = field.zeros((n, n))
    lam = field.canon(eigenvalue)
    for i in range(n):
        data[i, i] = lam
        if i + 1 < n:
            data[i + 1, i] = field.one
    return Matrix(field, data, canonical=True)


def nilpotent_from_profile(field: FieldSpec, sizes) -> Matrix:
    return Matrix.block_diag(field, [jordan_block(field, k) for k in sizes])


def jordan_matrix(field: FieldSpec, blocks) -> Matrix:
    """Block diagonal matrix from ``(eigenvalue, size)`` pairs."""
    return Matrix.block_diag(field, [jordan_block(field, k, lam) for lam, k in blocks])


def random_invertible(field: FieldSpec, d: int, rng) -> Matrix:
    """Uniform invertible matrix over F_p; unimodular integer matrix over Q.

    The rational case multiplies elementary matrices with small integer
    multipliers, so both Q and Q^{-1} have integer entries.
    """
    if field.is_prime:
        while True:
            Q = Matrix(field, field.random_array(rng, (d, d)), canonical=True)
            if Q.rank() == d:
                return Q
    data = np.eye(d, dtype=np.int64)
    perm = rng.permutation(d)
    data = data[perm]
    for _ in range(2 * d):
        i, j = rng.choice(d, size=2, replace=False) if d > 1 else (0, 0)
        if i == j:
            break
        c = int(rng.integers(-2, 3))
        data[i] += c * data[j]
    return Matrix(field, data.astype(object), canonical=False)


def conjugate(A: Matrix, Q: Matrix) -> Matrix:
    return Q @ A @ Q.inverse()


def random_nilpotent(field: FieldSpec, d: int, rng, max_blocks=None):
    """``(A, profile)`` with A a random conjugate of a nilpotent Jordan matrix."""
    sizes = random_partition(d, rng, max_blocks)
    A = conjugate(nilpotent_from_profile(field, sizes), random_invertible(field, d, rng))
    return A, sizes


def random_split(field: FieldSpec, d: int, rng, eigenvalues=None, max_eigs=3):
    """``(A, blocks)`` with A a random conjugate of a Jordan matrix.

    ``blocks`` lists ``(eigenvalue, size)`` pairs; eigenvalues are drawn from
    ``eigenvalues`` (default small integers / residues).
    """
    if eigenvalues is None:
        pool = list(range(min(field.p, 7))) if field.is_prime else list(range(-3, 4))
    else:
        pool = list(eigenvalues)
    k = int(rng.integers(1, min(max_eigs, len(pool), d) + 1))
    lams = [pool[i] for i in rng.choice(len(pool), size=k, replace=False)]
    # split d among the eigenvalues, each getting at least one dimension
    cuts = sorted(rng.choice(np.arange(1, d), size=k - 1, replace=False)) if k > 1 else []
    dims = np.diff([0, *cuts, d])
    blocks = []
    for lam, dim in zip(lams, dims):
        blocks += [(lam, s) for s in random_partition(int(dim), rng)]
    A = conjugate(jordan_matrix(field, blocks), random_invertible(field, d, rng))
    return A, blocks
