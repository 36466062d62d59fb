"""Standard polynomial evaluation and randomized identity checks.

S_n(X_1..X_n) = sum over permutations s of sign(s) X_s(1) ... X_s(n).
Evaluation uses the subset recursion
    S(T) = sum_{i in T} (-1)^{#{j in T : j < i}} X_i S(T - {i}),  S({}) = I,
which is the same signed sum grouped by leading factor: 2^n n products
instead of n! n.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import _accel
from .exactalg import FieldSpec, Matrix

DEFAULT_MAX_DEGREE = 8


class DegreeCapExceeded(ValueError):
    pass


def _check_args(args, max_degree):
    if not args:
        raise ValueError("standard polynomial needs at least one argument")
    if len(args) > max_degree:
        raise DegreeCapExceeded(f"degree {len(args)} exceeds cap {max_degree}")
    F = args[0].field
    shape = args[0].shape
    if shape[0] != shape[1]:
        raise ValueError("arguments must be square")
    for X in args:
        if X.field != F or X.shape != shape:
            raise ValueError("arguments must share field and size")
    return F, shape[0]


def standard_polynomial(args, max_degree=DEFAULT_MAX_DEGREE) -> Matrix:
    args = list(args)
    F, d = _check_args(args, max_degree)
    if F.is_prime:
        stack = np.stack([X.data for X in args])
        return Matrix(F, _accel.stdpoly_mod(stack, F.p), canonical=True)
    # multilinear: clear each argument's denominators, work in Python ints
    scaled, den = [], 1
    for X in args:
        s = math.lcm(*(x.denominator for x in X.data.ravel()))
        scaled.append(np.array([[int(x * s) for x in row] for row in X.data], dtype=object))
        den *= s
    out = _stdpoly_int(scaled, d)
    return Matrix(F, out, canonical=False).scale(F.canon(1) / den)


def _stdpoly_int(xs, d):
    n = len(xs)
    table = [None] * (1 << n)
    table[0] = np.eye(d, dtype=np.int64).astype(object)
    for mask in range(1, 1 << n):
        acc = np.zeros((d, d), dtype=np.int64).astype(object)
        below = 0
        for i in range(n):
            if mask >> i & 1:
                term = xs[i].dot(table[mask ^ (1 << i)])
                acc = acc - term if below & 1 else acc + term
                below += 1
        table[mask] = acc
    return table[-1]


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def standard_polynomial_naive(args, max_degree=DEFAULT_MAX_DEGREE) -> Matrix:
    """Literal signed sum over all n! orderings (reference implementation)."""
    args = list(args)
    F, d = _check_args(args, max_degree)
    acc = Matrix.zeros(F, d)
    for perm in itertools.permutations(range(len(args))):
        prod = args[perm[0]]
        for k in perm[1:]:
            prod = prod @ args[k]
        acc = acc + prod if _perm_sign(perm) > 0 else acc - prod
    return acc


@dataclass(frozen=True)
class IdentityReport:
    degree: int
    trials: int
    violations: int
    first_witness: tuple | None
    seed: int

    def to_json(self):
        return {
            "degree": self.degree,
            "trials": self.trials,
            "violations": self.violations,
            "first_witness": None if self.first_witness is None
            else [X.to_rows() for X in self.first_witness],
            "seed": self.seed,
        }


def random_combination(basis, rng) -> Matrix:
    """Random linear combination (uniform over F_p, integers in [-9, 9] over Q)."""
    F: FieldSpec = basis[0].field
    coeffs = F.random_array(rng, len(basis))
    acc = Matrix.zeros(F, basis[0].rows, basis[0].cols)
    for c, B in zip(coeffs, basis):
        if c != 0:
            acc = acc + B.scale(c)
    return acc


def fuzz_identity(basis, degree, trials=100, seed=0,
                  max_degree=DEFAULT_MAX_DEGREE) -> IdentityReport:
    """Evaluate S_degree on ``trials`` random tuples drawn from span(basis).

    Trial k draws from its own generator seeded by (seed, k), so the report
    depends only on the arguments.
    """
    basis = list(basis)
    if not basis:
        raise ValueError("empty basis")
    if degree > max_degree:
        raise DegreeCapExceeded(f"degree {degree} exceeds cap {max_degree}")
    violations = 0
    witness = None
    for k in range(trials):
        rng = np.random.default_rng([seed, k])
        tup = tuple(random_combination(basis, rng) for _ in range(degree))
        if not standard_polynomial(tup, max_degree).is_zero():
            violations += 1
            if witness is None:
                witness = tup
    return IdentityReport(degree, trials, violations, witness, seed)


def minimal_vanishing_degree(basis, trials=20, seed=0, max_degree=DEFAULT_MAX_DEGREE):
    """Smallest even n <= max_degree with no observed S_n violation, else None.

    Observational only: no claim that lower degrees fail in general.
    """
    for n in range(2, max_degree + 1, 2):
        if fuzz_identity(basis, n, trials, seed, max_degree).violations == 0:
            return n
    return None
