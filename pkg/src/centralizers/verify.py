"""Seeded property suite behind ``centralizers verify-all``.

Each check draws one random instance from ``rng`` over ``field`` and raises
AssertionError on any violated invariant.
"""
from __future__ import annotations

import zlib

import numpy as np

from . import generators as gen
from .centralizer import (
    P_from_psi, PolyMatrix, bound_check, centralizer_basis, centralizer_dimension,
    containment, dim_formula, in_M_phi, in_M_phi_by_generators, in_V, polynomial_coeffs,
    psi_from_P,
)
from .exactalg import (
    FieldSpec, Matrix, Poly, Vector, commutant_oracle, kernel_basis, minimal_polynomial,
    poly_apply, poly_eval_matrix, span_rank,
)
from .jordan import (
    block_profile, block_projection, check_base, is_indecomposable, jordan_base,
    profile_from_ranks,
)
from .phi import PolyVector, in_ker_phi, phi_map, phi_preimage, vector_cut
from .picheck import fuzz_identity
from .spectral import centralizer_dim_total, decompose, fitting_exponent, pi_degree_bound

FIELDS = (FieldSpec.prime(2), FieldSpec.prime(5), FieldSpec.prime(13), FieldSpec.rational())


def random_poly(field, rng, max_deg=4):
    deg = int(rng.integers(-1, max_deg + 1))
    return Poly(field, field.random_array(rng, deg + 1))


def random_vector(field, d, rng):
    return Vector(field, field.random_array(rng, d), canonical=True)


def random_polyvector(field, sizes, rng, extra=2):
    return PolyVector(random_poly(field, rng, k + extra) for k in sizes)


def random_in_M_phi(field, sizes, rng, max_deg=4):
    """Random element of M(Phi): entry (d, g) carries t^{max(0, k_g - k_d)}."""
    rows = []
    for kd in sizes:
        rows.append([random_poly(field, rng, max_deg).shift(max(0, kg - kd)) for kg in sizes])
    return PolyMatrix(field, rows)


def same_span(family_a, family_b):
    ra, rb = span_rank(family_a), span_rank(family_b)
    return ra == rb == span_rank(list(family_a) + list(family_b))


# -- checks --------------------------------------------------------------


def check_field_axioms(field, rng):
    a, b, c = (field(x) for x in field.random_array(rng, 3))
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a


def check_poly_apply(field, rng):
    d = int(rng.integers(1, 6))
    A = Matrix(field, field.random_array(rng, (d, d)), canonical=True)
    u = random_vector(field, d, rng)
    f, g = random_poly(field, rng), random_poly(field, rng)
    assert poly_apply(f * g, A, u) == poly_apply(f, A, poly_apply(g, A, u))
    mu = minimal_polynomial(A)
    assert poly_eval_matrix(mu, A).is_zero()


def check_commutant(field, rng):
    d = int(rng.integers(1, 5))
    A = Matrix(field, field.random_array(rng, (d, d)), canonical=True)
    basis = commutant_oracle(A)
    assert all(A @ X == X @ A for X in basis)
    assert span_rank(basis) == len(basis)


def check_jordan(field, rng):
    d = int(rng.integers(1, 7))
    A, sizes = gen.random_nilpotent(field, d, rng)
    base = jordan_base(A)
    check_base(base)
    assert tuple(block_profile(base)) == tuple(sizes) == tuple(profile_from_ranks(A))
    tails = [c[-1] for c in base.chains]
    ker = kernel_basis(A)
    assert len(ker) == len(base.chains) and same_span(tails, ker)
    Q = gen.random_invertible(field, d, rng)
    assert block_profile(jordan_base(gen.conjugate(A, Q))) == block_profile(base)
    assert is_indecomposable(A) == (len(sizes) == 1)
    total = Matrix.zeros(field, d)
    for delta in range(len(sizes)):
        E = block_projection(base, delta)
        assert E @ E == E and E @ A == A @ E
        if len(sizes) >= 2:
            assert not E.is_zero() and E != Matrix.identity(field, d)
        total = total + E
    assert total == Matrix.identity(field, d)


def check_phi(field, rng):
    d = int(rng.integers(1, 7))
    A, _ = gen.random_nilpotent(field, d, rng)
    base = jordan_base(A)
    sizes = base.sizes
    f = random_polyvector(field, sizes, rng)
    g = random_poly(field, rng)
    assert phi_map(base, f.times(g)) == poly_apply(g, A, phi_map(base, f))
    assert A @ phi_map(base, f) == phi_map(base, f.shift(1))
    assert phi_map(base, f) == phi_map(base, vector_cut(f, sizes))
    assert in_ker_phi(f, sizes) == phi_map(base, f).is_zero()
    kf = PolyVector(fg.shift(k) for fg, k in zip(f, sizes))
    assert in_ker_phi(kf, sizes) and phi_map(base, kf).is_zero()
    u = random_vector(field, d, rng)
    pre = phi_preimage(base, u)
    assert phi_map(base, pre) == u
    assert all(p.degree <= k - 1 for p, k in zip(pre, sizes))


def check_centralizer(field, rng):
    d = int(rng.integers(1, 7))
    A, sizes = gen.random_nilpotent(field, d, rng)
    base = jordan_base(A)
    cb = centralizer_basis(base)
    oracle = commutant_oracle(A)
    expected = centralizer_dimension(sizes)
    assert len(cb) == len(oracle) == expected == dim_formula(block_profile(base))
    assert all(M @ A == A @ M for M in cb.matrices)
    assert same_span(cb.matrices, oracle)
    P = random_in_M_phi(field, base.sizes, rng)
    Qm = random_in_M_phi(field, base.sizes, rng)
    assert in_M_phi(P, base.sizes) and in_M_phi_by_generators(P, base.sizes)
    assert in_M_phi(P @ Qm, base.sizes) and in_M_phi(P + Qm, base.sizes)
    assert psi_from_P(base, P @ Qm) == psi_from_P(base, Qm) @ psi_from_P(base, P)
    assert psi_from_P(base, P + Qm) == psi_from_P(base, P) + psi_from_P(base, Qm)
    S = oracle[int(rng.integers(len(oracle)))]
    R = P_from_psi(base, S)
    assert in_M_phi(R, base.sizes) and in_V(R, base.sizes)
    assert psi_from_P(base, R) == S
    dim, bound = bound_check(base)
    assert dim == expected and dim <= bound


def check_containment(field, rng):
    d = int(rng.integers(1, 6))
    A, _ = gen.random_nilpotent(field, d, rng)
    if rng.integers(2):
        B = poly_eval_matrix(random_poly(field, rng), A)
    else:
        B = Matrix(field, field.random_array(rng, (d, d)), canonical=True)
    res = containment(A, B)
    if res.contained:
        assert poly_eval_matrix(res.certificate, A) == B
    assert res.contained == (polynomial_coeffs(A, B) is not None)


def check_spectral(field, rng):
    d = int(rng.integers(1, 6))
    A, _ = gen.random_split(field, d, rng)
    r = fitting_exponent(A)
    Ar = A ** r
    ker, im = kernel_basis(Ar), Ar.columns()
    assert len(ker) + Ar.rank() == d
    assert span_rank(ker + im) == d
    dec = decompose(A)
    assert sum(dec.algebraic_mults) == d
    assert span_rank([v for V in dec.spaces for v in V.columns()]) == d
    oracle = commutant_oracle(A)
    assert centralizer_dim_total(dec) == len(oracle)
    for V in dec.spaces:
        for S in oracle:
            assert Matrix.from_columns(field, V.columns() + (S @ V).columns()).rank() == V.cols
    assert pi_degree_bound(dec) == 2 * max(dec.geometric_mults)


def check_pi(field, rng):
    d = int(rng.integers(1, 6))
    A, sizes = gen.random_nilpotent(field, d, rng, max_blocks=3)
    basis = centralizer_basis(jordan_base(A)).matrices
    seed = int(rng.integers(2**31))
    assert fuzz_identity(basis, 2 * len(sizes), trials=5, seed=seed).violations == 0


CHECKS = {
    "exactalg.field_axioms": check_field_axioms,
    "exactalg.poly_apply": check_poly_apply,
    "exactalg.commutant": check_commutant,
    "jordan.base": check_jordan,
    "phi.axioms": check_phi,
    "centralizer.basis": check_centralizer,
    "centralizer.containment": check_containment,
    "spectral.decompose": check_spectral,
    "picheck.standard_identity": check_pi,
}


def verify_all(seed=0, count=10, checks=None):
    """Run every check on ``count`` instances; returns a JSON-ready summary."""
    names = list(CHECKS) if checks is None else list(checks)
    summary = {}
    for name in names:
        fn = CHECKS[name]
        passed, failures = 0, []
        for k in range(count):
            rng = np.random.default_rng([seed, k, zlib.crc32(name.encode())])
            field = FIELDS[int(rng.integers(len(FIELDS)))]
            try:
                fn(field, rng)
            except AssertionError as exc:
                failures.append({"instance": k, "field": str(field), "message": str(exc)})
            else:
                passed += 1
        summary[name] = {"passed": passed, "failed": len(failures), "failures": failures}
    return summary

