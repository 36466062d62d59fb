import itertools

import pytest
from sympy.combinatorics import Permutation

from centralizers.centralizer import centralizer_basis
from centralizers.exactalg import Matrix
from centralizers.generators import nilpotent_from_profile
from centralizers.jordan import jordan_base
from centralizers.picheck import (
    DegreeCapExceeded, _perm_sign, fuzz_identity, minimal_vanishing_degree,
    standard_polynomial, standard_polynomial_naive,
)

from conftest import F5, QQ, mat


def _full_matrix_basis(field, k):
    out = []
    for i in range(k):
        for j in range(k):
            E = field.zeros((k, k))
            E[i, j] = field.one
            out.append(Matrix(field, E, canonical=True))
    return out


def test_perm_sign_matches_sympy():
    for n in range(1, 6):
        for perm in itertools.permutations(range(n)):
            assert _perm_sign(perm) == Permutation(list(perm)).signature()


def test_degree_two_is_commutator(field, rng):
    X = Matrix(field, field.random_array(rng, (3, 3)), canonical=True)
    Y = Matrix(field, field.random_array(rng, (3, 3)), canonical=True)
    assert standard_polynomial([X, Y]) == X @ Y - Y @ X
    assert standard_polynomial([X]) == X


def test_recursion_equals_permutation_sum(field, rng):
    for n in range(1, 6):
        args = [Matrix(field, field.random_array(rng, (3, 3)), canonical=True) for _ in range(n)]
        assert standard_polynomial(args) == standard_polynomial_naive(args)


def test_rational_denominators():
    X = mat(QQ, [["1/2", 0], [1, "2/3"]])
    Y = mat(QQ, [[0, "1/5"], [3, 1]])
    Z = mat(QQ, [[1, 1], ["-1/7", 0]])
    assert standard_polynomial([X, Y, Z]) == standard_polynomial_naive([X, Y, Z])


def test_alternating(rng):
    X = Matrix(F5, F5.random_array(rng, (2, 2)), canonical=True)
    Y = Matrix(F5, F5.random_array(rng, (2, 2)), canonical=True)
    assert standard_polynomial([X, Y, X]).is_zero()


def test_full_matrix_algebra_degrees():
    # 2x2 matrices satisfy S_4 but not S_2
    basis = _full_matrix_basis(F5, 2)
    assert fuzz_identity(basis, 4, trials=30).violations == 0
    rep = fuzz_identity(basis, 2, trials=30)
    assert rep.violations > 0 and rep.first_witness is not None
    assert minimal_vanishing_degree(basis, trials=20) == 4


def test_centralizer_satisfies_bound_degree(field):
    for sizes in [(3,), (2, 1), (2, 2), (2, 1, 1)]:
        basis = centralizer_basis(jordan_base(nilpotent_from_profile(field, sizes))).matrices
        rep = fuzz_identity(basis, 2 * len(sizes), trials=15)
        assert rep.violations == 0 and rep.first_witness is None


def test_commutative_centralizer_has_degree_two():
    basis = centralizer_basis(jordan_base(nilpotent_from_profile(F5, (4,)))).matrices
    assert fuzz_identity(basis, 2, trials=20).violations == 0


def test_fuzz_is_deterministic():
    basis = _full_matrix_basis(F5, 2)
    a = fuzz_identity(basis, 2, trials=10, seed=7)
    b = fuzz_identity(basis, 2, trials=10, seed=7)
    assert a == b and a.to_json() == b.to_json()
    assert a.to_json()["seed"] == 7


def test_degree_cap():
    basis = _full_matrix_basis(F5, 1)
    with pytest.raises(DegreeCapExceeded):
        fuzz_identity(basis, 9, trials=1)
    with pytest.raises(DegreeCapExceeded):
        standard_polynomial(basis * 4, max_degree=3)
    assert fuzz_identity(basis, 9, trials=1, max_degree=9).violations == 0


def test_bad_arguments():
    with pytest.raises(ValueError):
        standard_polynomial([])
    with pytest.raises(ValueError):
        standard_polynomial([Matrix.identity(F5, 2), Matrix.identity(F5, 3)])
    with pytest.raises(ValueError):
        fuzz_identity([], 2)
