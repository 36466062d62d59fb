from fractions import Fraction

import pytest
import sympy

from centralizers import errors
from centralizers.exactalg import FieldSpec, Matrix, Poly, commutant_oracle
from centralizers.generators import jordan_matrix, random_split
from centralizers.spectral import (
    centralizer_dim_total, characteristic_polynomial, charpoly_berkowitz,
    charpoly_leverrier, decompose, fitting_exponent, pi_degree_bound, split_eigenvalues,
)

from conftest import F2, F5, F13, QQ, mat


def _sympy_charpoly(A):
    F = A.field
    M = sympy.Matrix([[sympy.Rational(F.to_json(x)) for x in row] for row in A.data])
    coeffs = M.charpoly(sympy.Symbol("t")).all_coeffs()
    return Poly(F, [F.canon(Fraction(str(c))) for c in reversed(coeffs)])


def test_charpoly_against_sympy(field, rng):
    for d in range(1, 7):
        A = Matrix(field, field.random_array(rng, (d, d)), canonical=True)
        assert characteristic_polynomial(A) == _sympy_charpoly(A)
        assert charpoly_berkowitz(A) == _sympy_charpoly(A)


def test_leverrier_guard():
    with pytest.raises(ValueError):
        charpoly_leverrier(Matrix.identity(F2, 3))
    assert charpoly_leverrier(Matrix.identity(F13, 3)) == Poly.from_roots(F13, [1, 1, 1])


def test_eigenvalues_examples():
    A = jordan_matrix(QQ, [(2, 2), (-1, 1), (Fraction(1, 2), 1)])
    assert split_eigenvalues(A) == [-1, Fraction(1, 2), 2]
    assert split_eigenvalues(jordan_matrix(F5, [(4, 1), (1, 2)])) == [1, 4]


def test_not_split_reports_factor():
    with pytest.raises(errors.NotSplit) as exc:
        split_eigenvalues(mat(QQ, [[0, -1], [1, 0]]))
    assert exc.value.irreducible_factor == Poly(QQ, [1, 0, 1])
    assert exc.value.payload()["irreducible_factor"]["display"] == "1 + t^2"
    # t^2 - 2 splits over F_7 (3^2 = 2) but not over F_5 or Q
    comp = [[0, 2], [1, 0]]
    assert split_eigenvalues(mat(FieldSpec.prime(7), comp)) == [3, 4]
    for F in (F5, QQ):
        with pytest.raises(errors.NotSplit):
            split_eigenvalues(mat(F, comp))


def test_not_split_with_partial_roots():
    # (t - 1)(t^2 + t + 1) over F_2: one root, an irreducible quadratic left over
    A = Matrix.block_diag(F2, [Matrix.identity(F2, 1), mat(F2, [[0, 1], [1, 1]])])
    with pytest.raises(errors.NotSplit) as exc:
        split_eigenvalues(A)
    assert exc.value.irreducible_factor == Poly(F2, [1, 1, 1])


def test_fitting_exponent_examples(field):
    assert fitting_exponent(Matrix.identity(field, 3)) == 1
    assert fitting_exponent(jordan_matrix(field, [(0, 3), (1, 2)])) == 3
    assert fitting_exponent(Matrix.zeros(field, 2)) == 1


@pytest.mark.parametrize("blocks, dim", [
    ([(1, 2), (1, 1), (3, 1)], 5 + 1),
    ([(0, 3), (2, 3)], 3 + 3),
    ([(1, 1), (1, 1), (1, 1)], 9),
])
def test_decompose_example(blocks, dim):
    A = jordan_matrix(F5, blocks)
    dec = decompose(A)
    assert centralizer_dim_total(dec) == dim == len(commutant_oracle(A))


def test_decompose_random(field, rng):
    for d in range(1, 7):
        A, blocks = random_split(field, d, rng)
        dec = decompose(A)
        lams = sorted({field.canon(lam) for lam, _ in blocks})
        assert [e.value for e in dec.eigenvalues] == lams
        for lam, V, N, g, r in zip(dec.eigenvalues, dec.spaces, dec.restricted_nilpotents,
                                   dec.geometric_mults, dec.fitting_exponents):
            sizes = [k for mu, k in blocks if field.canon(mu) == lam.value]
            assert V.cols == sum(sizes) and g == len(sizes) and r == max(sizes)
            assert (N ** r).is_zero()
        assert sum(dec.algebraic_mults) == d
        assert centralizer_dim_total(dec) == len(commutant_oracle(A))
        assert pi_degree_bound(dec) == 2 * max(dec.geometric_mults)


def test_commutant_preserves_eigenspaces(rng):
    A, _ = random_split(F5, 5, rng)
    dec = decompose(A)
    for X in commutant_oracle(A):
        for V in dec.spaces:
            joint = Matrix.from_columns(F5, V.columns() + (X @ V).columns())
            assert joint.rank() == V.cols
