import pytest

from centralizers.exactalg import Poly, Vector, poly_apply
from centralizers.generators import conjugate, nilpotent_from_profile, random_invertible
from centralizers.jordan import jordan_base
from centralizers.phi import PolyVector, in_ker_phi, phi_map, phi_preimage, vector_cut
from centralizers.verify import random_poly, random_polyvector

from conftest import QQ


def _base(field, rng, sizes):
    A = conjugate(nilpotent_from_profile(field, sizes), random_invertible(field, sum(sizes), rng))
    return jordan_base(A)


def test_phi_on_standard_jordan_matrix(field):
    # on the block matrix itself heads are e_0 and e_3, and t^i e_g lands on e_{offset+i}
    base = jordan_base(nilpotent_from_profile(field, (3, 1)))
    heads = base.heads
    assert phi_map(base, PolyVector.unit(field, 2, 0)) == heads[0]
    f = PolyVector([Poly(field, [1, 0, 2]), Poly(field, [0, 5])])
    A = base.phi
    expected = heads[0] + (A @ A @ heads[0]).scale(2)
    assert phi_map(base, f) == expected


def test_phi_axioms(field, rng):
    for sizes in [(1,), (3,), (2, 1), (3, 3), (4, 2, 1)]:
        base = _base(field, rng, sizes)
        A = base.phi
        t = Poly.monomial(field, 1)
        for _ in range(5):
            f = random_polyvector(field, sizes, rng)
            g = random_poly(field, rng)
            assert phi_map(base, f.times(g)) == poly_apply(g, A, phi_map(base, f))
            assert A @ phi_map(base, f) == phi_map(base, f.times(t))
            assert phi_map(base, f) == phi_map(base, vector_cut(f, sizes))
            assert in_ker_phi(f, sizes) == phi_map(base, f).is_zero()


def test_kernel_generators(field, rng):
    sizes = (3, 2, 2)
    base = _base(field, rng, sizes)
    for g, k in enumerate(sizes):
        assert phi_map(base, PolyVector.unit(field, 3, g, Poly.monomial(field, k))).is_zero()
        assert not phi_map(base, PolyVector.unit(field, 3, g, Poly.monomial(field, k - 1))).is_zero()


def test_preimage_roundtrip(field, rng):
    sizes = (3, 1)
    base = _base(field, rng, sizes)
    for _ in range(5):
        u = Vector(field, field.random_array(rng, 4), canonical=True)
        f = phi_preimage(base, u)
        assert phi_map(base, f) == u
        assert all(fg.degree < k for fg, k in zip(f, sizes))


def test_length_mismatch():
    base = jordan_base(nilpotent_from_profile(QQ, (2, 1)))
    with pytest.raises(ValueError):
        phi_map(base, PolyVector.zero(QQ, 3))
    with pytest.raises(ValueError):
        in_ker_phi(PolyVector.zero(QQ, 1), (2, 1))


def test_polyvector_rejects_non_poly():
    with pytest.raises(TypeError):
        PolyVector([1, 2])


def test_vector_cut_example():
    f = PolyVector([Poly(QQ, [1, 2, 3]), Poly(QQ, [4, 5])])
    assert vector_cut(f, (2, 1)) == PolyVector([Poly(QQ, [1, 2]), Poly(QQ, [4])])
