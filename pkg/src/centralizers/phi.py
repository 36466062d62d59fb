"""The map Phi from polynomial row vectors onto the module.

Given a Jordan base with chains headed by x_{g,1}, a row vector
f = (f_g) of polynomials maps to sum_g f_g(A) x_{g,1}. Phi is a surjective
K[t]-module map, t acting as A, whose kernel over a field is the set of
f with t^{k_g} dividing every f_g.
"""
from __future__ import annotations

from .exactalg import Poly, Vector, poly_apply
from .jordan import JordanBase


class PolyVector(tuple):
    """Row vector of polynomials, one per Jordan block."""

    def __new__(cls, entries):
        entries = tuple(entries)
        if not all(isinstance(e, Poly) for e in entries):
            raise TypeError("PolyVector entries must be Poly")
        return super().__new__(cls, entries)

    @classmethod
    def zero(cls, field, m):
        return cls(Poly.zero(field) for _ in range(m))

    @classmethod
    def unit(cls, field, m, delta, poly=None):
        """``poly`` (default 1) in slot ``delta``, zero elsewhere."""
        p = Poly.one(field) if poly is None else poly
        return cls(p if g == delta else Poly.zero(field) for g in range(m))

    def __add__(self, other):
        _match(self, other)
        return PolyVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _match(self, other)
        return PolyVector(a - b for a, b in zip(self, other))

    def times(self, g: Poly):
        """Left multiplication by a scalar polynomial."""
        return PolyVector(g * a for a in self)

    def shift(self, k=1):
        return PolyVector(a.shift(k) for a in self)

    def is_zero(self):
        return all(a.is_zero() for a in self)

    def to_json(self):
        return [a.to_json() for a in self]


def _match(f, sizes):
    if len(f) != len(sizes):
        raise ValueError(f"length mismatch: {len(f)} entries vs {len(sizes)} blocks")


def phi_map(base: JordanBase, f) -> Vector:
    """sum over blocks g of f_g(A) applied to the chain head x_{g,1}."""
    _match(f, base.chains)
    A = base.phi
    out = Vector.zeros(base.field, base.ambient_dim)
    for fg, head in zip(f, base.heads):
        if not fg.is_zero():
            out = out + poly_apply(fg, A, head)
    return out


def phi_preimage(base: JordanBase, u: Vector) -> PolyVector:
    """The unique preimage with deg f_g < k_g: chain coordinates read as coefficients."""
    F = base.field
    return PolyVector(Poly(F, coords) for coords in base.coordinates(u))


def in_ker_phi(f, sizes) -> bool:
    _match(f, sizes)
    return all(fg.divisible_by_t_power(k) for fg, k in zip(f, sizes))


def vector_cut(f, sizes) -> PolyVector:
    _match(f, sizes)
    return PolyVector(fg.cut(k) for fg, k in zip(f, sizes))
