"""Centralizers of nilpotent matrices through polynomial matrices.

A Gamma x Gamma polynomial matrix P acts on polynomial row vectors from the
right. When P maps ker Phi into itself (membership in M(Phi)), the rule
psi_P(Phi(f)) = Phi(f P) is a well defined endomorphism commuting with A,
and every element of the centralizer arises this way from some P whose
column-g entries have degree below k_g. Note the order reversal:
psi_{PQ} = psi_Q o psi_P.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ConsistencyError, NotInCentralizer, NotInMPhi
from .exactalg import Matrix, Poly, minimal_polynomial, solve, span_matrix
from .jordan import JordanBase, jordan_base
from .phi import PolyVector, in_ker_phi, phi_map, phi_preimage


class PolyMatrix:
    """Square matrix over K[t]; ``entries[delta][gamma]``."""

    __slots__ = ("field", "entries")

    def __init__(self, field, entries):
        rows = tuple(tuple(r) for r in entries)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("PolyMatrix must be square")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def zero(cls, field, m):
        z = Poly.zero(field)
        return cls(field, [[z] * m for _ in range(m)])

    @classmethod
    def scalar(cls, field, m, h=None):
        """``h * I`` (identity when ``h`` is omitted)."""
        h = Poly.one(field) if h is None else h
        z = Poly.zero(field)
        return cls(field, [[h if i == j else z for j in range(m)] for i in range(m)])

    @classmethod
    def unit(cls, field, m, delta, gamma, poly=None):
        """``poly * E_{delta,gamma}``."""
        p = Poly.one(field) if poly is None else poly
        z = Poly.zero(field)
        return cls(field, [[p if (i, j) == (delta, gamma) else z for j in range(m)]
                           for i in range(m)])

    @property
    def size(self):
        return len(self.entries)

    def row(self, delta) -> PolyVector:
        return PolyVector(self.entries[delta])

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __add__(self, other):
        return PolyMatrix(self.field, [[a + b for a, b in zip(r, s)]
                                       for r, s in zip(self.entries, other.entries)])

    def scale(self, c):
        return PolyMatrix(self.field, [[a * c for a in r] for r in self.entries])

    def __matmul__(self, other):
        m = self.size
        if other.size != m:
            raise ValueError("size mismatch")
        out = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = Poly.zero(self.field)
                for k in range(m):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.field, out)

    def act(self, f) -> PolyVector:
        """Row vector times matrix: (fP)_g = sum_d f_d p_{d,g}."""
        if len(f) != self.size:
            raise ValueError("length mismatch")
        out = []
        for g in range(self.size):
            acc = Poly.zero(self.field)
            for d, fd in enumerate(f):
                if not fd.is_zero():
                    acc = acc + fd * self.entries[d][g]
            out.append(acc)
        return PolyVector(out)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    __hash__ = None

    def to_json(self):
        return [[p.to_json() for p in r] for r in self.entries]

    def __repr__(self):
        return "PolyMatrix(" + "; ".join(", ".join(p.display() for p in r)
                                         for r in self.entries) + ")"


def _check_size(P, sizes):
    if P.size != len(sizes):
        raise ValueError(f"PolyMatrix of size {P.size} vs {len(sizes)} blocks")


def in_M_phi(P: PolyMatrix, sizes) -> bool:
    """t^{k_d} p_{d,g} in (t^{k_g}) for every entry, i.e. t^{max(0, k_g - k_d)} | p_{d,g}."""
    _check_size(P, sizes)
    return all(P[d, g].divisible_by_t_power(max(0, kg - kd))
               for d, kd in enumerate(sizes) for g, kg in enumerate(sizes))


def in_M_phi_by_generators(P: PolyMatrix, sizes) -> bool:
    """Definitional test: f P in ker Phi for the generators f = t^{k_d} e_d of ker Phi."""
    _check_size(P, sizes)
    field = P.field
    m = len(sizes)
    for d, kd in enumerate(sizes):
        gen = PolyVector.unit(field, m, d, Poly.monomial(field, kd))
        if not in_ker_phi(P.act(gen), sizes):
            return False
    return True


def in_V(P: PolyMatrix, sizes) -> bool:
    """Every entry in column g has degree at most k_g - 1."""
    _check_size(P, sizes)
    return all(P[d, g].degree <= kg - 1
               for d in range(len(sizes)) for g, kg in enumerate(sizes))


def psi_from_P(base: JordanBase, P: PolyMatrix) -> Matrix:
    """Matrix (standard basis) of psi_P: x_{d,i} -> Phi(t^{i-1} e_d P)."""
    if not in_M_phi(P, base.sizes):
        raise NotInMPhi("polynomial matrix does not preserve ker Phi")
    images = []
    for d, k in enumerate(base.sizes):
        row = P.row(d)
        for i in range(k):
            images.append(phi_map(base, row.shift(i)))
    Y = Matrix.from_columns(base.field, images)
    return Y @ base.basis_inverse


def P_from_psi(base: JordanBase, S: Matrix) -> PolyMatrix:
    """Row d is the cut preimage of S x_{d,1}; lands in M(Phi) and V."""
    if S.shape != base.phi.shape or not S.commutes_with(base.phi):
        raise NotInCentralizer("matrix does not commute with phi")
    return PolyMatrix(base.field, [phi_preimage(base, S @ head) for head in base.heads])


@dataclass(frozen=True, eq=False)
class CentralizerBasis:
    """psi of t^i E_{d,g} for max(0, k_g - k_d) <= i <= k_g - 1."""

    base: JordanBase
    elements: tuple

    @property
    def matrices(self):
        return [e[3] for e in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def centralizer_basis(base: JordanBase) -> CentralizerBasis:
    F = base.field
    sizes = base.sizes
    m = len(sizes)
    out = []
    for d, kd in enumerate(sizes):
        for g, kg in enumerate(sizes):
            for i in range(max(0, kg - kd), kg):
                P = PolyMatrix.unit(F, m, d, g, Poly.monomial(F, i))
                out.append((d, g, i, psi_from_P(base, P)))
    return CentralizerBasis(base, tuple(out))


def centralizer_dimension(sizes) -> int:
    """sum over ordered block pairs of min(k_d, k_g)."""
    return sum(min(a, b) for a in sizes for b in sizes)


def dim_formula(profile) -> int:
    """s(1) + 3 s(2) + 5 s(3) + ... for a descending profile."""
    sizes = tuple(profile)
    if list(sizes) != sorted(sizes, reverse=True):
        raise ValueError(f"profile must be sorted descending: {sizes}")
    return sum((2 * j - 1) * s for j, s in enumerate(sizes, start=1))


def polynomial_coeffs(A: Matrix, S: Matrix) -> Poly | None:
    """h with h(A) = S and deg h < deg minpoly(A), or None if S is no polynomial in A."""
    if not A.is_square or S.shape != A.shape:
        raise ValueError(f"size mismatch: {A.shape} vs {S.shape}")
    F = A.field
    n = minimal_polynomial(A).degree
    powers = [Matrix.identity(F, A.rows)]
    for _ in range(n - 1):
        powers.append(A @ powers[-1])
    coeffs = solve(span_matrix(powers), Matrix.from_columns(F, [S.vec()]))
    if coeffs is None:
        return None
    return Poly(F, coeffs.data[:, 0])


class Containment(NamedTuple):
    contained: bool
    certificate: Poly | None


def containment(A: Matrix, B: Matrix) -> Containment:
    """Decide C_A <= C_B for nilpotent A, by two independent routes.

    Direct: every centralizer basis element of A commutes with B.
    Certificate: B = h(A) for some polynomial h.
    """
    if not A.is_square or B.shape != A.shape:
        raise ValueError(f"size mismatch: {A.shape} vs {B.shape}")
    base = jordan_base(A)
    direct = all(M.commutes_with(B) for M in centralizer_basis(base).matrices)
    cert = polynomial_coeffs(A, B)
    if direct != (cert is not None):
        raise ConsistencyError(f"direct containment {direct} but certificate {cert}")
    return Containment(direct, cert)


def bound_check(base: JordanBase) -> tuple[int, int]:
    """``(dim C_phi, m * d)``; the first never exceeds the second."""
    dim = centralizer_dimension(base.sizes)
    bound = len(base.sizes) * base.ambient_dim
    if dim > bound:
        raise ConsistencyError(f"centralizer dimension {dim} exceeds bound {bound}")
    return dim, bound


def striped_view(base: JordanBase, S: Matrix) -> Matrix:
    """S in the chain basis, where centralizer elements show striped blocks."""
    return base.basis_inverse @ S @ base.basis_matrix
