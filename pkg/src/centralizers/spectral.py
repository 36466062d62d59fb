"""Generalized eigenspace decomposition of matrices whose characteristic
polynomial splits over the base field, and the centralizer data it yields.

The centralizer of A is the product of the centralizers of its restrictions
to the generalized eigenspaces; each restriction minus its eigenvalue is
nilpotent, so its centralizer dimension comes from its block profile.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from .centralizer import dim_formula
from .errors import NotSplit
from .exactalg import FieldElem, FieldSpec, Matrix, Poly, kernel_basis, solve
from .jordan import block_profile, jordan_base

MAX_SCAN_PRIME = 10**6


def charpoly_leverrier(A: Matrix) -> Poly:
    """det(tI - A) by the Faddeev-LeVerrier recurrence (needs char 0 or > d)."""
    F = A.field
    n = A.rows
    if F.is_prime and F.p <= n:
        raise ValueError(f"LeVerrier divides by 1..{n}; unusable over {F}")
    coeffs = [F.zero] * n + [F.one]
    eye = Matrix.identity(F, n)
    M = Matrix.zeros(F, n)
    for k in range(1, n + 1):
        M = A @ M + eye.scale(coeffs[n - k + 1])
        tr = F.zero
        AM = A @ M
        for i in range(n):
            tr = F.add(tr, AM.data[i, i])
        coeffs[n - k] = F.neg(F.div(tr, F.canon(k)))
    return Poly(F, coeffs)


def charpoly_berkowitz(A: Matrix) -> Poly:
    """det(tI - A) by Berkowitz's division-free recursion (any field)."""
    F = A.field
    n = A.rows
    # coefficient vectors, highest degree first
    vec = [F.one]
    for size in range(1, n + 1):
        k = n - size
        a = A.data[k, k]
        R = Matrix(F, A.data[k:k + 1, k + 1:].copy(), canonical=True)
        C = Matrix(F, A.data[k + 1:, k:k + 1].copy(), canonical=True)
        A1 = Matrix(F, A.data[k + 1:, k + 1:].copy(), canonical=True)
        col = [F.one, F.neg(a)]
        W = C
        for _ in range(size - 1):
            col.append(F.neg((R @ W).data[0, 0]))
            W = A1 @ W
        new = []
        for i in range(size + 1):
            acc = F.zero
            for j in range(min(i, size - 1) + 1):
                acc = F.add(acc, F.mul(col[i - j], vec[j]))
            new.append(acc)
        vec = new
    return Poly(F, list(reversed(vec)))


def characteristic_polynomial(A: Matrix) -> Poly:
    if not A.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    if A.field.is_prime:
        return charpoly_berkowitz(A)
    return charpoly_leverrier(A)


def _roots_prime(f: Poly):
    F = f.field
    if F.p > MAX_SCAN_PRIME:
        raise ValueError(f"exhaustive root scan limited to p <= {MAX_SCAN_PRIME}")
    xs = np.arange(F.p, dtype=np.int64)
    acc = np.zeros(F.p, dtype=np.int64)
    for c in reversed(f.coeffs):
        acc = (acc * xs + c) % F.p
    return [int(x) for x in np.flatnonzero(acc == 0)]


def _roots_rational(f: Poly):
    den = math.lcm(*(c.denominator for c in f.coeffs))
    ints = [int(c * den) for c in f.coeffs]
    roots = []
    v = next(i for i, c in enumerate(ints) if c)
    if v:
        roots.append(Fraction(0))
    ints = ints[v:]
    if len(ints) > 1:
        for q in sympy.divisors(abs(ints[-1])):
            for p in sympy.divisors(abs(ints[0])):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand not in roots and f(cand).value == 0:
                        roots.append(cand)
    return roots


def _irreducible_factor(f: Poly) -> Poly:
    F = f.field
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(F.to_json(c)) * t**i for i, c in enumerate(f.coeffs))
    if F.is_prime:
        sp = sympy.Poly(expr, t, modulus=F.p)
    else:
        sp = sympy.Poly(expr, t, domain="QQ")
    factors = [g for g, _ in sp.factor_list()[1] if g.degree() >= 2]
    factors.sort(key=lambda g: (g.degree(), str(g.all_coeffs())))
    g = factors[0]
    coeffs = [F.canon(Fraction(str(c))) for c in reversed(g.all_coeffs())]
    return Poly(F, coeffs).monic()


def split_eigenvalues(A: Matrix) -> list[FieldElem]:
    """Distinct eigenvalues, ascending; NotSplit if the char poly does not split."""
    f = characteristic_polynomial(A)
    F = A.field
    roots = _roots_prime(f) if F.is_prime else _roots_rational(f)
    rest = f
    for r in roots:
        lin = Poly(F, [F.neg(F.canon(r)), F.one])
        while True:
            q, rem = divmod(rest, lin)
            if not rem.is_zero():
                break
            rest = q
    if rest.degree > 0:
        raise NotSplit(_irreducible_factor(rest))
    return [F(r) for r in sorted(roots)]


def fitting_exponent(A: Matrix) -> int:
    """Smallest r >= 1 with ker A^r (+) im A^r = whole space (rank stabilization)."""
    if not A.is_square:
        raise ValueError("Fitting exponent of a non-square matrix")
    P = A
    prev = P.rank()
    r = 1
    while True:
        P = P @ A
        cur = P.rank()
        if cur == prev:
            return r
        prev = cur
        r += 1


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Per eigenvalue: basis of ker(A - lam)^r, the nilpotent restriction of
    A - lam to it (in that basis), geometric multiplicity and exponent r."""

    phi: Matrix
    eigenvalues: tuple
    spaces: tuple
    restricted_nilpotents: tuple
    geometric_mults: tuple
    fitting_exponents: tuple

    @property
    def field(self) -> FieldSpec:
        return self.phi.field

    @property
    def algebraic_mults(self):
        return tuple(V.cols for V in self.spaces)

    def profiles(self):
        return [block_profile(jordan_base(N)) for N in self.restricted_nilpotents]


def decompose(A: Matrix) -> SpectralDecomposition:
    F = A.field
    d = A.rows
    lams = split_eigenvalues(A)
    eye = Matrix.identity(F, d)
    spaces, nils, geo, fit = [], [], [], []
    for lam in lams:
        B = A - eye.scale(lam)
        r = fitting_exponent(B)
        V = Matrix.from_columns(F, kernel_basis(B ** r))
        N = solve(V, B @ V)
        spaces.append(V)
        nils.append(N)
        geo.append(len(kernel_basis(B)))
        fit.append(r)
    return SpectralDecomposition(A, tuple(lams), tuple(spaces), tuple(nils), tuple(geo), tuple(fit))


def centralizer_dim_total(dec: SpectralDecomposition) -> int:
    return sum(dim_formula(p) for p in dec.profiles())


def pi_degree_bound(dec: SpectralDecomposition) -> int:
    """2 * max geometric multiplicity: the standard identity of this degree
    vanishes on the centralizer."""
    return 2 * max(dec.geometric_mults)
