"""Nilpotent Jordan normal bases: construction, block profiles,
indecomposability and block projections."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NotNilpotent
from .exactalg import Matrix, Vector, kernel_basis


class BlockProfile(tuple):
    """Descending tuple of Jordan block sizes."""

    def __new__(cls, sizes):
        sizes = tuple(int(k) for k in sizes)
        if any(k < 1 for k in sizes):
            raise ValueError(f"block sizes must be positive: {sizes}")
        return super().__new__(cls, sorted(sizes, reverse=True))

    @property
    def dimension(self) -> int:
        return sum(self)

    @property
    def blocks(self) -> int:
        return len(self)


@dataclass(frozen=True, eq=False)
class JordanBase:
    """Chains ``x[g][0] -> x[g][1] -> ... -> x[g][k_g - 1] -> 0`` under ``phi``.

    ``chains[g][i]`` is the vector written x_{g,i+1} in 1-based notation.
    Chains are ordered by size, largest first.
    """

    phi: Matrix
    chains: tuple

    @property
    def sizes(self) -> tuple:
        return tuple(len(c) for c in self.chains)

    @property
    def ambient_dim(self) -> int:
        return self.phi.rows

    @property
    def field(self):
        return self.phi.field

    @property
    def heads(self):
        return [c[0] for c in self.chains]

    @cached_property
    def offsets(self) -> tuple:
        out, at = [], 0
        for k in self.sizes:
            out.append(at)
            at += k
        return tuple(out)

    @cached_property
    def basis_matrix(self) -> Matrix:
        """Columns x_{1,1}, ..., x_{1,k_1}, x_{2,1}, ... (chain by chain)."""
        return Matrix.from_columns(self.field, [v for c in self.chains for v in c])

    @cached_property
    def basis_inverse(self) -> Matrix:
        return self.basis_matrix.inverse()

    def coordinates(self, u: Vector) -> list:
        """Per-chain coordinate lists of ``u`` in the chain basis."""
        c = (self.basis_inverse @ u).data
        return [list(c[o:o + k]) for o, k in zip(self.offsets, self.sizes)]


def nilpotency_index(A: Matrix) -> int:
    """Smallest n >= 1 with A^n = 0."""
    if not A.is_square:
        raise ValueError("nilpotency index of a non-square matrix")
    d = A.rows
    P = A
    for n in range(1, max(d, 1) + 1):
        if P.is_zero():
            return n
        P = P @ A
    raise NotNilpotent(f"A^{d} != 0 for the {d}x{d} input")


def jordan_base(A: Matrix) -> JordanBase:
    """Kernel-filtration construction of a nilpotent Jordan normal base.

    Level by level from the top of ker A <= ker A^2 <= ... <= ker A^n, new
    chain heads complete (ker A^{j-1} + vectors of longer chains at depth j)
    to ker A^j, scanning the RREF kernel basis in order.
    """
    n = nilpotency_index(A)
    F = A.field
    d = A.rows
    kernels = [[]]
    P = Matrix.identity(F, d)
    for _ in range(n):
        P = P @ A
        kernels.append(kernel_basis(P))

    chains = []
    for level in range(n, 0, -1):
        span = list(kernels[level - 1]) + [c[len(c) - level] for c in chains]
        rank = _rank(F, span)
        for v in kernels[level]:
            if rank == len(kernels[level]):
                break
            r = _rank(F, span + [v])
            if r > rank:
                chain = [v]
                for _ in range(level - 1):
                    chain.append(A @ chain[-1])
                chains.append(tuple(chain))
                span.append(v)
                rank = r
    return JordanBase(A, tuple(chains))


def _rank(F, vectors):
    if not vectors:
        return 0
    return Matrix.from_columns(F, vectors).rank()


def check_base(base: JordanBase) -> None:
    """Raise AssertionError unless ``base`` satisfies every chain invariant."""
    A = base.phi
    d = base.ambient_dim
    assert sum(base.sizes) == d, "sizes do not sum to the dimension"
    assert list(base.sizes) == sorted(base.sizes, reverse=True), "sizes not descending"
    for chain in base.chains:
        for a, b in zip(chain, chain[1:]):
            assert A @ a == b, "chain link broken"
        assert (A @ chain[-1]).is_zero(), "chain tail not in ker A"
    assert base.basis_matrix.rank() == d, "chain vectors are not a basis"


def block_profile(base: JordanBase) -> BlockProfile:
    return BlockProfile(base.sizes)


def profile_from_ranks(A: Matrix) -> BlockProfile:
    """Block sizes from the rank sequence of powers of A alone.

    The number of blocks of size >= j is rank A^{j-1} - rank A^j.
    """
    n = nilpotency_index(A)
    ranks = [A.rows]
    P = Matrix.identity(A.field, A.rows)
    for _ in range(n + 1):
        P = P @ A
        ranks.append(P.rank())
    at_least = [ranks[j - 1] - ranks[j] for j in range(1, n + 2)]
    sizes = []
    for j in range(1, n + 1):
        sizes += [j] * (at_least[j - 1] - at_least[j])
    return BlockProfile(sizes)


def is_indecomposable(A: Matrix) -> bool:
    """True iff A^{d-1} != 0, i.e. A has a single Jordan block."""
    nilpotency_index(A)
    d = A.rows
    return not (A ** (d - 1)).is_zero()


def block_projection(base: JordanBase, delta: int) -> Matrix:
    """Projection onto the span of chain ``delta`` along the other chains."""
    if not 0 <= delta < len(base.chains):
        raise IndexError(f"block index {delta} out of range for {len(base.chains)} blocks")
    F = base.field
    d = base.ambient_dim
    mask = F.zeros((d, d))
    o, k = base.offsets[delta], base.sizes[delta]
    for i in range(o, o + k):
        mask[i, i] = F.one
    X = base.basis_matrix
    return X @ Matrix(F, mask, canonical=True) @ base.basis_inverse


def is_nilpotent(A: Matrix) -> bool:
    try:
        nilpotency_index(A)
    except NotNilpotent:
        return False
    return True


def jordan_form(base: JordanBase) -> Matrix:
    """phi written in its chain basis (block diagonal, ones below the diagonal)."""
    return base.basis_inverse @ base.phi @ base.basis_matrix

