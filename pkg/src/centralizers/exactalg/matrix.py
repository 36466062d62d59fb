"""Dense exact matrices and column vectors.

Endomorphisms act on the left of column vectors. Storage is a read-only
numpy array: int64 residues over F_p (elimination and products run through
the kernels in ``_accel``), ``Fraction`` objects over Q.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .. import _accel
from .field import FieldElem, FieldSpec


def _frozen(arr):
    arr.flags.writeable = False
    return arr


def _rref_rational(arr):
    """Fraction-free Gauss-Jordan over Q with per-row content removal."""
    rows, cols = arr.shape
    m = []
    for row in arr:
        den = math.lcm(*(x.denominator for x in row)) if cols else 1
        m.append([x.numerator * (den // x.denominator) for x in row])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        a = pr[c]
        nz = [j for j in range(c, cols) if pr[j]]
        for i in range(rows):
            if i == r or not m[i][c]:
                continue
            row = m[i]
            f = row[c]
            for j in range(cols):
                row[j] *= a
            for j in nz:
                row[j] -= f * pr[j]
            g = math.gcd(*row)
            if g > 1:
                m[i] = [x // g for x in row]
        pivots.append(c)
        r += 1
    out = np.empty((rows, cols), dtype=object)
    for i in range(rows):
        if i < r:
            lead = m[i][pivots[i]]
            out[i] = [Fraction(x, lead) for x in m[i]]
        else:
            out[i] = [Fraction(0)] * cols
    return out, np.array(pivots, dtype=np.int64)


class Matrix:
    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data, *, canonical=False):
        arr = data if canonical else field.array(data)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-D, got shape {arr.shape}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", _frozen(arr))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, field, n):
        return cls(field, field.eye(n), canonical=True)

    @classmethod
    def zeros(cls, field, rows, cols=None):
        return cls(field, field.zeros((rows, rows if cols is None else cols)), canonical=True)

    @classmethod
    def from_columns(cls, field, vectors, rows=None):
        vectors = list(vectors)
        if not vectors:
            return cls(field, field.zeros((rows or 0, 0)), canonical=True)
        return cls(field, np.stack([v.data for v in vectors], axis=1), canonical=True)

    @classmethod
    def block_diag(cls, field, blocks):
        n = sum(b.rows for b in blocks)
        out = field.zeros((n, n))
        at = 0
        for b in blocks:
            out[at:at + b.rows, at:at + b.cols] = b.data
            at += b.rows
        return cls(field, out, canonical=True)

    # -- shape -----------------------------------------------------------

    @property
    def shape(self):
        return self.data.shape

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def is_square(self):
        return self.rows == self.cols

    def entry(self, i, j) -> FieldElem:
        return FieldElem(self.field, self.data[i, j])

    def column(self, j) -> Vector:
        return Vector(self.field, self.data[:, j].copy(), canonical=True)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self):
        return Matrix(self.field, self.data.T.copy(), canonical=True)

    def vec(self) -> Vector:
        """Column-major flattening."""
        return Vector(self.field, self.data.ravel(order="F").copy(), canonical=True)

    def to_rows(self):
        return [[self.field.to_json(x) for x in row] for row in self.data]

    # -- arithmetic ------------------------------------------------------

    def _same(self, other):
        if not isinstance(other, (Matrix, Vector)) or other.field != self.field:
            raise ValueError("operands must be matrices over the same field")

    def __matmul__(self, other):
        self._same(other)
        F = self.field
        if isinstance(other, Vector):
            if other.dim != self.cols:
                raise ValueError(f"shape mismatch {self.shape} @ ({other.dim},)")
            col = other.data.reshape(-1, 1)
            return Vector(F, _matmul(F, self.data, col).reshape(-1), canonical=True)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix(F, _matmul(F, self.data, other.data), canonical=True)

    def __add__(self, other):
        self._same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        s = self.data + other.data
        return Matrix(self.field, s % self.field.p if self.field.is_prime else s, canonical=True)

    def __neg__(self):
        F = self.field
        return Matrix(F, (-self.data) % F.p if F.is_prime else -self.data, canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.field
        c = F.canon(c)
        s = self.data * c
        return Matrix(F, s % F.p if F.is_prime else s, canonical=True)

    def __mul__(self, c):
        if isinstance(c, (Matrix, Vector)):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            k >>= 1
            if k:
                base = base @ base
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and bool(np.all(self.data == other.data)))

    __hash__ = None

    def is_zero(self):
        return not bool(np.any(self.data != 0))

    def commutes_with(self, other) -> bool:
        return self @ other == other @ self

    # -- elimination -----------------------------------------------------

    def rref(self):
        """``(R, pivots)`` with leftmost-column, topmost-row pivoting."""
        F = self.field
        if F.is_prime:
            r, piv = _accel.rref_mod(self.data, F.p)
        else:
            r, piv = _rref_rational(self.data)
        return Matrix(F, r, canonical=True), tuple(int(c) for c in piv)

    def rank(self) -> int:
        if self.data.size == 0:
            return 0
        return len(self.rref()[1])

    def inverse(self) -> Matrix:
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = np.concatenate([self.data, self.field.eye(n)], axis=1)
        r, piv = Matrix(self.field, aug, canonical=True).rref()
        if piv[:n] != tuple(range(n)) or len(piv) < n:
            raise ValueError("matrix is singular")
        return Matrix(self.field, r.data[:, n:].copy(), canonical=True)

    def __repr__(self):
        return f"Matrix({self.field}, {self.to_rows()})"


class Vector:
    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data, *, canonical=False):
        arr = data if canonical else field.array(data)
        if arr.ndim != 1:
            raise ValueError(f"vector data must be 1-D, got shape {arr.shape}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", _frozen(arr))

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @classmethod
    def zeros(cls, field, d):
        return cls(field, field.zeros(d), canonical=True)

    @classmethod
    def unit(cls, field, d, i):
        out = field.zeros(d)
        out[i] = field.one
        return cls(field, out, canonical=True)

    @property
    def dim(self):
        return self.data.shape[0]

    def __len__(self):
        return self.dim

    def __getitem__(self, i) -> FieldElem:
        return FieldElem(self.field, self.data[i])

    def _same(self, other):
        if not isinstance(other, Vector) or other.field != self.field or other.dim != self.dim:
            raise ValueError("operands must be vectors of equal length over one field")

    def __add__(self, other):
        self._same(other)
        s = self.data + other.data
        return Vector(self.field, s % self.field.p if self.field.is_prime else s, canonical=True)

    def __neg__(self):
        F = self.field
        return Vector(F, (-self.data) % F.p if F.is_prime else -self.data, canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.field
        s = self.data * F.canon(c)
        return Vector(F, s % F.p if F.is_prime else s, canonical=True)

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return (self.field == other.field and self.dim == other.dim
                and bool(np.all(self.data == other.data)))

    __hash__ = None

    def is_zero(self):
        return not bool(np.any(self.data != 0))

    def to_list(self):
        return [self.field.to_json(x) for x in self.data]

    def __repr__(self):
        return f"Vector({self.field}, {self.to_list()})"


def _matmul(F, a, b):
    if F.is_prime:
        return _accel.matmul_mod(a, b, F.p)
    if a.shape[1] == 0:
        return F.zeros((a.shape[0], b.shape[1]))
    return a.dot(b)
