"""Exact scalar fields: prime fields F_p and the rationals Q.

Scalars are stored as their canonical representative: an ``int`` in
``[0, p)`` for F_p, a ``fractions.Fraction`` (reduced, positive denominator)
for Q. Two scalars are equal exactly when their representatives are equal.
``FieldElem`` wraps a representative together with its field for callers
who want operator syntax; matrices and polynomials store bare
representatives.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .._accel import MAX_PRIME


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


_to_fraction = np.frompyfunc(Fraction, 1, 1)


@dataclass(frozen=True)
class FieldSpec:
    """Either ``FieldSpec.prime(p)`` or ``FieldSpec.rational()``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "prime":
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise ValueError(f"p={self.p!r} is not a prime")
            if self.p > MAX_PRIME:
                raise ValueError(f"p={self.p} exceeds the supported bound {MAX_PRIME}")
        elif self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("prime", int(p))

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls("rational")

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def dtype(self):
        return np.int64 if self.is_prime else object

    def __str__(self):
        return f"F_{self.p}" if self.is_prime else "Q"

    # -- scalars ---------------------------------------------------------

    @property
    def zero(self):
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime else Fraction(1)

    def canon(self, value):
        """Canonical representative of ``value`` (int, Fraction, str, FieldElem)."""
        if isinstance(value, FieldElem):
            if value.field != self:
                raise ValueError(f"element of {value.field} used in {self}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.is_prime:
            if isinstance(value, Fraction):
                den = value.denominator % self.p
                if den == 0:
                    raise ZeroDivisionError(f"denominator divisible by {self.p}")
                return value.numerator * pow(den, -1, self.p) % self.p
            if isinstance(value, (bool, float)) or not isinstance(value, (int, np.integer)):
                raise TypeError(f"cannot read {value!r} as an element of {self}")
            return int(value) % self.p
        if isinstance(value, float):
            raise TypeError("floats are not exact field elements")
        return Fraction(value)

    def __call__(self, value) -> FieldElem:
        return FieldElem(self, self.canon(value))

    def add(self, a, b):
        return (a + b) % self.p if self.is_prime else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.is_prime else a - b

    def neg(self, a):
        return (-a) % self.p if self.is_prime else -a

    def mul(self, a, b):
        return a * b % self.p if self.is_prime else a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.is_prime else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        if not self.is_prime:
            raise ValueError("Q is infinite")
        return range(self.p)

    # -- arrays ----------------------------------------------------------

    def array(self, data) -> np.ndarray:
        """Canonical numpy array (int64 residues or Fraction objects)."""
        if self.is_prime:
            arr = np.asarray(data, dtype=object) if not isinstance(data, np.ndarray) else data
            if arr.dtype == object:
                flat = [self.canon(x) for x in arr.ravel()]
                return np.array(flat, dtype=np.int64).reshape(arr.shape)
            if arr.dtype.kind not in "iu":
                raise TypeError(f"cannot read {arr.dtype} data in {self}")
            return np.mod(arr.astype(np.int64), self.p)
        arr = np.asarray(data, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        out.ravel()[:] = [self.canon(x) for x in arr.ravel()]
        return out

    def zeros(self, shape) -> np.ndarray:
        if self.is_prime:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def random_array(self, rng: np.random.Generator, shape, bound: int = 9) -> np.ndarray:
        """Uniform residues over F_p; integers in [-bound, bound] over Q."""
        if self.is_prime:
            return rng.integers(0, self.p, size=shape, dtype=np.int64)
        ints = rng.integers(-bound, bound + 1, size=shape)
        return _to_fraction(ints.astype(object)).astype(object)

    # -- serialization ---------------------------------------------------

    def to_json(self, value):
        """int for F_p and integral rationals, otherwise ``"num/den"``."""
        if self.is_prime:
            return int(value)
        value = Fraction(value)
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"

    def describe(self) -> dict:
        return {"kind": "prime", "p": self.p} if self.is_prime else {"kind": "rational"}

    @classmethod
    def from_json(cls, doc) -> FieldSpec:
        if not isinstance(doc, dict) or "kind" not in doc:
            raise ValueError(f"bad field document {doc!r}")
        if doc["kind"] == "prime":
            return cls.prime(doc["p"])
        if doc["kind"] == "rational":
            return cls.rational()
        raise ValueError(f"unknown field kind {doc['kind']!r}")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Read ``"rational"``/``"Q"`` or ``"prime:7"``/``"F7"``."""
        t = text.strip()
        if t.lower() in ("rational", "q"):
            return cls.rational()
        for prefix in ("prime:", "F_", "F"):
            if t.startswith(prefix) and t[len(prefix):].isdigit():
                return cls.prime(int(t[len(prefix):]))
        raise ValueError(f"cannot parse field {text!r}")


@dataclass(frozen=True, eq=False)
class FieldElem:
    """Field element; compares equal to plain ints and Fractions it represents."""

    field: FieldSpec
    value: object

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.canon(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def _other(self, other):
        return self.field.canon(other)

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElem(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field}({self.field.to_json(self.value)})"
