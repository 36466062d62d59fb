"""Dense univariate polynomials over an exact field.

Coefficients are 0-based: ``coeffs[i]`` multiplies ``t**i``. (Texts that
write f(t) = a_1 + a_2 t + ... + a_{n+1} t^n have a_{i+1} == coeffs[i].)
The zero polynomial has an empty coefficient tuple and degree -1.
"""
from __future__ import annotations

from .field import FieldElem, FieldSpec


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs=()):
        cs = [field.canon(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, field, coeffs):
        # coeffs already canonical
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        obj = cls.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coeffs", tuple(cs))
        return obj

    @classmethod
    def zero(cls, field):
        return cls._raw(field, ())

    @classmethod
    def one(cls, field):
        return cls._raw(field, (field.one,))

    @classmethod
    def monomial(cls, field, k, c=1):
        return cls._raw(field, (field.zero,) * k + (field.canon(c),))

    @classmethod
    def from_roots(cls, field, roots):
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, [field.neg(field.canon(r)), 1])
        return out

    # -- inspection ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i) -> FieldElem:
        return FieldElem(self.field, self.coeffs[i] if i < len(self.coeffs) else self.field.zero)

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def valuation(self) -> int:
        """Largest k with t**k dividing self (``-1`` for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    def divisible_by_t_power(self, k) -> bool:
        return all(c == 0 for c in self.coeffs[:k])

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        return Poly._raw(self.field, (self.field.canon(other),))

    def __add__(self, other):
        other = self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly._raw(F, [F.add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly._raw(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        if not self.coeffs or not other.coeffs:
            return Poly.zero(F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly._raw(F, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly.one(self.field)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k) -> Poly:
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return Poly._raw(self.field, (self.field.zero,) * k + self.coeffs)

    def cut(self, k) -> Poly:
        """Terms of degree below ``k``."""
        if k < 1:
            raise ValueError(f"cut length must be >= 1, got {k}")
        return Poly._raw(self.field, self.coeffs[:k])

    def monic(self) -> Poly:
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        F = self.field
        inv = F.inv(self.leading)
        return Poly._raw(F, [F.mul(c, inv) for c in self.coeffs])

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(F), self
        quot = [F.zero] * (dq + 1)
        inv_lead = F.inv(other.leading)
        for k in range(dq, -1, -1):
            c = F.mul(rem[k + len(other.coeffs) - 1], inv_lead)
            quot[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = F.sub(rem[k + j], F.mul(c, b))
        return Poly._raw(F, quot), Poly._raw(F, rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate at a scalar by Horner's rule."""
        F = self.field
        x = F.canon(x)
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return FieldElem(F, acc)

    # -- display ---------------------------------------------------------

    def display(self) -> str:
        """Human form such as ``2 + t^2`` (``0`` for the zero polynomial)."""
        F = self.field
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            neg = not F.is_prime and c < 0
            mag = F.to_json(-c if neg else c)
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            terms.append((neg, body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json(self) -> dict:
        return {"coeffs": [self.field.to_json(c) for c in self.coeffs], "display": self.display()}

    def __str__(self):
        return self.display()

    def __repr__(self):
        return f"Poly({self.field}, {self.display()})"


def poly_cut(f: Poly, k: int) -> Poly:
    """The ``k``-cut of ``f``: its terms of degree ``0 .. k-1``."""
    return f.cut(k)
