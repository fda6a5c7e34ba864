"""Sparse formal linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction


class LinComb(dict):
    """Mapping ``basis key -> nonzero coefficient``.

    Zero coefficients are never stored, so ``==`` is equality of the
    underlying vectors.
    """

    def add_term(self, key, coeff):
        if not coeff:
            return
        v = self.get(key, 0) + coeff
        if v:
            self[key] = v
        else:
            del self[key]

    def iadd(self, other, scale=1):
        for k, c in other.items():
            self.add_term(k, c * scale)
        return self

    def copy(self):
        return type(self)(self)

    def __add__(self, other):
        return self.copy().iadd(other)

    def __sub__(self, other):
        return self.copy().iadd(other, -1)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.items()})

    def scaled(self, c):
        c = Fraction(c)
        if not c:
            return type(self)()
        return type(self)({k: v * c for k, v in self.items()})

    def is_zero(self) -> bool:
        return not self

    @classmethod
    def from_terms(cls, terms):
        out = cls()
        for k, c in terms:
            out.add_term(k, c)
        return out
