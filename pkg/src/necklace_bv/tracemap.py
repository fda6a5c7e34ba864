"""Matrices with polynomial entries and the trace morphism phi.

An ``OMatrix`` is a single block ``V_source -> V_target`` of the algebra of
polynomial-valued maps.  ``entries[mu][nu]`` is the polynomial coefficient of
the elementary map sending basis vector mu to basis vector nu; the product
is totally reversed composition, so a path a_1 ... a_n corresponds to the
product M_{a_1} ... M_{a_n} read left to right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .necklace import Necklace, NecklaceSum, PathError, canonicalize, check_path
from .repbv import CoordRing, Polynomial
from .superlin import SuperMatrix
from .symbv import BVElement


def _pm(e: int) -> int:
    return -1 if e & 1 else 1


@dataclass(frozen=True)
class OMatrix:
    source: int
    target: int
    rows: tuple
    cols: tuple
    entries: tuple
    degree: int

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def __eq__(self, other):
        if not isinstance(other, OMatrix):
            return NotImplemented
        return ((self.source, self.target, self.rows, self.cols)
                == (other.source, other.target, other.rows, other.cols)
                and all(a == b for r, s in zip(self.entries, other.entries)
                        for a, b in zip(r, s)))

    __hash__ = None

    def scaled(self, c) -> "OMatrix":
        return OMatrix(self.source, self.target, self.rows, self.cols,
                       tuple(tuple(e.scaled(c) for e in r) for r in self.entries),
                       self.degree)

    def __add__(self, other: "OMatrix") -> "OMatrix":
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("blocks differ")
        return OMatrix(self.source, self.target, self.rows, self.cols,
                       tuple(tuple(a + b for a, b in zip(r, s))
                             for r, s in zip(self.entries, other.entries)), self.degree)

    def __sub__(self, other):
        return self + other.scaled(-1)


class MatrixAlgebra:
    """Builds and multiplies OMatrix values over a fixed coordinate ring."""

    def __init__(self, ring: CoordRing):
        self.ring = ring
        self.dq, self.space, self.iota = ring.dq, ring.space, ring.iota

    def _wrap(self, s, t, entries, degree) -> OMatrix:
        return OMatrix(s, t, self.space.parities(s), self.space.parities(t),
                       tuple(tuple(r) for r in entries), degree & 1)

    def from_scalar(self, f: SuperMatrix) -> OMatrix:
        ent = [[Polynomial.const(x) for x in row] for row in f.entries]
        return self._wrap(f.source, f.target, ent, f.degree)

    def m_vertex(self, v: int) -> OMatrix:
        return self.from_scalar(SuperMatrix.identity(self.space, v))

    def m_iota(self, v: int) -> OMatrix:
        return self.from_scalar(self.iota.at(v))

    def m_iota_inv(self, v: int) -> OMatrix:
        """Inverse of M_iota for this product.

        Reversed composition of two odd maps picks up a sign, so for odd iota
        this is -M_{iota^-1} rather than the matrix of iota^-1 itself.
        """
        return self.from_scalar(self.iota.inv(v)).scaled(_pm(self.iota.degree))

    def m_arrow(self, code: int) -> OMatrix:
        dq, sp, ring = self.dq, self.space, self.ring
        s, t = dq.source[code], dq.target[code]
        ps, pt = sp.parities(s), sp.parities(t)
        ent = [[ring.x_functional(code, mu, nu).scaled(_pm(ps[mu] + pt[nu]))
                for nu in range(sp.dim(t))] for mu in range(sp.dim(s))]
        return self._wrap(s, t, ent, dq.degree[code])

    def mul(self, A: OMatrix, B: OMatrix) -> OMatrix:
        if A.target != B.source:
            raise PathError("blocks are not composable")
        ring = self.ring
        rows, mid, cols = A.rows, A.cols, B.cols
        out = [[Polynomial() for _ in cols] for _ in rows]
        # pre-twist B once for each parity of the crossing index
        twisted = [[ring.twist(e) for e in r] for r in B.entries]
        for mu, rm in enumerate(rows):
            for nu, rn in enumerate(mid):
                e = A.entries[mu][nu]
                if e.is_zero():
                    continue
                cross = (rm + rn) & 1
                src = twisted if cross else B.entries
                for sg, rs in enumerate(cols):
                    f = src[nu][sg]
                    if f.is_zero():
                        continue
                    prod = ring.mul(e, f)
                    out[mu][sg].iadd(prod, _pm(cross * (rn + rs)))
        return self._wrap(A.source, B.target, out, A.degree + B.degree)

    def supertrace(self, A: OMatrix) -> Polynomial:
        if A.source != A.target:
            raise ValueError("supertrace needs a square block")
        out = Polynomial()
        for mu, par in enumerate(A.rows):
            out.iadd(A.entries[mu][mu], _pm(par))
        return out

    def commutator(self, A: OMatrix, B: OMatrix) -> OMatrix:
        return self.mul(A, B) - self.mul(B, A).scaled(_pm(A.degree * B.degree))

    def commutator_with_iota(self, A: OMatrix) -> OMatrix:
        """[M_iota, A] with iota taken at the ends of the block."""
        d = self.iota.degree
        left = self.mul(self.m_iota(A.source), A)
        right = self.mul(A, self.m_iota(A.target))
        return left - right.scaled(_pm(d * A.degree))

    def b_iota_inv(self, A: OMatrix) -> OMatrix:
        """B_{M_iota^-1}(A) = M_iota^-1 A + (-1)^{iota A + iota} A M_iota^-1."""
        d = self.iota.degree
        left = self.mul(self.m_iota_inv(A.source), A)
        right = self.mul(A, self.m_iota_inv(A.target))
        return left + right.scaled(_pm(d * A.degree + d))

    def m_path(self, word, vertex: int | None = None) -> OMatrix:
        dq = self.dq
        if not word:
            if vertex is None:
                raise PathError("a constant path needs a vertex")
            return self.m_vertex(vertex)
        for a, b in zip(word, word[1:]):
            if dq.target[a] != dq.source[b]:
                raise PathError("path is not composable")
        M = self.m_arrow(word[0])
        for c in word[1:]:
            M = self.mul(M, self.m_arrow(c))
        return M


class TraceMap:
    """phi(x) = (1 (x) str)(M_iota M_{a_1} ... M_{a_n})."""

    def __init__(self, ring: CoordRing):
        self.ring = ring
        self.alg = MatrixAlgebra(ring)
        self.dq = ring.dq
        self._cache = {}

    def phi_word(self, word, vertex: int | None = None) -> Polynomial:
        """phi of the closed word read from its first letter; no canonicalisation."""
        dq = self.dq
        word = tuple(word)
        if word:
            check_path(dq, word)
            if dq.target[word[-1]] != dq.source[word[0]]:
                raise PathError("open path")
            vertex = dq.source[word[0]]
        elif vertex is None:
            raise PathError("a constant path needs a vertex")
        M = self.alg.m_iota(vertex)
        if word:
            M = self.alg.mul(M, self.alg.m_path(word))
        return self.alg.supertrace(M)

    def phi(self, x: Necklace) -> Polynomial:
        key = (x.word, x.vertex)
        if key not in self._cache:
            self._cache[key] = self.phi_word(x.word, x.vertex)
        return self._cache[key]

    def phi_sum(self, s: NecklaceSum) -> Polynomial:
        out = Polynomial()
        for x, c in s.items():
            out.iadd(self.phi(x), c)
        return out

    def phi_sym(self, e: BVElement) -> Polynomial:
        out = Polynomial()
        for mono, c in e.items():
            out.iadd(self.ring.prod(self.phi(x) for x in mono), c)
        return out

    def phi_rotated(self, word, vertex=None) -> Polynomial:
        """phi through the canonical representative, for any rotation of a word."""
        res = canonicalize(self.dq, tuple(word), vertex)
        if res is None:
            return Polynomial()
        x, sign = res
        return self.phi(x).scaled(sign)


def system(dq, space, iota):
    ring = CoordRing(dq, space, iota)
    return ring, TraceMap(ring)

