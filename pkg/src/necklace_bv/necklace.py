"""Graded necklaces: cyclic words in the doubled quiver and their Lie bialgebra.

A closed path ``a_1 ... a_n`` is identified with its rotations up to the
Koszul sign ``(-1)^{|a_1 ... a_{r}| |a_{r+1} ... a_n|}``.  Each nonzero class
is stored through its lexicographically minimal rotation (earliest start on
ties); classes forced to equal minus themselves are zero and never stored.

Indices of positions on a word are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linear import LinComb
from .quiver import DoubledQuiver, bar, indicator


class PathError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Necklace:
    """Canonical closed path.  ``vertex`` is the base point (s of the first
    arrow, or the vertex of a constant path)."""

    word: tuple[int, ...]
    vertex: int
    doubles: int = field(default=0, compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def degree(self, p: int) -> int:
        return (self.doubles * p) & 1

    def is_constant(self) -> bool:
        return not self.word


class NecklaceSum(LinComb):
    """Element of the necklace space: Necklace -> coefficient."""

    def degree_parts(self, p):
        out = {}
        for k, c in self.items():
            out.setdefault(k.degree(p), NecklaceSum())[k] = c
        return out


class TensorSum(LinComb):
    """Element of a tensor power of the necklace space: tuple of Necklaces -> coefficient."""


def constant(v: int) -> Necklace:
    return Necklace((), v, 0)


def path_degree(dq: DoubledQuiver, word) -> int:
    return dq.p & sum(c & 1 for c in word)


def check_path(dq: DoubledQuiver, word):
    for x, y in zip(word, word[1:]):
        if dq.target[x] != dq.source[y]:
            raise PathError("path is not composable")


def canonicalize(dq: DoubledQuiver, word, vertex: int | None = None):
    """Return ``(necklace, sign)`` with ``word == sign * necklace``, or ``None``
    if the word vanishes under the graded cyclic relation."""
    word = tuple(word)
    n = len(word)
    if n == 0:
        if vertex is None:
            raise PathError("constant path needs a vertex")
        return Necklace((), vertex, 0), 1
    check_path(dq, word)
    if dq.target[word[-1]] != dq.source[word[0]]:
        raise PathError("open path")
    if vertex is not None and vertex != dq.source[word[0]]:
        raise PathError("base vertex does not match the path")
    doubles = sum(c & 1 for c in word)
    best, r0 = word, 0
    for r in range(1, n):
        rot = word[r:] + word[:r]
        if rot < best:
            best, r0 = rot, r
    sign = 1
    # an odd total degree makes prefix or suffix even, so no sign can occur
    if dq.p and not doubles & 1:
        if sum(c & 1 for c in word[:r0]) & 1:
            sign = -1
        for r in range(1, n):
            if best[r:] + best[:r] == best and sum(c & 1 for c in best[:r]) & 1:
                return None
    return Necklace(best, dq.source[best[0]], doubles), sign


def necklace_of(dq: DoubledQuiver, word, vertex: int | None = None) -> NecklaceSum:
    """The class of a closed path as a NecklaceSum (empty if it vanishes)."""
    res = canonicalize(dq, word, vertex)
    out = NecklaceSum()
    if res is not None:
        out[res[0]] = Fraction(res[1])
    return out


def epsilon(dq: DoubledQuiver, word, k: int, l: int) -> int:
    """Relative sign exponent between the rotations starting at k and at l:
    |a_k ... a_{l-1}| * |a_l ... a_{k-1}| mod 2 (cyclic)."""
    n = len(word)
    if not (0 <= k < n and 0 <= l < n):
        raise IndexError("position out of range")
    first = segment_word(word, k - 1, l) if k != l else ()
    d1 = path_degree(dq, first)
    d2 = path_degree(dq, word) ^ d1
    return d1 & d2


def segment_word(word, i: int, j: int):
    """The arrows strictly between positions i and j going forward cyclically."""
    n = len(word)
    length = (j - i - 1) % n
    start = (i + 1) % n
    w = word[start:] + word[:start]
    return w[:length]


def segment(dq: DoubledQuiver, word, i: int, j: int):
    """A_{ij} as ``(word, vertex)``; the constant e_{t(a_i)} when j = i+1 mod n."""
    n = len(word)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError("position out of range")
    return segment_word(word, i, j), dq.target[word[i]]


def rotation(word, k: int):
    return tuple(word[k:]) + tuple(word[:k])


# -- bracket and cobracket --------------------------------------------------

def _prefix_degrees(dq, word):
    pre = [0]
    for c in word:
        pre.append(pre[-1] ^ dq.degree[c])
    return pre


def bracket_words(dq: DoubledQuiver, A, B) -> NecklaceSum:
    """br(A, B) for closed words A, B read from their first positions."""
    out = NecklaceSum()
    if not A or not B:
        return out
    p = dq.p
    n, m = len(A), len(B)
    preA, preB = _prefix_degrees(dq, A), _prefix_degrees(dq, B)
    totA, totB = preA[-1], preB[-1]
    for i in range(n):
        ai = A[i]
        target = bar(ai)
        Aii = A[i + 1:] + A[:i]
        degAii = totA ^ dq.degree[ai]
        epsA = preA[i] & (totA ^ preA[i])
        for j in range(m):
            if B[j] != target:
                continue
            bj = B[j]
            expo = epsA ^ (preB[j] & (totB ^ preB[j])) ^ (degAii & dq.degree[bj])
            coeff = indicator(ai, bj, p) * (-1 if expo else 1)
            res = canonicalize(dq, Aii + B[j + 1:] + B[:j], dq.target[ai])
            if res is not None:
                out.add_term(res[0], Fraction(coeff * res[1]))
    return out


def bracket(dq: DoubledQuiver, x: NecklaceSum, y: NecklaceSum) -> NecklaceSum:
    out = NecklaceSum()
    for nx, cx in x.items():
        if nx.is_constant():
            continue
        for ny, cy in y.items():
            if ny.is_constant():
                continue
            out.iadd(bracket_words(dq, nx.word, ny.word), cx * cy)
    return out


def cobracket_word(dq: DoubledQuiver, A) -> TensorSum:
    """delta(A) for a closed word A read from its first position."""
    out = TensorSum()
    n = len(A)
    if n <= 1:
        return out
    p = dq.p
    pre = _prefix_degrees(dq, A)
    tot = pre[-1]
    half = Fraction(1, 2)
    for i in range(n):
        ai = A[i]
        target = bar(ai)
        epsA = pre[i] & (tot ^ pre[i])
        for j in range(n):
            if A[j] != target:
                continue
            aj = A[j]
            Aij = segment_word(A, i, j)
            Aji = segment_word(A, j, i)
            expo = epsA ^ (path_degree(dq, Aij) & dq.degree[aj])
            left = canonicalize(dq, Aij, dq.target[ai])
            right = canonicalize(dq, Aji, dq.target[aj])
            if left is None or right is None:
                continue
            coeff = indicator(ai, aj, p) * left[1] * right[1] * (-1 if expo else 1)
            out.add_term((left[0], right[0]), half * coeff)
    return out


def cobracket(dq: DoubledQuiver, x: NecklaceSum) -> TensorSum:
    out = TensorSum()
    for nx, cx in x.items():
        out.iadd(cobracket_word(dq, nx.word), cx)
    return out
