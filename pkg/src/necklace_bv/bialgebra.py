"""The six defining identities of a degree p involutive Lie bialgebra,
evaluated exactly on necklaces.

Each ``*_defect`` function returns ``LHS - RHS`` of one identity; the
identity holds on the given inputs iff the returned combination is empty.
"""

from __future__ import annotations

from .necklace import (Necklace, NecklaceSum, TensorSum, bracket, bracket_words,
                       cobracket_word)
from .quiver import DoubledQuiver
from .signs import cyclic_symmetrizer


def _pm(e: int) -> int:
    return -1 if e & 1 else 1


def single(x: Necklace) -> NecklaceSum:
    return NecklaceSum({x: 1})


def br(dq, x: Necklace, y: Necklace) -> NecklaceSum:
    return bracket_words(dq, x.word, y.word)


def ad_tensor(dq: DoubledQuiver, x: Necklace, t: TensorSum) -> TensorSum:
    """ad_x acting on V (x) V as ad_x (x) 1 + 1 (x) ad_x, with Koszul sign."""
    p = dq.p
    dad = x.degree(p) ^ p
    out = TensorSum()
    for (u, v), c in t.items():
        for w, cw in br(dq, x, u).items():
            out.add_term((w, v), c * cw)
        s = _pm(dad & u.degree(p))
        for w, cw in br(dq, x, v).items():
            out.add_term((u, w), s * c * cw)
    return out


def antisymmetry_defect(dq, x: Necklace, y: Necklace) -> NecklaceSum:
    p = dq.p
    s = _pm(x.degree(p) * y.degree(p) + p + 1)
    return br(dq, x, y) - br(dq, y, x).scaled(s)


def cosymmetry_defect(dq, x: Necklace) -> TensorSum:
    """tau(delta(x)) - (-1)^(p+1) delta(x), tau the graded flip."""
    p = dq.p
    d = cobracket_word(dq, x.word)
    flipped = TensorSum()
    for (u, v), c in d.items():
        flipped.add_term((v, u), c * _pm(u.degree(p) * v.degree(p)))
    return flipped - d.scaled(_pm(p + 1))


def jacobi_defect(dq, x: Necklace, y: Necklace, z: Necklace) -> NecklaceSum:
    p = dq.p
    items = (x, y, z)
    out = NecklaceSum()
    for perm, sign in cyclic_symmetrizer(3, [t.degree(p) for t in items]):
        a, b, c = (items[i] for i in perm)
        out.iadd(bracket(dq, br(dq, a, b), single(c)), sign)
    return out


def cojacobi_defect(dq, x: Necklace) -> TensorSum:
    p = dq.p
    out = TensorSum()
    for (u, v), c in cobracket_word(dq, x.word).items():
        for (u1, u2), c2 in cobracket_word(dq, u.word).items():
            triple = (u1, u2, v)
            for perm, sign in cyclic_symmetrizer(3, [t.degree(p) for t in triple]):
                out.add_term(tuple(triple[i] for i in perm), sign * c * c2)
    return out


def involutivity_defect(dq, x: Necklace) -> NecklaceSum:
    out = NecklaceSum()
    for (u, v), c in cobracket_word(dq, x.word).items():
        out.iadd(br(dq, u, v), c)
    return out


def cocycle_defect(dq, x: Necklace, y: Necklace) -> TensorSum:
    """delta(br(x,y)) - (-1)^{(x+p)p} ad_x delta(y) - (-1)^{(x+p)y+1} ad_y delta(x)."""
    p = dq.p
    dx, dy = x.degree(p), y.degree(p)
    lhs = TensorSum()
    for w, c in br(dq, x, y).items():
        lhs.iadd(cobracket_word(dq, w.word), c)
    rhs = ad_tensor(dq, x, cobracket_word(dq, y.word)).scaled(_pm((dx + p) * p))
    rhs.iadd(ad_tensor(dq, y, cobracket_word(dq, x.word)), _pm((dx + p) * dy + 1))
    return lhs - rhs
