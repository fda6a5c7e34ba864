"""The graded symmetric algebra on shifted necklaces and its BV operator.

A necklace x sits in the shifted space with degree ``|x| + p + 1``.
Monomials are sorted tuples of necklaces; reordering produces the Koszul
sign in shifted degrees and a repeated odd factor kills the monomial.

``bv_delta`` is ``Delta_hbar = br~ + hbar * delta~`` where br~ extends
``x*y -> sign * br(x, y)`` as a second-order operator and delta~ extends
``x -> mult(delta(x))`` as a derivation.  The sign is -1 exactly when the
shift p+1 is odd; it is what makes the trace map intertwine the brackets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linear import LinComb
from .necklace import Necklace, bracket_words, cobracket_word
from .quiver import DoubledQuiver
from .signs import cyclic_symmetrizer  # noqa: F401  (re-exported)

# Scale between delta~ and the symmetrised image of delta: delta~(x) is the
# product of the two tensor legs times this constant.
COBRACKET_SYM_SCALE = Fraction(1)


def bracket_sym_sign(p: int) -> int:
    """Sign of br~(x*y) relative to br(x, y) on the shifted space."""
    return -1 if p == 0 else 1


def shifted_degree(x: Necklace, p: int) -> int:
    return (x.degree(p) + p + 1) & 1


def sym_normalize(factors, p: int):
    """Sort ``factors`` into a monomial.  Returns ``(monomial, sign)`` or None
    when an odd factor repeats."""
    fs = list(factors)
    degs = [shifted_degree(f, p) for f in fs]
    sign = 1
    # insertion sort, tracking swaps of two odd factors
    for i in range(1, len(fs)):
        j = i
        while j > 0 and fs[j - 1] > fs[j]:
            if degs[j - 1] and degs[j]:
                sign = -sign
            fs[j - 1], fs[j] = fs[j], fs[j - 1]
            degs[j - 1], degs[j] = degs[j], degs[j - 1]
            j -= 1
    for i in range(1, len(fs)):
        if degs[i] and fs[i] == fs[i - 1]:
            return None
    return tuple(fs), sign


def monomial_degree(mono, p: int) -> int:
    return sum(shifted_degree(x, p) for x in mono) & 1


class BVElement(LinComb):
    """Element of Sym(A[p+1]): sorted tuple of Necklaces -> coefficient."""

    @classmethod
    def unit(cls):
        return cls({(): Fraction(1)})

    @classmethod
    def generator(cls, x: Necklace, coeff=1):
        return cls({(x,): Fraction(coeff)})

    def mul(self, other: "BVElement", p: int) -> "BVElement":
        out = BVElement()
        for m1, c1 in self.items():
            for m2, c2 in other.items():
                res = sym_normalize(m1 + m2, p)
                if res is not None:
                    out.add_term(res[0], c1 * c2 * res[1])
        return out

    def homogeneous_parts(self, p: int):
        out = {}
        for m, c in self.items():
            out.setdefault(monomial_degree(m, p), BVElement())[m] = c
        return out

    def max_poly_degree(self) -> int:
        return max((len(m) for m in self), default=0)


def monomial(factors, p: int) -> BVElement:
    res = sym_normalize(factors, p)
    out = BVElement()
    if res is not None:
        out[res[0]] = Fraction(res[1])
    return out


@dataclass(frozen=True)
class HbarParam:
    hbar: Fraction
    p: int

    def __post_init__(self):
        object.__setattr__(self, "hbar", Fraction(self.hbar))
        if self.hbar == 0:
            raise ValueError("hbar must be nonzero")
        if self.p not in (0, 1):
            raise ValueError("p must be 0 or 1")

    @property
    def lam(self) -> Fraction:
        """iota^2 = lam * id required for the trace map to intertwine."""
        return 1 / (2 * self.hbar) if self.p == 0 else 1 / self.hbar


def _extract_pair_sign(degs, i, j) -> int:
    """Sign of moving factors i < j to the front of a monomial."""
    e = degs[i] & (sum(degs[:i]) & 1)
    e ^= degs[j] & ((sum(degs[:j]) - degs[i]) & 1)
    return -1 if e else 1


def _extract_one_sign(degs, i) -> int:
    return -1 if degs[i] & (sum(degs[:i]) & 1) else 1


def bracket_part(dq: DoubledQuiver, e: BVElement) -> BVElement:
    p = dq.p
    sgn = bracket_sym_sign(p)
    out = BVElement()
    for mono, c in e.items():
        n = len(mono)
        if n < 2:
            continue
        degs = [shifted_degree(x, p) for x in mono]
        for i in range(n):
            for j in range(i + 1, n):
                b = bracket_words(dq, mono[i].word, mono[j].word)
                if not b:
                    continue
                s = _extract_pair_sign(degs, i, j) * c * sgn
                rest = mono[:i] + mono[i + 1:j] + mono[j + 1:]
                for w, cw in b.items():
                    res = sym_normalize((w,) + rest, p)
                    if res is not None:
                        out.add_term(res[0], s * cw * res[1])
    return out


def cobracket_part(dq: DoubledQuiver, e: BVElement) -> BVElement:
    p = dq.p
    out = BVElement()
    for mono, c in e.items():
        degs = [shifted_degree(x, p) for x in mono]
        for i in range(len(mono)):
            d = cobracket_word(dq, mono[i].word)
            if not d:
                continue
            s = _extract_one_sign(degs, i) * c * COBRACKET_SYM_SCALE
            rest = mono[:i] + mono[i + 1:]
            for (u, v), cw in d.items():
                res = sym_normalize((u, v) + rest, p)
                if res is not None:
                    out.add_term(res[0], s * cw * res[1])
    return out


def bv_delta(dq: DoubledQuiver, e: BVElement, hbar) -> BVElement:
    out = bracket_part(dq, e)
    return out.iadd(cobracket_part(dq, e), Fraction(hbar))


def seven_term_defect(dq: DoubledQuiver, x: BVElement, y: BVElement, z: BVElement,
                      hbar) -> BVElement:
    """Left side of the seven term identity for homogeneous x, y, z."""
    p = dq.p

    def D(u):
        return bv_delta(dq, u, hbar)

    def m(*us):
        r = us[0]
        for u in us[1:]:
            r = r.mul(u, p)
        return r

    dx, dy, dz = (_single_degree(u, p) for u in (x, y, z))
    s1 = -1 if dx * (dy + dz) & 1 else 1
    s2 = -1 if dz * (dx + dy) & 1 else 1
    out = D(m(x, y, z))
    out.iadd(m(D(m(x, y)), z), -1)
    out.iadd(m(D(m(y, z)), x), -s1)
    out.iadd(m(D(m(z, x)), y), -s2)
    out.iadd(m(D(x), y, z), 1)
    out.iadd(m(D(y), z, x), s1)
    out.iadd(m(D(z), x, y), s2)
    return out


def _single_degree(u: BVElement, p: int) -> int:
    degs = {monomial_degree(m, p) for m in u}
    if len(degs) > 1:
        raise ValueError("element is not homogeneous")
    return degs.pop() if degs else 0
