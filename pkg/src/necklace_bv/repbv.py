"""Polynomial functions on the intertwining representation variety.

Coordinates are the dual basis ``y_alpha`` of the computed intertwiner bases,
one family per arrow of the doubled quiver.  A coordinate functional
``X^a[mu][nu]`` is the linear polynomial ``sum_alpha (f_alpha)[mu][nu] y_alpha``.
Monomials are sorted tuples of variable indices; even variables may repeat
and odd ones may not.

The BV operator is second order with constant coefficients, so it is fixed
by the scalar table ``D[u, v] = Delta~(y_u y_v)``.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import NamedTuple

from .linear import LinComb
from .quiver import DoubledQuiver, indicator
from . import linalg
from .superlin import (IotaData, SuperSpace, gram_matrix, intertwiner_basis,
                       original_codes)


def _pm(e: int) -> int:
    return -1 if e & 1 else 1


class CoordVar(NamedTuple):
    code: int
    index: int
    degree: int
    name: str


class Polynomial(LinComb):
    """Sorted tuple of variable indices -> Fraction."""

    @classmethod
    def const(cls, c=1):
        return cls({(): Fraction(c)}) if c else cls()

    def max_degree(self) -> int:
        return max((len(m) for m in self), default=0)


class CoordRing:
    """The coordinate ring together with its BV operator."""

    def __init__(self, dq: DoubledQuiver, space: SuperSpace, iota: IotaData):
        if iota.p != dq.p:
            raise ValueError("iota was built for a different p")
        self.dq, self.space, self.iota = dq, space, iota
        self.bases = {c: intertwiner_basis(dq, space, iota, c) for c in dq.codes}
        self.vars: list[CoordVar] = []
        self._index = {}
        for c in dq.codes:
            for k, f in enumerate(self.bases[c].maps):
                self._index[(c, k)] = len(self.vars)
                self.vars.append(CoordVar(c, k, (f.degree + dq.degree[c]) & 1,
                                          f"y[{dq.names[c]},{k}]"))
        self.odd = [v.degree for v in self.vars]
        self.table = self.delta_table_closed_form()

    # variables and basic arithmetic

    def var(self, code: int, k: int) -> int:
        return self._index[(code, k)]

    def y(self, code: int, k: int) -> Polynomial:
        return Polynomial({(self.var(code, k),): Fraction(1)})

    def mono_degree(self, m) -> int:
        return sum(self.odd[u] for u in m) & 1

    def parts(self, f: Polynomial):
        out = {}
        for m, c in f.items():
            out.setdefault(self.mono_degree(m), Polynomial())[m] = c
        return out

    def degree(self, f: Polynomial) -> int:
        degs = {self.mono_degree(m) for m in f}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop() if degs else 0

    def mono_mul(self, m1, m2):
        """(merged monomial, sign) or None if an odd variable repeats."""
        if not m1:
            return m2, 1
        if not m2:
            return m1, 1
        odd = self.odd
        o1 = [u for u in m1 if odd[u]]
        s = 0
        for v in m2:
            if odd[v]:
                k = bisect_right(o1, v)
                if k and o1[k - 1] == v:
                    return None
                s += len(o1) - k
        return tuple(sorted(m1 + m2)), _pm(s)

    def mul(self, f: Polynomial, g: Polynomial) -> Polynomial:
        out = Polynomial()
        for m1, c1 in f.items():
            for m2, c2 in g.items():
                r = self.mono_mul(m1, m2)
                if r is not None:
                    out.add_term(r[0], c1 * c2 * r[1])
        return out

    def prod(self, fs) -> Polynomial:
        out = Polynomial.const(1)
        for f in fs:
            out = self.mul(out, f)
        return out

    def twist(self, f: Polynomial, e: int = 1) -> Polynomial:
        """Negate the odd part when e is odd."""
        if not e & 1:
            return f
        return Polynomial({m: (-c if self.mono_degree(m) else c) for m, c in f.items()})

    def evaluate(self, f: Polynomial, point: dict) -> Fraction:
        """Value at a point given as {variable index: scalar}; odd variables must be 0."""
        total = Fraction(0)
        for m, c in f.items():
            v = c
            for u in m:
                v *= point.get(u, 0)
            total += v
        return total

    # coordinate functionals

    def x_functional(self, code: int, mu: int, nu: int) -> Polynomial:
        out = Polynomial()
        for k, f in enumerate(self.bases[code].maps):
            out.add_term((self.var(code, k),), f.entries[mu][nu])
        return out

    def x_degree(self, code: int, mu: int, nu: int) -> int:
        s, t = self.dq.source[code], self.dq.target[code]
        return (self.dq.degree[code] + self.space.parities(s)[mu]
                + self.space.parities(t)[nu]) & 1

    def commutant_relations(self, code: int):
        """The linear combinations Y[mu][nu] of X entries cut out by [iota, X] = 0."""
        dq, sp, p = self.dq, self.space, self.dq.p
        s, t = dq.source[code], dq.target[code]
        ps, pt = sp.parities(s), sp.parities(t)
        i_s, i_t = self.iota.at(s).entries, self.iota.at(t).entries
        d = self.iota.degree
        X = [[self.x_functional(code, mu, nu) for nu in range(sp.dim(t))]
             for mu in range(sp.dim(s))]
        out = {}
        for mu in range(sp.dim(s)):
            for nu in range(sp.dim(t)):
                y = Polynomial()
                e1 = _pm(ps[mu] + pt[nu] + d)
                e2 = _pm(p * (ps[mu] + pt[nu]))
                for rho in range(sp.dim(s)):
                    if i_s[mu][rho]:
                        y.iadd(X[rho][nu], e1 * i_s[mu][rho])
                for rho in range(sp.dim(t)):
                    if i_t[rho][nu]:
                        y.iadd(X[mu][rho], -e2 * i_t[rho][nu])
                out[(mu, nu)] = y
        return out

    # the BV operator

    def x_pair_closed_form(self, a: int, al: int, be: int, b: int, ga: int, de: int) -> Fraction:
        """Delta~(X^a[al][be] X^b[ga][de]) from the closed formula."""
        dq = self.dq
        ind = indicator(a, b, dq.p)
        if not ind:
            return Fraction(0)
        sp, d = self.space, self.iota.degree
        sa, sb = dq.source[a], dq.source[b]
        pa_s, pa_t = sp.parities(sa), sp.parities(dq.target[a])
        pal, pbe = pa_s[al], pa_t[be]
        val = Fraction(0)
        if ga == be:
            val += self.iota.inv(sa).entries[al][de]
        if al == de:
            val += _pm(d * (pal + pbe + 1)) * self.iota.inv(sb).entries[ga][be]
        if not val:
            return val
        return Fraction(ind, 2) * _pm(pbe + dq.degree[b] * (pal + pbe)) * val

    def delta_table_closed_form(self):
        """D[u, v] for u <= v, obtained by reading the closed formula at the
        coordinates where each basis vector is pinned to 1."""
        table = {}
        for a in self.dq.codes:
            b = a ^ 1
            if b < a:
                continue
            for k, (al, be) in enumerate(self.bases[a].free):
                for l, (ga, de) in enumerate(self.bases[b].free):
                    u, v = self.var(a, k), self.var(b, l)
                    val = self.x_pair_closed_form(a, al, be, b, ga, de)
                    if val:
                        table[(u, v)] = val
        return table

    def delta_table_inversion(self):
        """D[u, v] for u <= v from the inverse Gram matrix of the pairing."""
        table = {}
        d = self.iota.degree
        for a in original_codes(self.dq):
            A, B = self.bases[a], self.bases[a ^ 1]
            if not len(A):
                continue
            T = linalg.inverse(gram_matrix(self.iota, A, B))
            for uu, g in enumerate(B.maps):
                for vv in range(len(A)):
                    if not T[uu][vv]:
                        continue
                    ybar, ya = self.var(a ^ 1, uu), self.var(a, vv)
                    val = _pm(d + g.degree) * T[uu][vv]
                    # stored with the a-variable first
                    table[(ya, ybar)] = val * _pm(self.odd[ya] * self.odd[ybar])
        return table

    def pair_value(self, u: int, v: int) -> Fraction:
        if u <= v:
            return self.table.get((u, v), Fraction(0))
        return _pm(self.odd[u] * self.odd[v]) * self.table.get((v, u), Fraction(0))

    def bilinear(self, f: Polynomial, g: Polynomial) -> Fraction:
        """Delta~(f g) for linear f and g."""
        total = Fraction(0)
        for (u,), c in f.items():
            for (v,), e in g.items():
                total += c * e * self.pair_value(u, v)
        return total

    def bv_tilde(self, f: Polynomial) -> Polynomial:
        out = Polynomial()
        odd, table = self.odd, self.table
        for m, c in f.items():
            n = len(m)
            if n < 2:
                continue
            pre = [0]
            for u in m:
                pre.append(pre[-1] + odd[u])
            for i in range(n):
                for j in range(i + 1, n):
                    val = table.get((m[i], m[j]))
                    if not val:
                        continue
                    e = odd[m[i]] * pre[i] + odd[m[j]] * (pre[j] - odd[m[i]])
                    out.add_term(m[:i] + m[i + 1:j] + m[j + 1:], _pm(e) * c * val)
        return out

    def poisson(self, f: Polynomial, g: Polynomial) -> Polynomial:
        """{f, g} = D(fg) - D(f) g - (-1)^{fg} D(g) f, extended bilinearly."""
        out = Polynomial()
        for df, fp in self.parts(f).items():
            for dg, gp in self.parts(g).items():
                out.iadd(self.bv_tilde(self.mul(fp, gp)))
                out.iadd(self.mul(self.bv_tilde(fp), gp), -1)
                out.iadd(self.mul(self.bv_tilde(gp), fp), -_pm(df * dg))
        return out

    def poisson_fast(self, f: Polynomial, g: Polynomial) -> Polynomial:
        """The same bracket as a biderivation: pair one variable of each side."""
        out = Polynomial()
        odd = self.odd
        for m1, c1 in f.items():
            pre1 = [0]
            for u in m1:
                pre1.append(pre1[-1] + odd[u])
            d1 = pre1[-1]
            for m2, c2 in g.items():
                pre2 = _prefix(m2, odd)
                for i, u in enumerate(m1):
                    rest1 = m1[:i] + m1[i + 1:]
                    for j, v in enumerate(m2):
                        val = self.pair_value(u, v)
                        if not val:
                            continue
                        r = self.mono_mul(rest1, m2[:j] + m2[j + 1:])
                        if r is None:
                            continue
                        # sign of pulling u and v to the front of m1 m2
                        e = odd[u] * pre1[i] + odd[v] * (d1 - odd[u] + pre2[j])
                        out.add_term(r[0], _pm(e) * r[1] * c1 * c2 * val)
        return out

    def format_var(self, u: int) -> str:
        return self.vars[u].name


def _prefix(m, odd):
    pre = [0]
    for u in m:
        pre.append(pre[-1] + odd[u])
    return pre


def random_polynomial(ring: CoordRing, rng, max_degree: int = 3, terms: int = 3,
                      homogeneous: int | None = None) -> Polynomial:
    """A random polynomial with small integer coefficients."""
    n = len(ring.vars)
    out = Polynomial()
    if not n:
        return Polynomial.const(rng.randint(1, 3))
    for _ in range(terms * 4):
        if len(out) >= terms:
            break
        k = rng.randint(0, max_degree)
        m = tuple(sorted(rng.randrange(n) for _ in range(k)))
        r = ring.mono_mul(m, ())
        if any(ring.odd[u] and m.count(u) > 1 for u in m):
            continue
        if homogeneous is not None and ring.mono_degree(m) != homogeneous:
            continue
        out.add_term(r[0], rng.choice((-2, -1, 1, 2, 3)))
    return out
