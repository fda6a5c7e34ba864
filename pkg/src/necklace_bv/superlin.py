"""Exact super linear algebra over the rationals.

Index convention: a map f: V_i -> V_j is stored as an array ``f[mu][nu]``
with ``f(v_mu) = sum_nu f[mu][nu] v_nu``, so rows index the source basis and
columns the target basis.  Under this convention the composite ``g o f`` is
the ordinary matrix product ``F . G``.

Every graded space lists its even basis vectors first, then the odd ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .quiver import DoubledQuiver, bar


class SuperLinError(ValueError):
    pass


def _pm(e: int) -> int:
    return -1 if e & 1 else 1


@dataclass(frozen=True)
class SuperSpace:
    """A graded vector space ``Q^{n_i|m_i}`` at every vertex."""
    dims: tuple

    def __post_init__(self):
        dims = tuple((int(n), int(m)) for n, m in self.dims)
        if any(n < 0 or m < 0 for n, m in dims):
            raise SuperLinError("dimensions must be nonnegative")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def uniform(cls, n_vertices: int, n: int, m: int) -> "SuperSpace":
        return cls(((n, m),) * n_vertices)

    def dim(self, v: int) -> int:
        return sum(self.dims[v])

    def parities(self, v: int) -> tuple:
        n, m = self.dims[v]
        return (0,) * n + (1,) * m

    def sdim(self, v: int) -> int:
        n, m = self.dims[v]
        return n - m

    def check_for(self, p: int):
        if p == 0:
            for v, (n, m) in enumerate(self.dims):
                if n != m:
                    raise SuperLinError(
                        f"p=0 needs equal even and odd dimension at every vertex "
                        f"(vertex {v} has {n}|{m})")


@dataclass(frozen=True)
class SuperMatrix:
    """A homogeneous linear map V_source -> V_target."""
    source: int
    target: int
    rows: tuple      # parities of the source basis
    cols: tuple      # parities of the target basis
    entries: tuple
    degree: int

    def __post_init__(self):
        ent = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(ent) != len(self.rows) or any(len(r) != len(self.cols) for r in ent):
            raise SuperLinError("entry array does not match the basis sizes")
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "degree", self.degree & 1)
        for mu, row in enumerate(ent):
            for nu, x in enumerate(row):
                if x and (self.rows[mu] + self.cols[nu] + self.degree) & 1:
                    raise SuperLinError(
                        f"entry ({mu},{nu}) is outside the degree {self.degree} pattern")

    @classmethod
    def build(cls, space: SuperSpace, source: int, target: int, entries,
              degree: int | None = None) -> "SuperMatrix":
        rows, cols = space.parities(source), space.parities(target)
        if degree is None:
            degree = infer_degree(rows, cols, entries)
        return cls(source, target, rows, cols, entries, degree)

    @classmethod
    def zero(cls, space, source, target, degree=0):
        return cls.build(space, source, target,
                         [[0] * space.dim(target) for _ in range(space.dim(source))], degree)

    @classmethod
    def identity(cls, space, v):
        return cls.build(space, v, v, linalg.identity(space.dim(v)), 0)

    @classmethod
    def elementary(cls, space, source, target, mu, nu):
        ent = [[0] * space.dim(target) for _ in range(space.dim(source))]
        ent[mu][nu] = 1
        return cls.build(space, source, target, ent)

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def scaled(self, c) -> "SuperMatrix":
        c = Fraction(c)
        return SuperMatrix(self.source, self.target, self.rows, self.cols,
                           [[c * x for x in r] for r in self.entries], self.degree)

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._same_shape(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.degree != self.degree:
            raise SuperLinError("cannot add maps of different degree")
        return SuperMatrix(self.source, self.target, self.rows, self.cols,
                           [[x + y for x, y in zip(r, s)]
                            for r, s in zip(self.entries, other.entries)], self.degree)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def _same_shape(self, other):
        if (self.source, self.target, self.rows, self.cols) != (
                other.source, other.target, other.rows, other.cols):
            raise SuperLinError("maps live in different Hom spaces")

    def vector(self):
        """Entries in row-major order."""
        return [x for row in self.entries for x in row]


def infer_degree(rows, cols, entries) -> int:
    degs = {(rows[mu] + cols[nu]) & 1
            for mu, row in enumerate(entries) for nu, x in enumerate(row) if x}
    if len(degs) > 1:
        raise SuperLinError("matrix is not homogeneous")
    return degs.pop() if degs else 0


def compose(g: SuperMatrix, f: SuperMatrix) -> SuperMatrix:
    """``g o f``: first f, then g."""
    if f.target != g.source or f.cols != g.rows:
        raise SuperLinError("maps are not composable")
    return SuperMatrix(f.source, g.target, f.rows, g.cols,
                       linalg.matmul(f.entries, g.entries), f.degree + g.degree)


def supertrace(f: SuperMatrix) -> Fraction:
    if f.source != f.target or f.rows != f.cols:
        raise SuperLinError("supertrace needs an endomorphism")
    return sum((_pm(par) * f.entries[i][i] for i, par in enumerate(f.rows)), Fraction(0))


def inverse(f: SuperMatrix) -> SuperMatrix:
    if f.source != f.target:
        raise SuperLinError("only endomorphisms are inverted here")
    try:
        inv = linalg.inverse(f.entries)
    except linalg.SingularMatrixError as exc:
        raise SuperLinError("map is not invertible") from exc
    return SuperMatrix(f.source, f.target, f.rows, f.cols, inv, f.degree)


@dataclass(frozen=True)
class IotaData:
    """Invertible maps iota^i of degree p+1 mod 2 with a common square lam*id."""
    space: SuperSpace
    p: int
    maps: tuple
    inverses: tuple = ()
    lam: Fraction = Fraction(0)

    def __post_init__(self):
        deg = (self.p + 1) & 1
        if len(self.maps) != len(self.space.dims):
            raise SuperLinError("need one iota per vertex")
        lam = None
        for v, m in enumerate(self.maps):
            if m.source != v or m.target != v:
                raise SuperLinError(f"iota at vertex {v} must be an endomorphism of V_{v}")
            if m.rows != self.space.parities(v):
                raise SuperLinError(f"iota at vertex {v} has the wrong size")
            if m.degree != deg and not m.is_zero():
                raise SuperLinError(f"iota at vertex {v} must have degree {deg}")
            if self.space.dim(v) == 0:
                continue
            sq = compose(m, m)
            c = sq.entries[0][0]
            if sq.entries != tuple(tuple(c if i == j else 0 for j in range(len(sq.cols)))
                                   for i in range(len(sq.rows))):
                raise SuperLinError(f"iota squared is not scalar at vertex {v}")
            if lam is None:
                lam = c
            elif c != lam:
                raise SuperLinError("iota squares to different scalars at different vertices")
        if lam == 0:
            raise SuperLinError("iota must be invertible")
        object.__setattr__(self, "maps", tuple(self.maps))
        object.__setattr__(self, "inverses", tuple(m.scaled(1 / lam) for m in self.maps))
        object.__setattr__(self, "lam", Fraction(lam if lam is not None else 1))

    @property
    def degree(self) -> int:
        return (self.p + 1) & 1

    def at(self, v: int) -> SuperMatrix:
        return self.maps[v]

    def inv(self, v: int) -> SuperMatrix:
        return self.inverses[v]

    def scalar(self):
        """The constant c when every iota^i is c*id, else None."""
        cs = set()
        for v, m in enumerate(self.maps):
            if m != SuperMatrix.identity(self.space, v).scaled(m.entries[0][0] if m.entries else 0):
                return None
            if m.entries:
                cs.add(m.entries[0][0])
        return cs.pop() if len(cs) == 1 else None


def rational_sqrt(x) -> Fraction | None:
    x = Fraction(x)
    if x < 0:
        return None
    a, b = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None


def default_iota(space: SuperSpace, p: int, hbar) -> IotaData:
    """The standard choice satisfying the intertwining hypotheses.

    p=0: the odd block map [[0, I], [lam I, 0]] with lam = 1/(2 hbar).
    p=1: hbar^(-1/2) * id, which needs hbar to be a rational square.
    """
    hbar = Fraction(hbar)
    if hbar == 0:
        raise SuperLinError("hbar must be nonzero")
    maps = []
    if p == 0:
        space.check_for(0)
        lam = 1 / (2 * hbar)
        for v, (n, _) in enumerate(space.dims):
            ent = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
            for k in range(n):
                ent[k][n + k] = Fraction(1)
                ent[n + k][k] = lam
            maps.append(SuperMatrix.build(space, v, v, ent, 1))
    else:
        q = rational_sqrt(hbar)
        if q is None or q == 0:
            raise SuperLinError("hbar must be a rational square")
        for v in range(len(space.dims)):
            maps.append(SuperMatrix.identity(space, v).scaled(1 / q))
    return IotaData(space, p, tuple(maps))


def iota_from_arrays(space: SuperSpace, p: int, arrays) -> IotaData:
    """Build iota from one square array per vertex (row = source index)."""
    maps = []
    for v, arr in enumerate(arrays):
        ent = [[Fraction(x) for x in row] for row in arr]
        maps.append(SuperMatrix.build(space, v, v, ent, (p + 1) & 1))
    return IotaData(space, p, tuple(maps))


def graded_commutator(iota: IotaData, f: SuperMatrix) -> SuperMatrix:
    """[iota, f] = iota o f - (-1)^{iota f} f o iota."""
    d = iota.degree
    left = compose(iota.at(f.target), f)
    right = compose(f, iota.at(f.source))
    return left - right.scaled(_pm(d * f.degree))


def b_iota(iota: IotaData, f: SuperMatrix, inverse_map: bool = False) -> SuperMatrix:
    """B_iota(f) = iota o f + (-1)^{iota f + iota} f o iota.

    With ``inverse_map`` the same expression with iota^{-1} in place of iota.
    """
    d = iota.degree
    get = iota.inv if inverse_map else iota.at
    left = compose(get(f.target), f)
    right = compose(f, get(f.source))
    return left + right.scaled(_pm(d * f.degree + d))


def hom_basis(space: SuperSpace, source: int, target: int):
    """Elementary matrices in row-major order."""
    return [SuperMatrix.elementary(space, source, target, mu, nu)
            for mu in range(space.dim(source)) for nu in range(space.dim(target))]


def commutant_system(space: SuperSpace, iota: IotaData, source: int, target: int):
    """Coefficient matrix of f -> [iota, f] on row-major coordinates."""
    cols = [graded_commutator(iota, e).vector() for e in hom_basis(space, source, target)]
    n = space.dim(source) * space.dim(target)
    return [[cols[k][r] for k in range(n)] for r in range(n)]


@dataclass(frozen=True)
class IntertwinerBasis:
    arrow: int
    maps: tuple          # homogeneous SuperMatrix basis of the commutant
    free: tuple          # (mu, nu) coordinate where each basis map is 1

    def __len__(self):
        return len(self.maps)


def intertwiner_basis(dq: DoubledQuiver, space: SuperSpace, iota: IotaData,
                      code: int) -> IntertwinerBasis:
    s, t = dq.source[code], dq.target[code]
    n_cols = space.dim(t)
    n = space.dim(s) * n_cols
    if n == 0:
        return IntertwinerBasis(code, (), ())
    system = commutant_system(space, iota, s, t)
    vecs, cols = linalg.nullspace(system, n, with_free=True)
    maps, free = [], []
    for v, k in zip(vecs, cols):
        ent = [v[r * n_cols:(r + 1) * n_cols] for r in range(space.dim(s))]
        maps.append(SuperMatrix.build(space, s, t, ent))
        free.append(divmod(k, n_cols))
    return IntertwinerBasis(code, tuple(maps), tuple(free))


def span_equal(maps_a, maps_b) -> bool:
    """Whether two lists of maps in one Hom space have the same span."""
    va = [m.vector() for m in maps_a if not m.is_zero()]
    vb = [m.vector() for m in maps_b if not m.is_zero()]
    ra, rb = linalg.rank(va), linalg.rank(vb)
    return ra == rb == linalg.rank(va + vb)


def pairing(iota: IotaData, phi: SuperMatrix, psi: SuperMatrix) -> Fraction:
    """str(iota o phi o psi) for phi: V_s -> V_t and psi: V_t -> V_s."""
    if phi.source != psi.target or phi.target != psi.source:
        raise SuperLinError("pairing needs maps along dual arrows")
    return supertrace(compose(iota.at(phi.target), compose(phi, psi)))


def gram_matrix(iota: IotaData, basis_a: IntertwinerBasis, basis_abar: IntertwinerBasis):
    """G[v][w] = pairing(f_v, g_w) with f spanning H^a and g spanning H^abar."""
    return [[pairing(iota, f, g) for g in basis_abar.maps] for f in basis_a.maps]


def t_closed_form(dq: DoubledQuiver, space: SuperSpace, iota: IotaData, code: int):
    """Components t[alpha, beta, gamma, delta] of the inverse pairing for arrow a.

    alpha, delta index V_t(a) and beta, gamma index V_s(a), so
    ``t = sum t[..] h^abar{alpha}_{beta} (x) h^a{gamma}_{delta}``.
    Only nonzero components are returned.
    """
    s, t = dq.source[code], dq.target[code]
    i_t, i_s = iota.inv(t).entries, iota.inv(s).entries
    par_t, par_s = space.parities(t), space.parities(s)
    d = iota.degree
    out = {}
    half = Fraction(1, 2)
    for al in range(space.dim(t)):
        for be in range(space.dim(s)):
            sign2 = _pm(d * (par_t[al] + par_s[be] + 1))
            for ga in range(space.dim(s)):
                for de in range(space.dim(t)):
                    val = Fraction(0)
                    if ga == be:
                        val += i_t[al][de]
                    if al == de:
                        val += sign2 * i_s[ga][be]
                    if val:
                        out[(al, be, ga, de)] = half * _pm(par_t[al]) * val
    return out


def t_from_inversion(iota: IotaData, basis_a: IntertwinerBasis,
                     basis_abar: IntertwinerBasis):
    """Same components obtained by inverting the Gram matrix.

    With T = G^{-1}, ``t = sum_{u,v} T[u][v] g_u (x) f_v``.
    """
    G = gram_matrix(iota, basis_a, basis_abar)
    try:
        T = linalg.inverse(G)
    except linalg.SingularMatrixError as exc:
        raise SuperLinError("the pairing is degenerate for this iota") from exc
    out = {}
    for u, g in enumerate(basis_abar.maps):
        for v, f in enumerate(basis_a.maps):
            c = T[u][v]
            if not c:
                continue
            for al, grow in enumerate(g.entries):
                for be, gx in enumerate(grow):
                    if not gx:
                        continue
                    for ga, frow in enumerate(f.entries):
                        for de, fx in enumerate(frow):
                            if fx:
                                key = (al, be, ga, de)
                                out[key] = out.get(key, 0) + c * gx * fx
    return {k: v for k, v in out.items() if v}


def snake_contract(iota: IotaData, space: SuperSpace, dq: DoubledQuiver, code: int,
                   t: dict, psi: SuperMatrix) -> SuperMatrix:
    """Contract t against the pairing with psi in H^abar; returns a map like psi."""
    s, tv = dq.source[code], dq.target[code]
    ent = [[Fraction(0)] * space.dim(s) for _ in range(space.dim(tv))]
    cache = {}
    for (al, be, ga, de), c in t.items():
        if (ga, de) not in cache:
            cache[(ga, de)] = pairing(iota, SuperMatrix.elementary(space, s, tv, ga, de), psi)
        w = cache[(ga, de)]
        if w:
            ent[al][be] += c * w
    return SuperMatrix.build(space, tv, s, ent)


def t_slices_intertwine(dq, space, iota, code, t: dict) -> bool:
    """Both legs of t commute with iota (checked slice by slice)."""
    s, tv = dq.source[code], dq.target[code]
    first, second = {}, {}
    for (al, be, ga, de), c in t.items():
        first.setdefault((ga, de), {})[(al, be)] = c
        second.setdefault((al, be), {})[(ga, de)] = c
    for groups, src, tgt in ((first, tv, s), (second, s, tv)):
        for comp in groups.values():
            ent = [[Fraction(0)] * space.dim(tgt) for _ in range(space.dim(src))]
            for (mu, nu), c in comp.items():
                ent[mu][nu] = c
            if not graded_commutator(iota, SuperMatrix.build(space, src, tgt, ent)).is_zero():
                return False
    return True


def original_codes(dq: DoubledQuiver):
    return [c for c in dq.codes if not c & 1]


def dual_code(code: int) -> int:
    return bar(code)
