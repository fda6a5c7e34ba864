"""Randomised exact verifiers for every identity the package implements.

Each verifier returns a ``Report``.  A trial passes when the two sides agree
exactly; ``nonzero`` counts the trials in which the compared quantity was
not trivially zero on both sides, so vacuous passes are visible.

Randomness: every suite draws from ``random.Random(f"{seed}:{name}")`` and
each trial gets its own derived seed, so a failing trial can be replayed on
its own and suites do not depend on the order they run in.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import bialgebra as bi
from .necklace import Necklace, NecklaceSum, TensorSum, cobracket_word
from .quiver import DoubledQuiver, Quiver, double
from .repbv import CoordRing, random_polynomial
from .sampling import random_closed_word, random_necklace
from .superlin import (IotaData, SuperLinError, SuperSpace, b_iota, default_iota,
                       gram_matrix, hom_basis, original_codes, snake_contract, span_equal,
                       t_closed_form, t_from_inversion, t_slices_intertwine)
from . import linalg
from .symbv import (BVElement, bracket_part, bv_delta, cobracket_part, monomial,
                    seven_term_defect)
from .syntax import (format_bv_element, format_necklace_sum, format_polynomial,
                     format_tensor, format_word)
from .tracemap import TraceMap


class ConfigError(ValueError):
    pass


@dataclass
class Report:
    name: str
    identity: str
    trials: int = 0
    failures: int = 0
    seed: int = 0
    nonzero: int = 0
    first_counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, nonzero: bool, counterexample=None):
        self.trials += 1
        if nonzero:
            self.nonzero += 1
        if not ok:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = (counterexample() if callable(counterexample)
                                             else counterexample)

    def to_json(self) -> dict:
        out = {"name": self.name, "identity": self.identity, "trials": self.trials,
               "failures": self.failures, "nonzero": self.nonzero, "seed": self.seed}
        if self.first_counterexample is not None:
            out["counterexample"] = self.first_counterexample
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.name}: {self.trials} trials, {self.failures} failures, "
                f"{self.nonzero} nonzero")


def _trial_rngs(seed: int, name: str, trials: int):
    master = random.Random(f"{seed}:{name}")
    for _ in range(trials):
        s = master.getrandbits(32)
        yield s, random.Random(s)


@dataclass
class Setup:
    """One configuration: quiver, parity, hbar, graded spaces and iota."""
    quiver: Quiver
    p: int = 0
    hbar: Fraction = Fraction(1, 2)
    dims: tuple | None = None
    iota_arrays: list | None = None
    max_len: int = 6
    dq: DoubledQuiver = field(init=False)

    def __post_init__(self):
        if self.p not in (0, 1):
            raise ConfigError("p must be 0 or 1")
        self.hbar = Fraction(self.hbar)
        if self.hbar == 0:
            raise ConfigError("hbar must be nonzero")
        self.dq = double(self.quiver, self.p)
        if self.dims is None:
            self.dims = ((1, 1),) * self.dq.n_vertices
        if len(self.dims) != self.dq.n_vertices:
            raise ConfigError("need dimensions for every vertex")
        self._rep = None

    @property
    def space(self) -> SuperSpace:
        return SuperSpace(self.dims)

    def rep(self):
        """(ring, trace map), built on first use; raises ConfigError."""
        if self._rep is None:
            space = self.space
            try:
                space.check_for(self.p)
                if self.iota_arrays is None:
                    iota = default_iota(space, self.p, self.hbar)
                else:
                    from .superlin import iota_from_arrays
                    iota = iota_from_arrays(space, self.p, self.iota_arrays)
            except ValueError as exc:
                # SuperLinError and malformed iota arrays alike
                raise ConfigError(str(exc)) from None
            ring = CoordRing(self.dq, space, iota)
            self._rep = (ring, TraceMap(ring))
        return self._rep

    @property
    def iota(self) -> IotaData:
        return self.rep()[0].iota

    def check_theorem_hypotheses(self):
        iota = self.iota
        if self.p == 0:
            if iota.lam != 1 / (2 * self.hbar):
                raise ConfigError(
                    f"iota squares to {iota.lam}, but the trace map needs 1/(2 hbar) = "
                    f"{1 / (2 * self.hbar)}")
        else:
            c = iota.scalar()
            if c is None or c <= 0 or c * c * self.hbar != 1:
                raise ConfigError("for p=1 iota must be hbar^(-1/2) times the identity")

    def words(self, x: Necklace) -> str:
        return format_word(self.dq, x)


# necklace side

def _nk(setup, rng, **kw):
    return random_necklace(setup.dq, rng, kw.pop("max_len", setup.max_len), **kw)


def verify_bialgebra_axioms(setup: Setup, trials: int = 200, seed: int = 0):
    dq = setup.dq
    fmt_n = lambda s: format_necklace_sum(dq, s)
    fmt_t = lambda t: format_tensor(dq, t)
    specs = [
        ("antisymmetry", "br(x,y) = (-1)^(xy+p+1) br(y,x)", 2,
         lambda xs: bi.antisymmetry_defect(dq, *xs), fmt_n),
        ("cosymmetry", "tau delta(x) = (-1)^(p+1) delta(x)", 1,
         lambda xs: bi.cosymmetry_defect(dq, *xs), fmt_t),
        ("jacobi", "cyclic sum br(br(x,y),z) = 0", 3,
         lambda xs: bi.jacobi_defect(dq, *xs), fmt_n),
        ("cojacobi", "cyclic sum (delta x 1) delta(x) = 0", 1,
         lambda xs: bi.cojacobi_defect(dq, *xs), None),
        ("involutivity", "br(delta(x)) = 0", 1,
         lambda xs: bi.involutivity_defect(dq, *xs), fmt_n),
        ("cocycle", "delta(br(x,y)) = ad_x delta(y) +- ad_y delta(x)", 2,
         lambda xs: bi.cocycle_defect(dq, *xs), fmt_t),
    ]
    reports = []
    for name, ident, arity, defect, fmt in specs:
        rep = Report(name, ident, seed=seed)
        for ts, rng in _trial_rngs(seed, name, trials):
            xs = [_nk(setup, rng) for _ in range(arity)]
            d = defect(xs)
            rep.record(d.is_zero(), _nontrivial(dq, name, xs),
                       lambda: f"trial seed {ts}: inputs " + ", ".join(
                           setup.words(x) for x in xs) + f"; defect {fmt(d) if fmt else d!r}")
        reports.append(rep)
    return reports


def _nontrivial(dq, name, xs) -> bool:
    """Whether the identity had something nonzero to compare."""
    if name in ("antisymmetry", "cocycle"):
        return bool(bi.br(dq, xs[0], xs[1]))
    if name == "jacobi":
        return any(bi.br(dq, a, b) for a in xs for b in xs)
    return bool(cobracket_word(dq, xs[0].word))


def random_bv_element(setup: Setup, rng, max_factors: int = 3, terms: int = 2,
                      max_len: int | None = None) -> BVElement:
    out = BVElement()
    for _ in range(terms):
        k = rng.randint(0, max_factors)
        xs = [_nk(setup, rng, max_len=max_len or setup.max_len) for _ in range(k)]
        out.iadd(monomial(xs, setup.p), rng.choice((-2, -1, 1, 2, 3)))
    return out


def random_homogeneous_single(setup, rng, max_len=None) -> BVElement:
    """A single necklace as a BV element (always homogeneous)."""
    return BVElement.generator(_nk(setup, rng, max_len=max_len or setup.max_len))


def verify_bv_square_zero(setup: Setup, trials: int = 200, seed: int = 0,
                          hbars=None, max_len: int = 4):
    dq = setup.dq
    reports = []
    for hb in hbars or [setup.hbar]:
        rep = Report(f"bv_square[hbar={hb}]", "Delta_hbar^2 = 0 on Sym^<=3", seed=seed)
        for ts, rng in _trial_rngs(seed, rep.name, trials):
            k = rng.randint(0, 3)
            xs = [_nk(setup, rng, max_len=max_len) for _ in range(k)]
            e = monomial(xs, setup.p)
            d1 = bv_delta(dq, e, hb)
            d2 = bv_delta(dq, d1, hb)
            rep.record(d2.is_zero(), not d1.is_zero(),
                       lambda: f"trial seed {ts}: e = {format_bv_element(dq, e)}; "
                               f"Delta^2 e = {format_bv_element(dq, d2)}")
        reports.append(rep)
    return reports


def verify_seven_term(setup: Setup, trials: int = 100, seed: int = 0, max_len: int = 4):
    dq = setup.dq
    rep = Report("seven_term", "seven term identity for Delta_hbar", seed=seed)
    for ts, rng in _trial_rngs(seed, rep.name, trials):
        x, y, z = (random_homogeneous_single(setup, rng, max_len) for _ in range(3))
        d = seven_term_defect(dq, x, y, z, setup.hbar)
        lhs = bv_delta(dq, x.mul(y, setup.p).mul(z, setup.p), setup.hbar)
        rep.record(d.is_zero(), not lhs.is_zero(),
                   lambda: f"trial seed {ts}: defect {format_bv_element(dq, d)}")
    return [rep]


# representation side

def verify_pairing(setup: Setup):
    """Gram non-degeneracy, t cross-oracle with snake identity and membership,
    and the B_iota image, once per arrow."""
    ring, _ = setup.rep()
    dq, space, iota = setup.dq, ring.space, ring.iota
    gram = Report("pairing_nondegenerate", "Gram matrix of str(iota phi psi) is invertible")
    tco = Report("t_cross_oracle", "closed form t = inverse Gram t, lies in the commutant, "
                 "satisfies the snake identity")
    img = Report("b_iota_image", "span B_iota(H^a) = commutant H^a_iota")
    for a in original_codes(dq):
        A, B = ring.bases[a], ring.bases[a ^ 1]
        G = gram_matrix(iota, A, B)
        ok = len(A) == len(B) and linalg.rank(G) == len(A)
        gram.record(ok, bool(len(A)), f"arrow {dq.names[a]}: Gram rank "
                                      f"{linalg.rank(G)} of {len(A)}x{len(B)}")
        tc = t_closed_form(dq, space, iota, a)
        try:
            ti = t_from_inversion(iota, A, B)
        except SuperLinError:
            ti = None  # degenerate pairing, already reported above
        snake = all(snake_contract(iota, space, dq, a, tc, g) == g for g in B.maps)
        memb = t_slices_intertwine(dq, space, iota, a, tc)
        tco.record(ti == tc and snake and memb, bool(tc),
                   f"arrow {dq.names[a]}: equal={ti == tc} snake={snake} membership={memb}")
    for c in dq.codes:
        s, t = dq.source[c], dq.target[c]
        images = [b_iota(iota, e) for e in hom_basis(space, s, t)]
        ok = span_equal(images, ring.bases[c].maps)
        img.record(ok, bool(len(ring.bases[c])), f"arrow {dq.names[c]}")
    return [gram, tco, img]


def verify_bv_tilde_square(setup: Setup, trials: int = 200, seed: int = 0,
                           max_degree: int = 3):
    ring, _ = setup.rep()
    rep = Report("bv_tilde_square", "Delta~^2 = 0 on polynomials of degree <= 3", seed=seed)
    cross = Report("bv_tilde_cross_oracle",
                   "closed-form Delta~ table equals the Gram-inversion table")
    cross.record(ring.table == ring.delta_table_inversion(), bool(ring.table),
                 "tables differ")
    for ts, rng in _trial_rngs(seed, rep.name, trials):
        f = random_polynomial(ring, rng, max_degree, 3)
        d1 = ring.bv_tilde(f)
        d2 = ring.bv_tilde(d1)
        rep.record(d2.is_zero(), not d1.is_zero(),
                   lambda: f"trial seed {ts}: f = {format_polynomial(ring, f)}; "
                           f"Delta~^2 f = {format_polynomial(ring, d2)}")
    return [cross, rep]


def verify_commutation(setup: Setup):
    ring, tm = setup.rep()
    alg, dq = tm.alg, setup.dq
    rep = Report("commute_iota", "[M_iota, M_a] = 0 and [M_iota, M_e] = 0")
    for c in dq.codes:
        M = alg.m_arrow(c)
        rep.record(alg.commutator_with_iota(M).is_zero(), not M.is_zero(),
                   f"arrow {dq.names[c]}")
    for v in range(dq.n_vertices):
        rep.record(alg.commutator_with_iota(alg.m_vertex(v)).is_zero(), True,
                   f"vertex {dq.vertex_name(v)}")
    return [rep]


def _random_closed(setup, rng, max_len):
    for _ in range(100):
        got = random_closed_word(setup.dq, rng.randint(1, max_len), rng)
        if got is not None:
            return got
    raise ConfigError("the quiver has no closed paths")


def verify_path_identities(setup: Setup, trials: int = 200, seed: int = 0,
                           max_len: int = 4):
    """Trace vanishing for p=0, B_{M_iota^-1}(M_iota M_A) = 2 M_A, and
    rotation invariance of phi, on random closed paths."""
    ring, tm = setup.rep()
    alg, dq = tm.alg, setup.dq
    out = []
    if setup.p == 0:
        van = Report("trace_vanishing", "(1 (x) str)(M_A) = 0 for p = 0", seed=seed)
        for ts, rng in _trial_rngs(seed, van.name, trials):
            w, _ = _random_closed(setup, rng, max_len)
            M = alg.m_path(w)
            s = alg.supertrace(M)
            van.record(s.is_zero(), not M.is_zero(),
                       lambda: f"trial seed {ts}: path {' '.join(dq.names[c] for c in w)}")
        out.append(van)
    bm = Report("b_m_identity", "B_{M_iota^-1}(M_iota M_A) = 2 M_A", seed=seed)
    rot = Report("phi_rotation", "phi(A_k) = (-1)^eps phi(A_l)", seed=seed)
    for ts, rng in _trial_rngs(seed, bm.name, trials):
        n = rng.randint(0, max_len)
        if n == 0:
            v = rng.randrange(dq.n_vertices)
            w, MA = (), alg.m_vertex(v)
            lhs = alg.b_iota_inv(alg.mul(alg.m_iota(v), MA))
        else:
            w, _ = _random_closed(setup, rng, max_len)
            k = rng.randrange(len(w))
            w = w[k:] + w[:k]
            MA = alg.m_path(w)
            lhs = alg.b_iota_inv(alg.mul(alg.m_iota(MA.source), MA))
        bm.record(lhs == MA.scaled(2), not MA.is_zero(),
                  lambda: f"trial seed {ts}: path {' '.join(dq.names[c] for c in w)}")
    for ts, rng in _trial_rngs(seed, rot.name, trials):
        w, _ = _random_closed(setup, rng, max_len)
        k = rng.randrange(len(w))
        w = w[k:] + w[:k]
        direct = tm.phi_word(w)
        canon = tm.phi_rotated(w)
        rot.record(direct == canon, not direct.is_zero(),
                   lambda: f"trial seed {ts}: path {' '.join(dq.names[c] for c in w)}")
    out += [bm, rot]
    return out


def verify_bracket_intertwine(setup: Setup, trials: int = 100, seed: int = 0,
                              max_len: int = 4):
    ring, tm = setup.rep()
    dq = setup.dq
    rep = Report("bracket_intertwine", "phi(br~(x y)) = {phi x, phi y}", seed=seed)
    for ts, rng in _trial_rngs(seed, rep.name, trials):
        x, y = _nk(setup, rng, max_len=max_len), _nk(setup, rng, max_len=max_len)
        lhs = tm.phi_sym(bracket_part(dq, monomial([x, y], setup.p)))
        rhs = ring.poisson_fast(tm.phi(x), tm.phi(y))
        rep.record(lhs == rhs, not (lhs.is_zero() and rhs.is_zero()),
                   lambda: _diff_message(ring, ts, f"x = {setup.words(x)}, y = {setup.words(y)}",
                                         lhs, rhs))
    return [rep]


def verify_cobracket_intertwine(setup: Setup, trials: int = 100, seed: int = 0,
                                max_len: int = 6):
    ring, tm = setup.rep()
    setup.check_theorem_hypotheses()
    dq = setup.dq
    rep = Report("cobracket_intertwine", "phi(hbar delta~(x)) = Delta~(phi x)", seed=seed)
    for ts, rng in _trial_rngs(seed, rep.name, trials):
        x = _nk(setup, rng, max_len=max_len)
        lhs = tm.phi_sym(cobracket_part(dq, BVElement.generator(x))).scaled(setup.hbar)
        rhs = ring.bv_tilde(tm.phi(x))
        rep.record(lhs == rhs, not (lhs.is_zero() and rhs.is_zero()),
                   lambda: _diff_message(ring, ts, f"x = {setup.words(x)}", lhs, rhs))
    return [rep]


def verify_main_theorem(setup: Setup, trials: int = 50, seed: int = 0, max_len: int = 4):
    ring, tm = setup.rep()
    setup.check_theorem_hypotheses()
    dq = setup.dq
    rep = Report("main_theorem", "phi(Delta_hbar e) = Delta~(phi e) on Sym^<=2", seed=seed)
    for ts, rng in _trial_rngs(seed, rep.name, trials):
        e = random_bv_element(setup, rng, max_factors=2, terms=2, max_len=max_len)
        lhs = tm.phi_sym(bv_delta(dq, e, setup.hbar))
        rhs = ring.bv_tilde(tm.phi_sym(e))
        rep.record(lhs == rhs, not (lhs.is_zero() and rhs.is_zero()),
                   lambda: _diff_message(ring, ts, f"e = {format_bv_element(dq, e)}", lhs, rhs))
    return [rep]


def _diff_message(ring, ts, inputs, lhs, rhs) -> str:
    return (f"trial seed {ts}: {inputs}; lhs = {format_polynomial(ring, lhs)}; "
            f"rhs = {format_polynomial(ring, rhs)}; "
            f"difference = {format_polynomial(ring, lhs - rhs)}")


SUITES = ("axioms", "bvsquare", "pairing", "commute", "theorem")


def run_suite(setup: Setup, suite: str, trials: int = 200, seed: int = 0):
    """All reports of one named suite."""
    if suite == "axioms":
        return (verify_bialgebra_axioms(setup, trials, seed)
                + verify_seven_term(setup, trials, seed, min(setup.max_len, 4)))
    if suite == "bvsquare":
        return (verify_bv_square_zero(setup, trials, seed, max_len=min(setup.max_len, 4))
                + verify_bv_tilde_square(setup, trials, seed))
    if suite == "pairing":
        return verify_pairing(setup)
    if suite == "commute":
        return (verify_commutation(setup)
                + verify_path_identities(setup, trials, seed, min(setup.max_len, 4)))
    if suite == "theorem":
        setup.rep()
        setup.check_theorem_hypotheses()
        L = min(setup.max_len, 4)
        return (verify_bracket_intertwine(setup, trials, seed, L)
                + verify_cobracket_intertwine(setup, trials, seed, setup.max_len)
                + verify_main_theorem(setup, min(trials, 50), seed, L))
    raise ConfigError(f"unknown suite {suite!r}")


__all__ = ["Report", "Setup", "ConfigError", "run_suite", "SUITES",
           "verify_bialgebra_axioms", "verify_bv_square_zero", "verify_seven_term",
           "verify_pairing", "verify_bv_tilde_square", "verify_commutation",
           "verify_path_identities", "verify_bracket_intertwine",
           "verify_cobracket_intertwine", "verify_main_theorem",
           "NecklaceSum", "TensorSum"]
