"""Acceptance criteria, all checked at exact rational equality.

Each test records a one-line PASS/FAIL verdict; the lines are printed in the
pytest terminal summary, or directly when this file is run as a script.
Trial counts are the required minimums or more.  ``nonzero`` counts trials
whose compared quantities were not both zero.
"""

import random
import time
from fractions import Fraction

import pytest

from necklace_bv.necklace import bracket, cobracket, necklace_of
from necklace_bv.quiver import a2, double, jordan, two_loop
from necklace_bv.verify import (Setup, verify_bialgebra_axioms, verify_bracket_intertwine,
                                verify_bv_square_zero, verify_bv_tilde_square,
                                verify_cobracket_intertwine, verify_commutation,
                                verify_main_theorem, verify_pairing, verify_path_identities,
                                verify_seven_term)

from helpers import sample_word
from oracle import (engine_sum_as_dict, engine_tensor_as_dict, naive_bracket,
                    naive_cobracket)

VERDICTS = []
QUIVERS = {"jordan": jordan, "a2": a2, "two-loop": two_loop}
SEED = 2024


def verdict(number, title, reports, extra=""):
    trials = sum(r.trials for r in reports)
    failures = sum(r.failures for r in reports)
    nonzero = sum(r.nonzero for r in reports)
    ok = failures == 0 and trials > 0
    line = (f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {trials} trials, "
            f"{failures} failures, {nonzero} nonzero{extra}")
    VERDICTS.append(line)
    bad = [r.to_json() for r in reports if not r.passed]
    return ok, bad


def all_configs():
    for name in QUIVERS:
        for p in (0, 1):
            yield name, p


# representation side configurations: (quiver, p, hbar, dims per vertex)
SMALL_DIMS_P0 = [(1, 1), (2, 2)]
SMALL_DIMS_P1 = [(1, 0), (2, 0), (3, 0), (2, 1), (1, 2), (1, 1)]


def rep_configs():
    for name, make in QUIVERS.items():
        nv = len(make().vertices)
        for d in SMALL_DIMS_P0:
            yield Setup(make(), 0, Fraction(1, 2), (d,) * nv)
        yield Setup(make(), 0, Fraction(1, 3), ((1, 1), (2, 2))[:nv] if nv == 2 else ((2, 2),))
        for d in SMALL_DIMS_P1:
            yield Setup(make(), 1, Fraction(4, 9) if d == (2, 1) else Fraction(1), (d,) * nv)
        if nv == 2:
            yield Setup(make(), 1, Fraction(1, 4), ((2, 1), (1, 0)))


def theorem_configs():
    """dims up to 2|2 for p=0 and total dimension 2 for p=1."""
    return [
        Setup(jordan(), 0, Fraction(1, 2), ((1, 1),)),
        Setup(jordan(), 0, Fraction(1, 4), ((2, 2),)),
        Setup(a2(), 0, Fraction(1, 2), ((1, 1), (1, 1))),
        Setup(a2(), 0, Fraction(1, 2), ((1, 1), (2, 2))),
        Setup(two_loop(), 0, Fraction(1, 2), ((1, 1),)),
        Setup(jordan(), 1, Fraction(1), ((2, 0),)),
        Setup(jordan(), 1, Fraction(1, 4), ((1, 1),)),
        Setup(a2(), 1, Fraction(4), ((1, 1), (2, 0))),
        Setup(two_loop(), 1, Fraction(1), ((1, 1),)),
        Setup(two_loop(), 1, Fraction(9, 4), ((2, 0),)),
    ]


def check(ok_bad):
    ok, bad = ok_bad
    assert ok, bad


def test_01_bialgebra_axioms():
    reports = []
    for name, p in all_configs():
        reports += verify_bialgebra_axioms(Setup(QUIVERS[name](), p, max_len=6), 200, SEED)
    per_axiom = {}
    for r in reports:
        per_axiom[r.name] = per_axiom.get(r.name, 0) + r.nonzero
    extra = "; nonzero by axiom " + ", ".join(f"{k}={v}" for k, v in per_axiom.items())
    check(verdict(1, "bialgebra axioms (1)-(6), 3 quivers x 2 parities, length <= 6",
                  reports, extra))
    assert all(per_axiom.values())


def test_02_bv_square_necklace_side():
    reports = []
    for name, p in all_configs():
        reports += verify_bv_square_zero(Setup(QUIVERS[name](), p), 200, SEED,
                                         hbars=[Fraction(1, 2), Fraction(1)], max_len=4)
    check(verdict(2, "Delta_hbar^2 = 0 on Sym^<=3, hbar in {1/2, 1}", reports))


def test_03_seven_term():
    reports = []
    for name, p in all_configs():
        reports += verify_seven_term(Setup(QUIVERS[name](), p, Fraction(1, 2)), 100, SEED, 4)
    check(verdict(3, "seven term identity, homogeneous triples", reports))


def _pairing_reports():
    if not hasattr(_pairing_reports, "cache"):
        out = {"pairing_nondegenerate": [], "t_cross_oracle": [], "b_iota_image": []}
        for s in rep_configs():
            for r in verify_pairing(s):
                out[r.name].append(r)
        _pairing_reports.cache = out
    return _pairing_reports.cache


def test_04_pairing_nondegenerate():
    check(verdict(4, "Gram matrix invertible for every arrow, dims <= 2|2 / 3",
                  _pairing_reports()["pairing_nondegenerate"]))


def test_05_t_cross_oracle():
    check(verdict(5, "t closed form = Gram inversion, snake identity, membership",
                  _pairing_reports()["t_cross_oracle"]))


def test_06_b_iota_image():
    check(verdict(6, "span B_iota(H^a) = H^a_iota for every arrow",
                  _pairing_reports()["b_iota_image"]))


def test_07_commutation():
    reports = []
    for s in rep_configs():
        reports += verify_commutation(s)
    check(verdict(7, "[M_iota, M_a] = 0 and [M_iota, M_e] = 0 entrywise", reports))


def test_08_bv_tilde_square():
    reports = []
    for s in rep_configs():
        reports += verify_bv_tilde_square(s, 60, SEED, max_degree=3)
    check(verdict(8, "Delta~^2 = 0 on random polynomials of degree <= 3", reports))


def _by_parity(reports_by_p):
    return "; nonzero by parity " + ", ".join(
        f"p={p}: {sum(r.nonzero for r in rs)}" for p, rs in sorted(reports_by_p.items()))


def _theorem_check(number, title, fn, trials, **kw):
    by_p = {0: [], 1: []}
    for s in theorem_configs():
        by_p[s.p] += fn(s, trials, SEED, **kw)
    reports = by_p[0] + by_p[1]
    check(verdict(number, title, reports, _by_parity(by_p)))
    # identities must be exercised non-trivially at both parities
    for rs in by_p.values():
        assert sum(r.nonzero for r in rs) > 0


def test_09_bracket_intertwining():
    _theorem_check(9, "phi(br~(x y)) = {phi x, phi y}, lengths <= 4",
                   verify_bracket_intertwine, 100, max_len=4)


def test_10_cobracket_intertwining():
    _theorem_check(10, "phi(hbar delta~(x)) = Delta~(phi x), lam = 1/(2 hbar) or iota = hbar^-1/2",
                   verify_cobracket_intertwine, 100, max_len=5)


def test_11_main_theorem():
    _theorem_check(11, "phi Delta_hbar = Delta~ phi on Sym^<=2", verify_main_theorem, 50,
                   max_len=4)


def test_12_trace_vanishing():
    reports = []
    for s in theorem_configs():
        if s.p == 0:
            reports += [r for r in verify_path_identities(s, 100, SEED, 5)
                        if r.name == "trace_vanishing"]
    check(verdict(12, "p=0: (1 (x) str)(M_A) = 0 on random closed paths", reports))


class _Tally:
    """Minimal report-like counter for criterion 13."""

    def __init__(self, name):
        self.name, self.trials, self.failures, self.nonzero = name, 0, 0, 0
        self.first = None

    @property
    def passed(self):
        return self.failures == 0

    def to_json(self):
        return {"name": self.name, "failures": self.failures, "counterexample": self.first}


def test_13_naive_oracle():
    tallies = []
    for name, p in all_configs():
        dq = double(QUIVERS[name](), p)
        rng = random.Random(f"{SEED}:{name}:{p}")
        br, co = _Tally(f"bracket {name} p={p}"), _Tally(f"cobracket {name} p={p}")
        for _ in range(200):
            A, B = sample_word(dq, rng, 5), sample_word(dq, rng, 5)
            got = engine_sum_as_dict(bracket(dq, necklace_of(dq, A), necklace_of(dq, B)))
            want = naive_bracket(dq, A, B)
            br.trials += 1
            br.nonzero += bool(got or want)
            if got != want:
                br.failures += 1
                br.first = br.first or (A, B)
            got = engine_tensor_as_dict(cobracket(dq, necklace_of(dq, A)))
            want = naive_cobracket(dq, A)
            co.trials += 1
            co.nonzero += bool(got or want)
            if got != want:
                co.failures += 1
                co.first = co.first or A
        tallies += [br, co]
    check(verdict(13, "canonical engine = naive non-canonicalising evaluator", tallies))


if __name__ == "__main__":
    t0 = time.time()
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(VERDICTS))
    print(f"{13 - failed}/13 criteria passed in {time.time() - t0:.1f}s")
