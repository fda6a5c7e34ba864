import json
from fractions import Fraction

import pytest

from necklace_bv.quiver import a2, jordan, two_loop
from necklace_bv.verify import (ConfigError, Report, Setup, run_suite,
                                verify_bracket_intertwine, verify_cobracket_intertwine,
                                verify_main_theorem)


def test_report_json_and_counterexample():
    r = Report("x", "x = x", seed=3)
    r.record(True, False)
    r.record(False, True, lambda: "first")
    r.record(False, True, lambda: "second")
    assert not r.passed
    assert r.to_json() == {"name": "x", "identity": "x = x", "trials": 3, "failures": 2,
                           "nonzero": 2, "seed": 3, "counterexample": "first"}
    assert r.line().startswith("FAIL x:")
    assert "counterexample" not in Report("y", "y").to_json()


def test_theorem_hypotheses_enforced():
    s = Setup(jordan(), 0, Fraction(1, 2), iota_arrays=[[[0, 1], [2, 0]]])
    with pytest.raises(ConfigError, match="1/\\(2 hbar\\)"):
        verify_cobracket_intertwine(s, 5)
    with pytest.raises(ConfigError):
        verify_main_theorem(s, 5)
    # the bracket needs no relation between hbar and iota
    assert verify_bracket_intertwine(s, 20)[0].passed
    s1 = Setup(jordan(), 1, Fraction(4), iota_arrays=[[[1, 0], [0, 1]]])
    with pytest.raises(ConfigError, match="hbar\\^\\(-1/2\\)"):
        run_suite(s1, "theorem", 5)
    with pytest.raises(ConfigError, match="rational square"):
        Setup(jordan(), 1, Fraction(2)).rep()


def test_setup_validation():
    with pytest.raises(ConfigError):
        Setup(jordan(), 2)
    with pytest.raises(ConfigError):
        Setup(jordan(), 0, 0)
    with pytest.raises(ConfigError):
        Setup(a2(), 0, dims=((1, 1),))
    with pytest.raises(ConfigError, match="equal even and odd"):
        Setup(jordan(), 0, dims=((2, 1),)).rep()
    with pytest.raises(ConfigError):
        run_suite(Setup(jordan()), "nope")


def test_deterministic_reports():
    def go():
        s = Setup(two_loop(), 1, Fraction(1, 4), max_len=4)
        return json.dumps([r.to_json() for suite in ("axioms", "theorem")
                           for r in run_suite(s, suite, 15, seed=9)], sort_keys=True)
    assert go() == go()


@pytest.mark.parametrize("make,p,hbar,dims", [
    (jordan, 1, Fraction(1), ((2, 0),)),
    (a2, 0, Fraction(1, 2), ((1, 1), (1, 1))),
    (jordan, 0, Fraction(1, 2), ((1, 1),)),
])
def test_intertwining_examples(make, p, hbar, dims):
    s = Setup(make(), p, hbar, dims)
    assert verify_bracket_intertwine(s, 30, max_len=3)[0].passed
    assert verify_cobracket_intertwine(s, 30, max_len=4)[0].passed
    assert verify_main_theorem(s, 15, max_len=3)[0].passed


def test_nonvacuous_where_expected():
    s = Setup(two_loop(), 0, Fraction(1, 2), ((1, 1),), max_len=4)
    for r in run_suite(s, "theorem", 40, seed=1):
        assert r.passed and r.nonzero > 0, r.name


def test_suites_pass_on_small_configs():
    for s in (Setup(jordan(), 0), Setup(a2(), 1, Fraction(1, 4), ((1, 2), (2, 0)), max_len=4)):
        for suite in ("axioms", "bvsquare", "pairing", "commute", "theorem"):
            for r in run_suite(s, suite, 15, seed=4):
                assert r.passed, (suite, r.to_json())
