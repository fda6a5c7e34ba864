import random
from fractions import Fraction

import pytest

from necklace_bv.quiver import a2, double, jordan, two_loop
from necklace_bv.repbv import CoordRing, Polynomial, random_polynomial
from necklace_bv.superlin import SuperSpace, default_iota, t_closed_form

CONFIGS = [
    (jordan, 0, Fraction(1, 2), ((1, 1),)),
    (jordan, 0, Fraction(1, 3), ((2, 2),)),
    (jordan, 1, Fraction(1), ((2, 0),)),
    (jordan, 1, Fraction(4), ((1, 1),)),
    (a2, 0, Fraction(1, 2), ((1, 1), (1, 1))),
    (a2, 1, Fraction(1, 4), ((2, 1), (1, 0))),
    (two_loop, 0, Fraction(1, 2), ((1, 1),)),
    (two_loop, 1, Fraction(1), ((1, 1),)),
]


def make_ring(make, p, hbar, dims):
    dq = double(make(), p)
    sp = SuperSpace(dims)
    return CoordRing(dq, sp, default_iota(sp, p, hbar))


@pytest.fixture(params=CONFIGS, ids=lambda c: f"{c[0].__name__}-p{c[1]}-{c[3]}")
def ring(request):
    return make_ring(*request.param)


def test_full_matrix_space_for_identity_iota():
    r = make_ring(jordan, 1, 1, ((2, 0),))
    assert len(r.vars) == 8
    names = {r.format_var(u) for u in range(len(r.vars))}
    assert "y[a,0]" in names and "y[~a,3]" in names
    for mu in range(2):
        for nu in range(2):
            x = r.x_functional(0, mu, nu)
            assert len(x) == 1 and list(x.values()) == [1]


def test_two_variables_per_arrow_at_p0():
    r = make_ring(jordan, 0, Fraction(1, 2), ((1, 1),))
    assert [len(r.bases[c]) for c in (0, 1)] == [2, 2]


def test_substitution_recovers_intertwiners(ring):
    rng = random.Random(0)
    for c in ring.dq.codes:
        H = ring.bases[c]
        coeffs = [Fraction(rng.randint(-4, 4)) for _ in H.maps]
        point = {ring.var(c, k): coeffs[k] for k in range(len(H))}
        s, t = ring.dq.source[c], ring.dq.target[c]
        for mu in range(ring.space.dim(s)):
            for nu in range(ring.space.dim(t)):
                want = sum((a * f.entries[mu][nu] for a, f in zip(coeffs, H.maps)), Fraction(0))
                assert ring.evaluate(ring.x_functional(c, mu, nu), point) == want


def test_commutant_relations_vanish(ring):
    for c in ring.dq.codes:
        assert all(y.is_zero() for y in ring.commutant_relations(c).values())


def test_variable_degrees(ring):
    for v in ring.vars:
        f = ring.bases[v.code].maps[v.index]
        assert v.degree == (f.degree + ring.dq.degree[v.code]) % 2
        mu, nu = ring.bases[v.code].free[v.index]
        assert ring.x_degree(v.code, mu, nu) == v.degree


def test_delta_low_degree_and_non_dual(ring):
    assert ring.bv_tilde(Polynomial.const(3)).is_zero()
    for u in range(len(ring.vars)):
        assert ring.bv_tilde(Polynomial({(u,): 1})).is_zero()
    dq = ring.dq
    for a in dq.codes:
        for b in dq.codes:
            if b == a ^ 1:
                continue
            for u in range(len(ring.bases[a])):
                for v in range(len(ring.bases[b])):
                    y = ring.mul(ring.y(a, u), ring.y(b, v))
                    assert ring.bv_tilde(y).is_zero()


def test_pair_formula_on_all_coordinates(ring):
    """The closed formula holds at every (mu, nu), not only at the free
    coordinates used to fill the table."""
    dq, sp = ring.dq, ring.space
    for a in dq.codes:
        b = a ^ 1
        sa, ta = dq.source[a], dq.target[a]
        for al in range(sp.dim(sa)):
            for be in range(sp.dim(ta)):
                Xa = ring.x_functional(a, al, be)
                for ga in range(sp.dim(ta)):
                    for de in range(sp.dim(sa)):
                        Xb = ring.x_functional(b, ga, de)
                        assert ring.bilinear(Xa, Xb) == ring.x_pair_closed_form(a, al, be, b, ga, de)


def test_pair_value_matches_t_components(ring):
    dq, sp, d = ring.dq, ring.space, ring.iota.degree
    for a in range(0, len(dq.names), 2):
        t = t_closed_form(dq, sp, ring.iota, a)
        s, tv = dq.source[a], dq.target[a]
        ps, pt = sp.parities(s), sp.parities(tv)
        for mu in range(sp.dim(tv)):
            for nu in range(sp.dim(s)):
                Xbar = ring.x_functional(a + 1, mu, nu)
                for rho in range(sp.dim(s)):
                    for sig in range(sp.dim(tv)):
                        X = ring.x_functional(a, rho, sig)
                        want = (-1) ** (d + pt[mu] + ps[nu]) * t.get((mu, nu, rho, sig), 0)
                        assert ring.bilinear(Xbar, X) == want


def test_tables_agree(ring):
    assert ring.table == ring.delta_table_inversion()


def test_delta_square_and_parity(ring):
    rng = random.Random(1)
    for _ in range(40):
        f = random_polynomial(ring, rng, 4, 4, homogeneous=rng.randint(0, 1))
        d = ring.bv_tilde(f)
        assert ring.bv_tilde(d).is_zero()
        if not f.is_zero() and not d.is_zero():
            assert ring.degree(d) != ring.degree(f)


def test_mono_mul_odd_square(ring):
    odd = [u for u in range(len(ring.vars)) if ring.odd[u]]
    if odd:
        assert ring.mono_mul((odd[0],), (odd[0],)) is None
    if len(odd) >= 2:
        u, v = odd[:2]
        assert ring.mul(ring.y(*ring.vars[u][:2]), ring.y(*ring.vars[v][:2])) == \
            ring.mul(ring.y(*ring.vars[v][:2]), ring.y(*ring.vars[u][:2])).scaled(-1)


def test_poisson(ring):
    rng = random.Random(2)
    one = Polynomial.const(1)
    for _ in range(20):
        f, g, h = (random_polynomial(ring, rng, 2, 2, homogeneous=rng.randint(0, 1))
                   for _ in range(3))
        assert ring.poisson(one, g).is_zero()
        assert ring.poisson(f, g) == ring.poisson_fast(f, g)
        if any(x.is_zero() for x in (f, g, h)):
            continue
        df, dg = ring.degree(f), ring.degree(g)
        # {f, g h} = {f, g} h + (-1)^{(f+1) g} g {f, h}
        lhs = ring.poisson_fast(f, ring.mul(g, h))
        rhs = ring.mul(ring.poisson_fast(f, g), h)
        rhs.iadd(ring.mul(g, ring.poisson_fast(f, h)), (-1) ** ((df + 1) * dg))
        assert lhs == rhs
    for u in range(len(ring.vars)):
        for v in range(len(ring.vars)):
            yu, yv = Polynomial({(u,): 1}), Polynomial({(v,): 1})
            assert ring.poisson(yu, yv) == ring.bv_tilde(ring.mul(yu, yv))


def test_rejects_mismatched_iota():
    sp = SuperSpace(((1, 1),))
    with pytest.raises(ValueError):
        CoordRing(double(jordan(), 1), sp, default_iota(sp, 0, 1))
