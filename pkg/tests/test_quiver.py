import pytest

from necklace_bv.quiver import (Quiver, QuiverError, a2, bar, double, format_quiver,
                                indicator, jordan, parse_quiver, two_loop)


def test_double_jordan():
    dq = double(jordan(), 0)
    assert dq.names == ("a", "~a")
    assert dq.source == dq.target == (0, 0)


def test_double_a2_swaps_endpoints():
    dq = double(a2(), 1)
    a, abar = dq.code("a"), dq.code("~a")
    assert (dq.source[a], dq.target[a]) == (0, 1)
    assert (dq.source[abar], dq.target[abar]) == (1, 0)


def test_empty_quiver():
    dq = double(Quiver((), ()), 0)
    assert list(dq.codes) == [] and dq.n_vertices == 0


def test_indicator_values():
    assert indicator(0, 1, 0) == 1
    assert indicator(1, 0, 0) == -1
    assert indicator(1, 0, 1) == 1
    for p in (0, 1):
        assert indicator(0, 0, p) == 0


@pytest.mark.parametrize("make", [jordan, a2, two_loop])
@pytest.mark.parametrize("p", [0, 1])
def test_arrow_invariants(make, p):
    dq = double(make(), p)
    for a in dq.codes:
        assert bar(bar(a)) == a
        assert dq.degree[a] + dq.degree[bar(a)] == p
        for b in dq.codes:
            assert indicator(a, b, p) == (-1) ** (p + 1) * indicator(b, a, p)


def test_parallel_arrows_and_loops_allowed():
    q = Quiver(("u", "v"), (("a", "u", "v"), ("b", "u", "v"), ("c", "v", "v")))
    assert len(double(q).names) == 6


def test_text_round_trip():
    text = "vertices: u v\narrow a u v\narrow b v v\n"
    q = parse_quiver(text)
    assert format_quiver(q) == text
    assert parse_quiver("# comment\nvertices: u v  # two\n\narrow a u v\narrow b v v\n") == q


@pytest.mark.parametrize("text", [
    "arrow a u v\n",
    "vertices: u\narrow a u w\n",
    "vertices: u\narrow a u\n",
    "vertices: u\nvertices: v\n",
    "vertices: u\nedge a u u\n",
    "vertices: u\narrow a u u\narrow a u u\n",
    "vertices: u\narrow ~a u u\n",
])
def test_bad_quiver_text(text):
    with pytest.raises(QuiverError):
        parse_quiver(text)
