import pytest
from hypothesis import given, strategies as st

from edgehosoya.chain import build_graph, enumerate_chains
from edgehosoya.indices import edge_hyper_wiener, edge_wiener, from_hat, index_report, to_hat
from edgehosoya.oracle import edge_distance_sums, edge_hosoya_bruteforce, hat_edge_hosoya_bruteforce
from edgehosoya.poly import CoefficientOverflow, Polynomial as P, fixed_width
from edgehosoya.polyacene import edge_hosoya_closed

K2, C6 = P([1]), P([6, 6, 6, 3])
L2 = P([11, 14, 18, 16, 6, 1])


def test_edge_wiener_examples():
    assert edge_wiener(K2) == 0
    assert edge_wiener(C6) == 27
    assert edge_wiener(L2) == 127


def test_edge_hyper_wiener_examples():
    assert edge_hyper_wiener(K2) == 0
    assert edge_hyper_wiener(C6) == 42
    assert edge_hyper_wiener(L2) == 239


def test_to_from_hat_examples(naphthalene):
    assert to_hat(C6, 6) == P([12, 6, 3])
    assert to_hat(K2, 1) == K2
    assert to_hat(L2, 11) == P([25, 18, 16, 6, 1]) == hat_edge_hosoya_bruteforce(naphthalene)
    assert from_hat(P([12, 6, 3]), 6) == C6
    assert from_hat(K2, 1) == K2
    with pytest.raises(ValueError):
        to_hat(C6, 5)
    with pytest.raises(ValueError):
        from_hat(P([3]), 6)


@pytest.mark.parametrize("spec", [s for h in range(1, 8) for s in enumerate_chains(h)], ids=str)
def test_indices_match_direct_double_sums(spec):
    g = build_graph(spec)
    p = edge_hosoya_bruteforce(g)
    s1, s2 = edge_distance_sums(g)
    assert 2 * edge_wiener(p) == s1
    assert 4 * edge_hyper_wiener(p) == s1 + s2
    m = g.num_edges
    assert from_hat(to_hat(p, m), m) == p


@given(st.integers(1, 30), st.lists(st.integers(0, 40), max_size=6))
def test_hat_round_trip(m, rest):
    q = P([m + 3] + rest)
    assert to_hat(from_hat(q, m), m) == q


def test_index_report():
    r = index_report(L2)
    assert (r.edge_count, r.degree, r.edge_wiener, r.edge_hyper_wiener) == (11, 5, 127, 239)
    assert r.coefficients == L2


def test_index_width_overflow():
    p = edge_hosoya_closed(50000)
    with fixed_width(64, 64):
        assert edge_wiener(p) < 2**64
        with pytest.raises(CoefficientOverflow):
            edge_hyper_wiener(p)
    q = edge_hosoya_closed(40000)
    with fixed_width(64, 64):
        assert edge_hyper_wiener(q) == 10667424020533860000
