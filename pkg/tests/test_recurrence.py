import itertools

import pytest
from hypothesis import given, settings, strategies as st

from edgehosoya.chain import ChainSpec, build_graph, enumerate_chains, mirror, parse_spec, polyacene_spec
from edgehosoya.oracle import edge_hosoya_bruteforce, rooted_edge_poly, rooted_vertex_poly
from edgehosoya.poly import Polynomial as P
from edgehosoya.recurrence import (
    INITIAL_STATE,
    AnnelationCase,
    ChainState,
    annelate_edge_hosoya,
    annelate_rooted,
    case_sequence,
    chain_edge_hosoya,
    chain_states,
    step,
)

ONE = P([1])
C6 = P([6, 6, 6, 3])
C6_VERTEX = P([2, 2, 2])
C6_EDGE = P([1, 2, 2, 1])
NAPHTHALENE = P([11, 14, 18, 16, 6, 1])
CASES = list(AnnelationCase)


def test_annelate_edge_hosoya_examples(c6, naphthalene):
    # 1 + 2(x + x^2) + x^2 + 5 + 4x + 3x^2 + 3x^3
    assert annelate_edge_hosoya(ONE, ONE, ONE, ONE) == C6
    assert annelate_edge_hosoya(C6, C6_VERTEX, C6_VERTEX, C6_EDGE) == NAPHTHALENE
    assert edge_hosoya_bruteforce(c6) == C6
    assert edge_hosoya_bruteforce(naphthalene) == NAPHTHALENE


def test_annelate_rooted_examples():
    assert annelate_rooted("p", ONE, ONE, ONE) == C6_VERTEX
    assert annelate_rooted("qr", ONE, ONE, ONE) == C6_EDGE
    assert annelate_rooted("q", C6_VERTEX, C6_VERTEX, C6_EDGE) == P([2, 2, 3, 2, 2])
    with pytest.raises(ValueError):
        annelate_rooted("h", ONE, ONE, ONE)


def test_annelate_rooted_formulas():
    hu, hv, he = P([3, 1]), P([5, 7, 1]), P([11])
    x, x2 = P.monomial(1), P.monomial(2)
    near, far, edge = P([2, 1, 2]), P([2, 2, 1]), P([1, 2, 1, 1])
    assert annelate_rooted("p", hu, hv, he) == x * hu + near
    assert annelate_rooted("q", hu, hv, he) == x2 * hu + far
    assert annelate_rooted("r", hu, hv, he) == x2 * hv + far
    assert annelate_rooted("s", hu, hv, he) == x * hv + near
    assert annelate_rooted("pq", hu, hv, he) == x2 * hu + edge
    assert annelate_rooted("qr", hu, hv, he) == x2 * he + edge
    assert annelate_rooted("rs", hu, hv, he) == x2 * hv + edge
    assert annelate_edge_hosoya(C6, hu, hv, he) == (
        C6 + (x + x2) * (hu + hv) + x2 * he + P([5, 4, 3, 3])
    )


def test_annelation_on_a_non_chain_graph():
    """Fusing a hexagon onto a pendant-free edge of an arbitrary graph."""
    from edgehosoya.graph import Graph
    # square with a tail: 0-1-2-3-0, 3-4; fuse on edge (1, 2)
    g0 = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 0), (3, 4)))
    u, v = 1, 2
    g = Graph(9, g0.edges + ((u, 5), (5, 6), (6, 7), (7, 8), (8, v)))
    predicted = annelate_edge_hosoya(
        edge_hosoya_bruteforce(g0),
        rooted_vertex_poly(g0, u), rooted_vertex_poly(g0, v), rooted_edge_poly(g0, (u, v)),
    )
    assert predicted == edge_hosoya_bruteforce(g)
    args = (rooted_vertex_poly(g0, u), rooted_vertex_poly(g0, v), rooted_edge_poly(g0, (u, v)))
    for name, vertex in zip("pqrs", (5, 6, 7, 8)):
        assert annelate_rooted(name, *args) == rooted_vertex_poly(g, vertex)
    for name, edge in (("pq", (5, 6)), ("qr", (6, 7)), ("rs", (7, 8))):
        assert annelate_rooted(name, *args) == rooted_edge_poly(g, edge)


@pytest.mark.parametrize("case", CASES)
def test_first_step_is_case_independent(case):
    s = step(INITIAL_STATE, case)
    assert s == ChainState(1, C6, C6_VERTEX, C6_VERTEX, C6_EDGE)


def test_two_linear_steps_give_naphthalene():
    s = step(step(INITIAL_STATE, AnnelationCase.CASE2), AnnelationCase.CASE2)
    assert s.alpha == NAPHTHALENE
    assert s.beta == s.gamma


@given(st.lists(st.integers(0, 5), min_size=1, max_size=6))
def test_case2_keeps_beta_equal_gamma(coeffs):
    b = P(coeffs)
    s = step(ChainState(3, P([1]), b, b, P([1, 1])), AnnelationCase.CASE2)
    assert s.beta == s.gamma


def test_case_sequence():
    assert case_sequence(ChainSpec(1)) == [AnnelationCase.CASE2]
    assert case_sequence(parse_spec("4:LR")) == [
        AnnelationCase.CASE2, AnnelationCase.CASE1, AnnelationCase.CASE3, AnnelationCase.CASE2,
    ]
    assert AnnelationCase.from_turn("S") is AnnelationCase.CASE2
    with pytest.raises(ValueError):
        AnnelationCase.from_turn("X")


def test_chain_examples():
    assert chain_edge_hosoya(ChainSpec(1)) == C6
    assert chain_edge_hosoya(ChainSpec(2)) == NAPHTHALENE
    assert chain_edge_hosoya(parse_spec("4:SS")) == edge_hosoya_bruteforce(build_graph(parse_spec("4:SS")))


SPECS6 = [s for h in range(1, 7) for s in enumerate_chains(h)]


@pytest.mark.parametrize("spec", SPECS6, ids=str)
def test_rooted_states_match_oracle(spec):
    g = build_graph(spec)
    for i, state in enumerate(chain_states(spec), 1):
        pre = g.prefix(i)
        u, v = g.attachment_edges[i]
        assert state.h == i
        assert state.alpha == edge_hosoya_bruteforce(pre)
        assert state.beta == rooted_vertex_poly(pre, u)
        assert state.gamma == rooted_vertex_poly(pre, v)
        assert state.delta == rooted_edge_poly(pre, (u, v))
        assert state.alpha.coeff(0) == 5 * i + 1
        assert state.beta.coeff(0) == state.gamma.coeff(0) == 2
        assert state.delta.coeff(0) == 1


@pytest.mark.parametrize("spec", SPECS6, ids=str)
def test_first_and_last_case_do_not_matter(spec):
    ref = chain_edge_hosoya(spec)
    for first, last in itertools.product(CASES, CASES):
        assert chain_edge_hosoya(spec, first=first, last=last) == ref


@pytest.mark.parametrize("spec", SPECS6, ids=str)
def test_mirror_invariance_via_beta_gamma_swap(spec):
    """Case 1 <-> Case 3 with beta and gamma exchanged is the same chain."""
    swap = {AnnelationCase.CASE1: AnnelationCase.CASE3,
            AnnelationCase.CASE3: AnnelationCase.CASE1,
            AnnelationCase.CASE2: AnnelationCase.CASE2}
    a = list(chain_states(spec))
    b = list(chain_states(mirror(spec)))
    for sa, sb in zip(a, b):
        assert sa.alpha == sb.alpha
        assert (sa.beta, sa.gamma, sa.delta) == (sb.gamma, sb.beta, sb.delta)
    assert [swap[c] for c in case_sequence(spec)] == case_sequence(mirror(spec))


def test_degree_nondecreasing():
    degrees = [s.alpha.degree for s in chain_states(parse_spec("9:LLRSRLS"))]
    assert degrees == sorted(degrees)


@settings(max_examples=40, deadline=None)
@given(st.integers(8, 10).flatmap(
    lambda h: st.text(alphabet="LSR", min_size=h - 2, max_size=h - 2).map(lambda t: ChainSpec(h, t))))
def test_random_longer_chains_match_oracle(spec):
    assert chain_edge_hosoya(spec) == edge_hosoya_bruteforce(build_graph(spec))


def test_long_polyacene_degree():
    p = chain_edge_hosoya(polyacene_spec(100))
    assert p.degree == 201 and p.coeffs[-1] == 1 and p.coeff(0) == 501
