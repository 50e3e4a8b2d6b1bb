# Watching the recurrence fold over a kinked chain.
#
# After each annelation the state holds the chain polynomial (alpha) and the
# rooted polynomials at the two ends (beta, gamma) and at the edge (delta)
# where the next hexagon will be fused.

from edgehosoya import build_graph, chain_states, parse_spec
from edgehosoya.oracle import rooted_edge_poly, rooted_vertex_poly
from edgehosoya.recurrence import case_sequence

spec = parse_spec("5:LSR")
g = build_graph(spec)
print("cases:", [c.name for c in case_sequence(spec)])

for state, case in zip(chain_states(spec), case_sequence(spec)):
    i = state.h
    u, v = g.attachment_edges[i]
    pre = g.prefix(i)
    print(f"\nh={i} ({case.name})")
    print("  alpha", state.alpha)
    print("  beta ", state.beta)
    print("  gamma", state.gamma)
    print("  delta", state.delta)
    # the tracked polynomials are exactly the oracle's rooted ones
    assert state.beta == rooted_vertex_poly(pre, u)
    assert state.gamma == rooted_vertex_poly(pre, v)
    assert state.delta == rooted_edge_poly(pre, (u, v))
