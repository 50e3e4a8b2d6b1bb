# Naphthalene three ways.
#
# Two fused hexagons: 10 vertices, 11 edges. We count edge pairs by
# line-graph distance, then get the same polynomial from the annelation
# recurrence and from the polyacene closed form.

from edgehosoya import (
    build_graph,
    chain_edge_hosoya,
    edge_hosoya_bruteforce,
    edge_hosoya_closed,
    edge_hyper_wiener,
    edge_wiener,
    parse_spec,
)
from edgehosoya.oracle import edge_distance_sums

spec = parse_spec("2")
g = build_graph(spec)
print("vertices", g.num_vertices, "edges", g.num_edges)

brute = edge_hosoya_bruteforce(g)
rec = chain_edge_hosoya(spec)
closed = edge_hosoya_closed(2)
print("oracle     ", brute)
print("recurrence ", rec)
print("closed form", closed)
assert brute == rec == closed

# indices from derivatives at x = 1, checked against direct double sums
s1, s2 = edge_distance_sums(g)
print("W_e  =", edge_wiener(brute), " (half of", s1, "over ordered pairs)")
print("WW_e =", edge_hyper_wiener(brute), " (quarter of", s1, "+", s2, ")")
