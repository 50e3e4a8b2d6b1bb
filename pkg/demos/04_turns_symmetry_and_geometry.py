# All chains of six hexagons: how many distinct polynomials, and which
# turn strings overlap themselves in the plane.

from collections import defaultdict

from edgehosoya import ChainSpec, build_graph, chain_edge_hosoya, enumerate_chains
from edgehosoya.chain import mirror, reverse
from edgehosoya.indices import edge_wiener

groups = defaultdict(list)
for spec in enumerate_chains(6):
    groups[chain_edge_hosoya(spec)].append(spec.turns)

print(len(enumerate_chains(6)), "turn strings,", len(groups), "distinct polynomials")
for poly, turns in sorted(groups.items(), key=lambda kv: edge_wiener(kv[0])):
    print(f"W_e={edge_wiener(poly):>4}  {' '.join(turns)}")

spec = enumerate_chains(6)[5]
print("\n", spec, "mirror", mirror(spec), "reverse", reverse(spec))

for turns in ("LLLL", "LLLR", "SSSS"):
    g = build_graph(ChainSpec(6, turns))
    print(turns, "overlap warnings:", list(g.warnings) or "none")
