import networkx as nx
import pytest

from edgehosoya.chain import build_graph, parse_spec
from edgehosoya.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.num_vertices))
    G.add_edges_from(g.edges)
    return G


def nx_edge_distance_counts(g: Graph) -> list[int]:
    """Unordered edge pairs by line-graph distance, via networkx."""
    L = nx.line_graph(to_nx(g))
    counts: dict[int, int] = {}
    nodes = list(L.nodes)
    pos = {n: i for i, n in enumerate(nodes)}
    for a, lengths in nx.all_pairs_shortest_path_length(L):
        for b, d in lengths.items():
            if pos[a] <= pos[b]:
                counts[d] = counts.get(d, 0) + 1
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


@pytest.fixture
def k2():
    return Graph(2, ((0, 1),))


@pytest.fixture
def path3():
    return Graph(3, ((0, 1), (1, 2)))


@pytest.fixture
def c6():
    return build_graph(parse_spec("1"))


@pytest.fixture
def naphthalene():
    return build_graph(parse_spec("2"))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py::" in rep.nodeid and rep.when == "call":
                name = rep.nodeid.split("::")[-1]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {name}")
