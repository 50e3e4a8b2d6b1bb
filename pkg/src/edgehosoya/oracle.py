"""Definition-level distance polynomials by breadth-first search.

Everything here is computed straight from the distance definitions with no
structural shortcuts, so it serves as ground truth for the recurrences and
the closed forms. Costs are quadratic to cubic in the number of edges, which
is fine up to a few hundred edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph
from .poly import Polynomial

__all__ = [
    "DisconnectedGraph",
    "LineGraph",
    "line_graph",
    "bfs_distances",
    "distance_histogram",
    "edge_hosoya_bruteforce",
    "hat_edge_hosoya_bruteforce",
    "vertex_hosoya_bruteforce",
    "rooted_vertex_poly",
    "rooted_edge_poly",
    "edge_distance_sums",
]


class DisconnectedGraph(ValueError):
    pass


@dataclass(frozen=True)
class LineGraph:
    """Line graph of ``source``; node ``i`` stands for ``source.edges[i]``."""

    source: Graph
    graph: Graph

    @property
    def num_nodes(self) -> int:
        return self.graph.num_vertices

    def edge_of(self, node: int) -> tuple[int, int]:
        return self.source.edges[node]

    def node_of(self, edge: tuple[int, int]) -> int:
        return self.source.edge_index[tuple(edge)]


def line_graph(g: Graph) -> LineGraph:
    if g.num_edges == 0:
        raise ValueError("line graph of an edgeless graph is empty")
    incident: list[list[int]] = [[] for _ in range(g.num_vertices)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for star in incident:
        for a in range(len(star)):
            for b in range(a + 1, len(star)):
                i, j = star[a], star[b]
                pairs.add((min(i, j), max(i, j)))
    return LineGraph(g, Graph(g.num_edges, tuple(sorted(pairs))))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distance from ``source`` to every vertex; -1 if unreachable."""
    dist = [-1] * g.num_vertices
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _all_distances(g: Graph) -> list[list[int]]:
    rows = [bfs_distances(g, s) for s in range(g.num_vertices)]
    if rows and min(rows[0]) < 0:
        raise DisconnectedGraph("graph is not connected")
    return rows


def _histogram_poly(counts: Sequence[int]) -> Polynomial:
    return Polynomial(counts).require_counts()


def distance_histogram(g: Graph) -> list[int]:
    """Unordered vertex pairs by distance; index 0 counts the vertices."""
    counts: list[int] = []
    for s, row in enumerate(_all_distances(g)):
        for d in row[s:]:
            if d >= len(counts):
                counts.extend([0] * (d + 1 - len(counts)))
            counts[d] += 1
    return counts


def vertex_hosoya_bruteforce(g: Graph) -> Polynomial:
    return _histogram_poly(distance_histogram(g))


def edge_hosoya_bruteforce(g: Graph) -> Polynomial:
    if not g.is_connected():
        raise DisconnectedGraph("graph is not connected")
    return vertex_hosoya_bruteforce(line_graph(g).graph)


def hat_edge_hosoya_bruteforce(g: Graph) -> Polynomial:
    """Edge pairs by smallest endpoint-to-endpoint distance, self-pairs included."""
    if g.num_edges == 0:
        raise ValueError("graph has no edges")
    dist = _all_distances(g)
    edges = g.edges
    counts: list[int] = []
    for i, (a, b) in enumerate(edges):
        da, db = dist[a], dist[b]
        for x, y in edges[i:]:
            d = min(da[x], da[y], db[x], db[y])
            if d >= len(counts):
                counts.extend([0] * (d + 1 - len(counts)))
            counts[d] += 1
    return _histogram_poly(counts)


def rooted_vertex_poly(g: Graph, v: int) -> Polynomial:
    """Edges counted by distance from vertex ``v`` (nearest endpoint)."""
    if not 0 <= v < g.num_vertices:
        raise ValueError(f"vertex {v} not in graph")
    dist = bfs_distances(g, v)
    if min(dist) < 0:
        raise DisconnectedGraph("graph is not connected")
    counts = [0] * (max(dist) + 1)
    for a, b in g.edges:
        counts[min(dist[a], dist[b])] += 1
    return _histogram_poly(counts)


def rooted_edge_poly(g: Graph, e: tuple[int, int]) -> Polynomial:
    """Edges counted by line-graph distance from edge ``e``."""
    try:
        node = g.edge_index[tuple(e)]
    except KeyError:
        raise ValueError(f"edge {tuple(e)} not in graph") from None
    dist = bfs_distances(line_graph(g).graph, node)
    if min(dist) < 0:
        raise DisconnectedGraph("graph is not connected")
    counts = [0] * (max(dist) + 1)
    for d in dist:
        counts[d] += 1
    return _histogram_poly(counts)


def edge_distance_sums(g: Graph) -> tuple[int, int]:
    """``(sum d(e,f), sum d(e,f)**2)`` over ordered pairs of edges."""
    lg = line_graph(g).graph
    s1 = s2 = 0
    for row in _all_distances(lg):
        for d in row:
            s1 += d
            s2 += d * d
    return s1, s2
