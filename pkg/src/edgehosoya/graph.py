"""Plain undirected simple graphs on vertices ``0 .. n-1``.

Used by the brute-force oracle for both benzenoid chains and arbitrary
external graphs. The text exchange format is one ``u v`` pair per line,
0-based; blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

__all__ = ["Graph", "format_edge_list", "parse_edge_list", "random_connected_graph"]


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        seen = set()
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], num_vertices: int | None = None):
        edges = [tuple(e) for e in edges]
        if num_vertices is None:
            num_vertices = 1 + max((max(e) for e in edges), default=-1)
        return cls(num_vertices, tuple(edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map both orientations of every edge to its position in ``edges``."""
        idx = {}
        for i, (u, v) in enumerate(self.edges):
            idx[u, v] = i
            idx[v, u] = i
        return idx

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.num_vertices


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def parse_edge_list(text: str) -> Graph:
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: vertex ids must be integers") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: vertex ids must be non-negative")
        edges.append((u, v))
    return Graph.from_edges(edges)


def random_connected_graph(n: int, extra_edges: int, rng: random.Random) -> Graph:
    """Uniform random labelled spanning tree on ``n`` vertices plus extra edges.

    The tree comes from an Aldous-Broder walk on the complete graph. Up to
    ``extra_edges`` further distinct edges are then sampled uniformly.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    edges = set()
    current = rng.randrange(n)
    visited = {current}
    while len(visited) < n:
        nxt = rng.randrange(n - 1)
        if nxt >= current:
            nxt += 1
        if nxt not in visited:
            visited.add(nxt)
            edges.add((min(current, nxt), max(current, nxt)))
        current = nxt
    room = n * (n - 1) // 2 - len(edges)
    target = len(edges) + min(extra_edges, room)
    while len(edges) < target:
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(edges)))
