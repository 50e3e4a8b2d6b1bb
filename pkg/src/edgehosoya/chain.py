"""Benzenoid chains: turn-sequence encoding and explicit graphs.

A chain of ``h`` hexagons is written ``"h:turns"`` where ``turns`` holds one
letter per inner hexagon (``h - 2`` of them). Each letter says where the next
hexagon is fused relative to the edge the current one was entered through:

* ``S`` -- the opposite edge, so the hexagon is linearly connected;
* ``L`` / ``R`` -- one of the two kinked positions. They are mirror images.

Geometry uses scaled axial coordinates on the hexagonal lattice. A hexagon
with axial centre ``(q, r)`` sits at ``3 * (q, r)`` and its corner ``j`` at
centre plus ``CORNER_OFFSETS[j]``. Its side ``j`` (corners ``j`` and
``j + 1``) is shared with the neighbour in lattice direction ``j``.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass, field

from .graph import Graph

__all__ = [
    "TURNS",
    "ChainSpec",
    "BenzenoidGraph",
    "ChainSpecError",
    "parse_spec",
    "build_graph",
    "enumerate_chains",
    "mirror",
    "reverse",
    "polyacene_spec",
    "ENUMERATION_CAP",
]

TURNS = "LSR"

# Change of exit side relative to the entry direction. The sign of L vs R
# is a convention; together with the (u, v) orientation below it makes
# L/S/R line up with annelation cases 1/2/3.
_TURN_DELTA = {"L": -1, "S": 0, "R": 1}

CORNER_OFFSETS = ((2, -1), (1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2))
DIRECTIONS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

ENUMERATION_CAP = int(os.environ.get("EDGEHOSOYA_ENUM_CAP", "12"))

_SPEC_RE = re.compile(r"^\s*(\d+)\s*(?::\s*([A-Za-z]*)\s*)?$")


class ChainSpecError(ValueError):
    pass


@dataclass(frozen=True)
class ChainSpec:
    h: int
    turns: str = ""

    def __post_init__(self):
        if self.h < 1:
            raise ChainSpecError(f"hexagon count must be at least 1, got {self.h}")
        want = max(self.h - 2, 0)
        if len(self.turns) != want:
            raise ChainSpecError(
                f"chain with {self.h} hexagons needs {want} turns, got {len(self.turns)}"
            )
        bad = set(self.turns) - set(TURNS)
        if bad:
            raise ChainSpecError(f"illegal turn character(s): {''.join(sorted(bad))}")

    def __str__(self) -> str:
        return f"{self.h}:{self.turns}"

    @property
    def is_linear(self) -> bool:
        return set(self.turns) <= {"S"}


def parse_spec(text: str) -> ChainSpec:
    """Parse ``"h"`` or ``"h:turns"``, e.g. ``"4:SS"``."""
    m = _SPEC_RE.match(text)
    if not m:
        raise ChainSpecError(f"malformed chain spec {text!r}")
    return ChainSpec(int(m.group(1)), m.group(2) or "")


def polyacene_spec(h: int) -> ChainSpec:
    return ChainSpec(h, "S" * max(h - 2, 0))


def mirror(spec: ChainSpec) -> ChainSpec:
    return ChainSpec(spec.h, spec.turns.translate(str.maketrans("LR", "RL")))


def reverse(spec: ChainSpec) -> ChainSpec:
    return ChainSpec(spec.h, spec.turns[::-1])


def enumerate_chains(h: int, cap: int | None = None) -> list[ChainSpec]:
    """All turn strings for ``h`` hexagons, lexicographic in ``L < R < S``."""
    cap = ENUMERATION_CAP if cap is None else cap
    if h < 1:
        raise ChainSpecError("h must be at least 1")
    if h > cap:
        raise ChainSpecError(f"h={h} exceeds the enumeration cap {cap}")
    return [
        ChainSpec(h, "".join(t))
        for t in itertools.product(sorted(TURNS), repeat=max(h - 2, 0))
    ]


@dataclass(frozen=True)
class BenzenoidGraph(Graph):
    """Chain graph with its lattice embedding.

    ``attachment_edges[i]`` is the ordered edge ``(u, v)`` of hexagon ``i``
    where hexagon ``i + 1`` is fused; for the last hexagon it is the linear
    (``S``) position where a further hexagon would extend the chain.
    ``attachment_edges[0]`` is the single edge hexagon 1 grows from.
    """

    spec: ChainSpec = field(default=ChainSpec(1))
    coords: tuple[tuple[int, int], ...] = ()
    hexagons: tuple[tuple[int, ...], ...] = ()
    attachment_edges: tuple[tuple[int, int], ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def h(self) -> int:
        return self.spec.h

    @property
    def attachment_edge(self) -> tuple[int, int]:
        return self.attachment_edges[-1]

    def prefix(self, i: int) -> Graph:
        """Subgraph formed by the first ``i`` hexagons."""
        if not 1 <= i <= self.h:
            raise ValueError(f"prefix length {i} out of range")
        return Graph(4 * i + 2, self.edges[: 5 * i + 1])


def _corner(center: tuple[int, int], j: int) -> tuple[int, int]:
    dx, dy = CORNER_OFFSETS[j % 6]
    return center[0] + dx, center[1] + dy


def build_graph(spec: ChainSpec) -> BenzenoidGraph:
    """Explicit graph for ``spec``; 4h+2 vertices and 5h+1 edges.

    Hexagon 1 takes vertices 0-5 in corner order and hexagon 2 is fused on
    its side 0. Every later hexagon shares exactly the two endpoints of the
    attachment edge and appends its new vertices ``p, q, r, s`` in cycle
    order from ``u``. Coordinates are never used to merge vertices, so
    chains that overlap in the plane still get the correct abstract graph;
    an overlap only adds a warning.
    """
    center = (0, 0)
    coords = [_corner(center, j) for j in range(6)]
    edges = [(j, (j + 1) % 6) for j in range(6)]
    hexagons = [tuple(range(6))]
    # hexagon 1 regarded as fused on the edge (corner 4, corner 3)
    attachments = [(4, 3)]
    direction = 0
    u, v = 0, 1
    attachments.append((u, v))
    owner = {c: 0 for c in coords}
    warnings = []

    for i in range(1, spec.h):
        center = (center[0] + 3 * DIRECTIONS[direction][0],
                  center[1] + 3 * DIRECTIONS[direction][1])
        # new hexagon is entered through side direction + 3: u at corner
        # direction + 4, v at corner direction + 3, then p, q, r, s
        corner_vertex = {(direction + 4) % 6: u, (direction + 3) % 6: v}
        cycle = [u]
        for step in range(1, 5):
            j = (direction + 4 + step) % 6
            xy = _corner(center, j)
            w = len(coords)
            if xy in owner:
                warnings.append(
                    f"hexagon {i + 1} overlaps hexagon {owner[xy] + 1} in the plane"
                )
            owner.setdefault(xy, i)
            coords.append(xy)
            corner_vertex[j] = w
            edges.append((cycle[-1], w))
            cycle.append(w)
        edges.append((cycle[-1], v))
        cycle.append(v)
        hexagons.append(tuple(cycle))

        turn = spec.turns[i - 1] if i < spec.h - 1 else "S"
        direction = (direction + _TURN_DELTA[turn]) % 6
        u, v = corner_vertex[direction], corner_vertex[(direction + 1) % 6]
        attachments.append((u, v))

    return BenzenoidGraph(
        num_vertices=len(coords),
        edges=tuple(edges),
        spec=spec,
        coords=tuple(coords),
        hexagons=tuple(hexagons),
        attachment_edges=tuple(attachments),
        warnings=tuple(dict.fromkeys(warnings)),
    )
