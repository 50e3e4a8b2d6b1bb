"""Edge-Hosoya polynomials of benzenoid chains by annelation recurrences.

Fusing a hexagon ``u-p-q-r-s-v`` onto an edge ``e = uv`` of ``G0`` (both
ends of degree 2) changes the edge-Hosoya polynomial in a way that only
depends on ``H(G0)`` and the three rooted polynomials of ``G0`` at ``u``,
``v`` and ``e``. Tracking those three for the edge where the next hexagon
goes gives a fold over the chain that costs O(h) polynomial additions.

The new edges ``pq``, ``qr``, ``rs`` are the three places the following
hexagon may be fused; they give annelation cases 1, 2 and 3.
"""

from __future__ import annotations

import enum
from operator import add
from dataclasses import dataclass
from typing import Iterator, Sequence

from .chain import ChainSpec
from .poly import Polynomial

__all__ = [
    "AnnelationCase",
    "ChainState",
    "INITIAL_STATE",
    "ANNELATION_CONSTANT",
    "annelate_edge_hosoya",
    "annelate_rooted",
    "step",
    "chain_states",
    "chain_edge_hosoya",
    "case_sequence",
]

# 5 + 4x + 3x^2 + 3x^3: pairs among the five new edges and e itself
ANNELATION_CONSTANT = (5, 4, 3, 3)
_NEAR_VERTEX = (2, 1, 2)     # p, s
_FAR_VERTEX = (2, 2, 1)      # q, r
_NEW_EDGE = (1, 2, 1, 1)     # pq, qr, rs


class AnnelationCase(enum.Enum):
    CASE1 = 1  # next hexagon on pq
    CASE2 = 2  # next hexagon on qr (linear)
    CASE3 = 3  # next hexagon on rs

    @classmethod
    def from_turn(cls, turn: str) -> "AnnelationCase":
        try:
            return {"L": cls.CASE1, "S": cls.CASE2, "R": cls.CASE3}[turn]
        except KeyError:
            raise ValueError(f"unknown turn {turn!r}") from None


def _lincomb(terms: Sequence[tuple[Sequence[int], int]], const: Sequence[int]) -> Polynomial:
    """``sum(x**k * p for p, k in terms) + const`` on raw coefficient lists."""
    size = max([len(const)] + [len(p) + k for p, k in terms])
    out = [0] * size
    out[: len(const)] = const
    for p, k in terms:
        n = len(p)
        out[k:k + n] = map(add, out[k:k + n], p)
    return Polynomial._raw(out)


def _sum(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    out[: len(b)] = map(add, a, b)
    return out


def annelate_edge_hosoya(h0: Polynomial, hu: Polynomial, hv: Polynomial,
                         he: Polynomial) -> Polynomial:
    """Edge-Hosoya polynomial after fusing a hexagon onto ``e = uv``.

    ``h0`` is the polynomial of the old graph, ``hu``, ``hv``, ``he`` its
    rooted polynomials at ``u``, ``v`` and ``e``.
    """
    # (x + x^2)(hu + hv) + x^2 he  ==  x s + x^2 (s + he)
    s = _sum(hu.coeffs, hv.coeffs)
    return _lincomb(
        [(h0.coeffs, 0), (s, 1), (_sum(s, he.coeffs), 2)],
        ANNELATION_CONSTANT,
    )


_ROOTED = {
    # position: (which input, shift, constant)
    "p": ("u", 1, _NEAR_VERTEX),
    "q": ("u", 2, _FAR_VERTEX),
    "r": ("v", 2, _FAR_VERTEX),
    "s": ("v", 1, _NEAR_VERTEX),
    "pq": ("u", 2, _NEW_EDGE),
    "qr": ("e", 2, _NEW_EDGE),
    "rs": ("v", 2, _NEW_EDGE),
}


def annelate_rooted(which: str, hu: Polynomial, hv: Polynomial,
                    he: Polynomial) -> Polynomial:
    """Rooted polynomial at a new vertex or edge of the fused hexagon.

    ``which`` is one of the new vertices ``p``, ``q``, ``r``, ``s`` (cycle
    order ``u-p-q-r-s-v``) or one of the new edges ``pq``, ``qr``, ``rs``.
    """
    try:
        src, k, const = _ROOTED[which]
    except KeyError:
        raise ValueError(f"unknown position {which!r}") from None
    base = {"u": hu, "v": hv, "e": he}[src]
    out = [0] * k + list(base.coeffs)
    out.extend([0] * (len(const) - len(out)))
    out[: len(const)] = map(add, out, const)
    return Polynomial._raw(out)


@dataclass(frozen=True)
class ChainState:
    """Chain polynomial plus rooted polynomials at the next attachment edge."""

    h: int
    alpha: Polynomial
    beta: Polynomial
    gamma: Polynomial
    delta: Polynomial


_ONE = Polynomial([1])
INITIAL_STATE = ChainState(0, _ONE, _ONE, _ONE, _ONE)

_CASE_POSITIONS = {
    AnnelationCase.CASE1: ("p", "q", "pq"),
    AnnelationCase.CASE2: ("q", "r", "qr"),
    AnnelationCase.CASE3: ("r", "s", "rs"),
}


def step(state: ChainState, case: AnnelationCase) -> ChainState:
    b, g, d = state.beta, state.gamma, state.delta
    alpha = annelate_edge_hosoya(state.alpha, b, g, d)
    pu, pv, pe = _CASE_POSITIONS[case]
    return ChainState(
        state.h + 1,
        alpha,
        annelate_rooted(pu, b, g, d),
        annelate_rooted(pv, b, g, d),
        annelate_rooted(pe, b, g, d),
    )


def case_sequence(spec: ChainSpec, first: AnnelationCase = AnnelationCase.CASE2,
                  last: AnnelationCase = AnnelationCase.CASE2) -> list[AnnelationCase]:
    """Cases for the h annelation steps that build ``spec`` from one edge.

    Step 1 turns the edge into a hexagon and step h adds the last hexagon;
    neither choice affects the chain polynomial, only the tracked edge.
    """
    if spec.h == 1:
        return [first]
    return [first] + [AnnelationCase.from_turn(t) for t in spec.turns] + [last]


def chain_states(spec: ChainSpec, **cases) -> Iterator[ChainState]:
    """Yield the state after every annelation step, ``h = 1 .. spec.h``."""
    state = INITIAL_STATE
    for case in case_sequence(spec, **cases):
        state = step(state, case)
        yield state


def chain_edge_hosoya(spec: ChainSpec, **cases) -> Polynomial:
    state = INITIAL_STATE
    for state in chain_states(spec, **cases):
        pass
    return state.alpha.require_counts()
