"""Wiener-type edge indices from the edge-Hosoya polynomial.

For an edge-Hosoya polynomial ``H`` with ``d_k`` pairs at distance ``k``:

* edge-Wiener index ``W = H'(1) = sum k d_k``;
* edge-hyper-Wiener index ``WW = H'(1) + H''(1) / 2 = sum (k + k^2) / 2 d_k``.

Both are kept in exact integers. Also here: conversion between the
line-graph edge distance and the endpoint-minimum distance ``d_hat``, which
agree up to a shift of one for distinct edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial, check_index, derivative, eval_at_one

__all__ = [
    "IndexReport",
    "edge_wiener",
    "edge_hyper_wiener",
    "to_hat",
    "from_hat",
    "index_report",
]


def edge_wiener(p: Polynomial) -> int:
    return eval_at_one(derivative(p))


def edge_hyper_wiener(p: Polynomial) -> int:
    d1 = derivative(p)
    # every coefficient of H'' is k(k-1) d_k, hence even for integer input;
    # halving termwise keeps the intermediate no wider than the result
    half = 0
    for c in derivative(d1).coeffs:
        if c % 2:
            raise ValueError("H''(1) / 2 is not an integer; not a distance polynomial")
        half = check_index(half + c // 2)
    return check_index(eval_at_one(d1) + half)


def to_hat(p: Polynomial, m: int) -> Polynomial:
    """``(H - m) / x + m``: the same pairs counted with the endpoint distance."""
    if p.coeff(0) != m:
        raise ValueError(f"constant term {p.coeff(0)} does not match edge count {m}")
    rest = list(p.coeffs[1:]) or [0]
    rest[0] += m
    return Polynomial(rest)


def from_hat(q: Polynomial, m: int) -> Polynomial:
    """``x (Q - m) + m``, inverse of :func:`to_hat`."""
    if q.coeff(0) < m:
        raise ValueError(f"constant term {q.coeff(0)} is below the edge count {m}")
    out = [m, q.coeff(0) - m] + list(q.coeffs[1:])
    return Polynomial(out)


@dataclass(frozen=True)
class IndexReport:
    edge_count: int
    degree: int
    edge_wiener: int
    edge_hyper_wiener: int
    coefficients: Polynomial


def index_report(p: Polynomial) -> IndexReport:
    w = edge_wiener(p)
    ww = edge_hyper_wiener(p)
    if ww < w:
        raise ValueError("hyper-Wiener index below Wiener index")
    return IndexReport(p.coeff(0), p.degree, w, ww, p)
