"""Closed forms for linear chains (polyacenes) ``L_h``.

Each formula is a rational function with denominator ``x^2 - 1`` or
``(x^2 - 1)^2``. We build the numerator exactly and divide it out with
:func:`~edgehosoya.poly.divide_exact`, so a wrong numerator cannot slip
through: the division raises on any nonzero remainder.
"""

from __future__ import annotations

from .poly import X_SQUARED_MINUS_ONE, Polynomial, divide_exact

__all__ = [
    "beta_numerator",
    "delta_numerator",
    "edge_hosoya_numerator",
    "beta_closed",
    "delta_closed",
    "edge_hosoya_closed",
]


def _padded(low: dict[int, int], high_shift: int, high: tuple[int, ...]) -> Polynomial:
    size = max(max(low, default=0) + 1, high_shift + len(high))
    out = [0] * size
    for k, c in low.items():
        out[k] += c
    for i, c in enumerate(high):
        out[high_shift + i] += c
    return Polynomial._raw(out)


def beta_numerator(h: int) -> Polynomial:
    """``x^(2h) (2x^2 + 2x + 1) - x^2 - 2x - 2``."""
    return _padded({0: -2, 1: -2, 2: -1}, 2 * h, (1, 2, 2))


def delta_numerator(h: int, tail_x3: int = -1) -> Polynomial:
    """``x^(2h) (x^3 + 2x^2 + 2x) - x^3 - x^2 - 2x - 1``.

    ``tail_x3`` is the coefficient of the lone ``x^3`` term; only the
    default ``-1`` yields an exact quotient. It is exposed so the rejected
    ``+x^3`` reading can be demonstrated.
    """
    return _padded({0: -1, 1: -2, 2: -1, 3: tail_x3}, 2 * h, (0, 2, 2, 1))


def edge_hosoya_numerator(h: int) -> Polynomial:
    low = {
        7: 2 * h,
        5: -(9 * h + 1),
        4: -(7 * h + 5),
        3: -(h + 10),
        2: 2 * (h - 4),
        1: 2 * (4 * h - 1),
        0: 5 * h + 1,
    }
    return _padded(low, 2 * h + 1, (2, 6, 10, 6, 1))


def _check_h(h: int, least: int) -> None:
    if not isinstance(h, int) or h < least:
        raise ValueError(f"h must be an integer >= {least}, got {h!r}")


def beta_closed(h: int) -> Polynomial:
    """Rooted polynomial of ``L_h`` at either end of its linear attachment edge."""
    _check_h(h, 0)
    return divide_exact(beta_numerator(h), X_SQUARED_MINUS_ONE).require_counts()


def delta_closed(h: int) -> Polynomial:
    """Rooted polynomial of ``L_h`` at its linear attachment edge."""
    _check_h(h, 0)
    return divide_exact(delta_numerator(h), X_SQUARED_MINUS_ONE).require_counts()


def edge_hosoya_closed(h: int) -> Polynomial:
    _check_h(h, 1)
    once = divide_exact(edge_hosoya_numerator(h), X_SQUARED_MINUS_ONE)
    return divide_exact(once, X_SQUARED_MINUS_ONE).require_counts()
