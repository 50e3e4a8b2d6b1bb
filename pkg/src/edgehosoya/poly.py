"""Exact dense univariate polynomials over the integers.

A polynomial is stored as a tuple of Python ints, index ``k`` holding the
coefficient of ``x**k``; trailing zeros are stripped so the zero polynomial
is the empty tuple. Python ints never wrap, so by default nothing can
overflow. To emulate a fixed-width build, wrap a computation in
:func:`fixed_width`; every coefficient and every derived index is then
range-checked and :class:`CoefficientOverflow` is raised instead of
returning a truncated number.

Coefficients may be negative: the closed forms for polyacenes pass through
numerators with negative terms before the exact division. Anything that is
exported as a distance count goes through :meth:`Polynomial.require_counts`.
"""

from __future__ import annotations

import contextlib
import contextvars
import operator
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Polynomial",
    "CoefficientOverflow",
    "InexactDivision",
    "NegativeCoefficient",
    "fixed_width",
    "check_index",
    "add",
    "sub",
    "shift",
    "mul",
    "divide_exact",
    "derivative",
    "eval_at_one",
    "X_SQUARED_MINUS_ONE",
]


class CoefficientOverflow(OverflowError):
    """A value left the range of the active fixed-width mode."""


class InexactDivision(ArithmeticError):
    """``divide_exact`` found a nonzero remainder."""

    def __init__(self, remainder: "Polynomial"):
        super().__init__(f"nonzero remainder {remainder}")
        self.remainder = remainder


class NegativeCoefficient(ValueError):
    """A polynomial meant to count pairs has a negative coefficient."""


@dataclass(frozen=True)
class _Width:
    coeff_bits: Optional[int]
    index_bits: Optional[int]


_WIDTH: contextvars.ContextVar[_Width] = contextvars.ContextVar(
    "edgehosoya_width", default=_Width(None, None)
)


@contextlib.contextmanager
def fixed_width(coeff_bits: Optional[int] = 64, index_bits: Optional[int] = 128):
    """Range-check all arithmetic inside the block.

    ``coeff_bits`` bounds polynomial coefficients, ``index_bits`` bounds the
    scalar indices computed from them (see :func:`check_index`). ``None``
    disables the corresponding check. Magnitudes must stay below
    ``2**bits``; the sign is tracked separately, as an unsigned word plus the
    signed intermediates used during division.
    """
    token = _WIDTH.set(_Width(coeff_bits, index_bits))
    try:
        yield
    finally:
        _WIDTH.reset(token)


def _check_coeffs(coeffs: Sequence[int]) -> None:
    bits = _WIDTH.get().coeff_bits
    if bits is None or not coeffs:
        return
    top = max(coeffs)
    bottom = min(coeffs)
    if top.bit_length() > bits or bottom.bit_length() > bits:
        raise CoefficientOverflow(f"coefficient exceeds {bits}-bit width")


def check_index(value: int) -> int:
    """Return ``value`` unchanged, or raise if it exceeds the index width."""
    bits = _WIDTH.get().index_bits
    if bits is not None and value.bit_length() > bits:
        raise CoefficientOverflow(f"index value exceeds {bits}-bit width")
    return value


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Immutable integer polynomial, ascending coefficient order."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        _check_coeffs(c)
        self._c = _trim(c)

    @classmethod
    def _raw(cls, coeffs: list[int]) -> "Polynomial":
        # caller guarantees ints; still trimmed and range-checked
        p = cls.__new__(cls)
        _check_coeffs(coeffs)
        p._c = _trim(coeffs)
        return p

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "Polynomial":
        return cls._raw([0] * k + [coeff])

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw([c])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def coeff(self, k: int) -> int:
        return self._c[k] if 0 <= k < len(self._c) else 0

    def is_zero(self) -> bool:
        return not self._c

    def require_counts(self) -> "Polynomial":
        """Return self, raising if any coefficient is negative."""
        for k, a in enumerate(self._c):
            if a < 0:
                raise NegativeCoefficient(f"coefficient of x^{k} is {a}")
        return self

    def __iter__(self) -> Iterator[int]:
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __rsub__(self, other):
        return sub(_coerce(other), self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial._raw([-a for a in self._c])

    def __call__(self, x):
        acc = 0
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({list(self._c)!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k, a in enumerate(self._c):
            if not a:
                continue
            if k == 0:
                body = str(a)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if a == 1 else f"{a}{power}"
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ")


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


X_SQUARED_MINUS_ONE = Polynomial([-1, 0, 1])


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    out[: len(b)] = map(operator.add, a, b)
    return Polynomial._raw(out)


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return add(p, -q)


def shift(p: Polynomial, k: int) -> Polynomial:
    """Multiply by ``x**k``."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    if not p.coeffs or k == 0:
        return p
    return Polynomial._raw([0] * k + list(p.coeffs))


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Polynomial()
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    # iterate over the short factor; the recurrences multiply by (x + x^2)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return Polynomial._raw(out)


def divide_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return ``r`` with ``r * q == p``.

    The divisor must have leading coefficient 1 or -1 so that long division
    stays in the integers. Raises :class:`InexactDivision` if the remainder
    is not zero.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead = q.coeffs[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must have leading coefficient 1 or -1")
    dq = q.degree
    rem = list(p.coeffs)
    if len(rem) <= dq:
        if rem:
            raise InexactDivision(Polynomial(rem))
        return Polynomial()
    quot = [0] * (len(rem) - dq)
    qc = q.coeffs
    low = [(i, c) for i, c in enumerate(qc[:-1]) if c]
    for k in range(len(rem) - 1, dq - 1, -1):
        t = rem[k] * lead  # lead is its own inverse
        if not t:
            continue
        base = k - dq
        quot[base] = t
        rem[k] = 0
        for i, c in low:
            rem[base + i] -= t * c
    tail = _trim(rem[:dq])
    if tail:
        raise InexactDivision(Polynomial(tail))
    return Polynomial._raw(quot)


def derivative(p: Polynomial) -> Polynomial:
    return Polynomial._raw([k * a for k, a in enumerate(p.coeffs)][1:])


def eval_at_one(p: Polynomial) -> int:
    return check_index(sum(p.coeffs))
