"""Univariate polynomials in q with exact integer coefficients.

Coefficients are Python ints, so arithmetic is arbitrary precision and
cannot overflow.
"""
from __future__ import annotations

import json
from typing import Iterable, Optional


class QPolynomial:
    """Immutable polynomial; ``coeffs[d]`` is the coefficient of q^d.

    The stored coefficient tuple never has a trailing zero, so the zero
    polynomial is the empty tuple.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> QPolynomial:
        return cls()

    @classmethod
    def one(cls) -> QPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPolynomial:
        if degree < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls((0,) * degree + (coeff,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == QPolynomial((other,))._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: QPolynomial) -> QPolynomial:
        return add(self, other)

    def __neg__(self) -> QPolynomial:
        return QPolynomial(-c for c in self._coeffs)

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        return add(self, -other)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        out = ""
        for d, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                term = str(mag)
            else:
                base = "q" if d == 1 else f"q^{d}"
                term = base if mag == 1 else f"{mag}{base}"
            if not out:
                out = term if c > 0 else "-" + term
            else:
                out += (" + " if c > 0 else " - ") + term
        return out

    def to_json(self) -> str:
        """Ascending coefficient array."""
        return json.dumps(list(self._coeffs))


def add(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    a, b = p.coeffs, r.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return QPolynomial(out)


def scale_shift(p: QPolynomial, c: int, m: int) -> QPolynomial:
    """Return c * q^m * p."""
    if m < 0:
        raise ValueError("shift must be non-negative")
    if c == 0 or p.is_zero():
        return QPolynomial()
    return QPolynomial((0,) * m + tuple(c * x for x in p.coeffs))


def degree(p: QPolynomial) -> Optional[int]:
    """Highest power with nonzero coefficient; None for the zero polynomial."""
    return len(p.coeffs) - 1 if p.coeffs else None


def eval_at_one(p: QPolynomial) -> int:
    return sum(p.coeffs)
