"""Univariate polynomials in the colour count ``q`` with rational coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .errors import InconsistentSamples


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class QPolynomial:
    """Dense polynomial, ascending powers, no trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def constant(cls, c) -> "QPolynomial":
        return cls([c])

    @classmethod
    def q(cls) -> "QPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    @staticmethod
    def _coerce(other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return QPolynomial([other])
        return NotImplemented

    def __add__(self, other) -> "QPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return QPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "QPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "QPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "QPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "QPolynomial":
        scalar = Fraction(scalar)
        return QPolynomial(c / scalar for c in self.coeffs)

    def __pow__(self, e: int) -> "QPolynomial":
        out = QPolynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def compose_shift(self, shift) -> "QPolynomial":
        """``p(q + shift)``."""
        shift = Fraction(shift)
        out = QPolynomial()
        lin = QPolynomial([shift, 1])
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def compose_neg(self) -> "QPolynomial":
        """``p(-q)``."""
        return QPolynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json_obj(self) -> dict:
        from .series import format_rational

        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QPolynomial":
        return cls(Fraction(c) for c in obj["coeffs"])


def falling_factorial(k: int, shift=0) -> QPolynomial:
    """``(q + shift)(q + shift - 1) ... (q + shift - k + 1)``; 1 for ``k = 0``."""
    if k < 0:
        raise ValueError(f"negative falling factorial length {k}")
    out = QPolynomial([1])
    for j in range(k):
        out = out * QPolynomial([Fraction(shift) - j, 1])
    return out


def binomial_poly(k: int, shift=0) -> QPolynomial:
    """``binom(q + shift, k)`` as a polynomial in ``q``; zero for ``k < 0``."""
    if k < 0:
        return QPolynomial()
    return falling_factorial(k, shift) / factorial(k)


def v_poly(k: int) -> QPolynomial:
    """``binom(q, k) - binom(q, k - 1)``."""
    return binomial_poly(k) - binomial_poly(k - 1)


def binomial(top, k: int) -> Fraction:
    """Generalised binomial coefficient with rational top and integer ``k``."""
    if k < 0:
        return Fraction(0)
    top = Fraction(top)
    num = Fraction(1)
    for j in range(k):
        num *= top - j
    return num / factorial(k)


def interpolate_q(values: Sequence[tuple], degree: int) -> QPolynomial:
    """Unique polynomial of degree <= ``degree`` through the sample points.

    The first ``degree + 1`` distinct points determine it; every further
    sample must agree or :class:`InconsistentSamples` is raised.
    """
    pts: dict[Fraction, Fraction] = {}
    for x, y in values:
        x, y = Fraction(x), Fraction(y)
        if x in pts and pts[x] != y:
            raise InconsistentSamples(f"two values at q = {x}: {pts[x]} and {y}")
        pts[x] = y
    if len(pts) < degree + 1:
        raise ValueError(f"need {degree + 1} distinct points for degree {degree}, got {len(pts)}")
    items = list(pts.items())
    basis, extra = items[: degree + 1], items[degree + 1 :]
    out = QPolynomial()
    for i, (xi, yi) in enumerate(basis):
        if not yi:
            continue
        term = QPolynomial([yi])
        for j, (xj, _) in enumerate(basis):
            if j != i:
                term = term * QPolynomial([-xj, 1]) / (xi - xj)
        out = out + term
    for x, y in extra:
        if out(x) != y:
            raise InconsistentSamples(f"sample ({x}, {y}) is off the interpolant {out}")
    return out
