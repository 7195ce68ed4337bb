"""Closed-form coefficient formulas.

Sign conventions, with ``I = I(G, x)`` the plain independence series
(all coefficients +1):

* ``I^q [x^m] = pi^m(q)`` for every integer ``q``;
* equivalently ``I(G, -x)^q [x^m] = (-1)^|m| pi^m(q)``;
* for a PEO graph ``pi^m(-q) = (-1)^|m| prod_r binom(q - 1 + a_r, m_r)``, so the
  positive product :func:`peo_coefficient` is the coefficient of ``x^m`` in
  ``I(G, -x)^{-q}`` and ``(-1)^|m|`` times the coefficient in ``I(G, x)^{-q}``.

Read's cycle formula is evaluated with falling factorials: ``(m_i)^k`` is
read as ``(m_i)_k`` and ``(q)^{m_i+k}`` as ``(q)_{m_i+k}``, with an overall
``1 / prod m_i!``.  That is the reading that agrees with colouring counts;
the power reading does not (see tests/test_closed_forms.py).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod
from typing import Mapping

from .errors import GraphError
from .graphs import Graph, GraphFamily, Kind, PEOrdering, verify_peo
from .qpoly import QPolynomial, binomial, binomial_poly, falling_factorial, v_poly
from .series import ExponentVector, as_exponent


def _check_peo(g: Graph, peo: PEOrdering) -> dict:
    check = verify_peo(g, peo.order)
    if not check:
        v, (a, b) = check.violation
        raise GraphError(f"invalid PEO: earlier neighbours {a!r}, {b!r} of {v!r} are not adjacent")
    return {v: i for i, v in enumerate(peo.order)}


def _support_in_order(g: Graph, peo: PEOrdering, m) -> tuple[list, dict]:
    rank = _check_peo(g, peo)
    mult = as_exponent(m, g.vertices).as_dict()
    unknown = set(mult).difference(rank)
    if unknown:
        raise GraphError(f"support of m uses unknown vertices {sorted(unknown)!r}")
    return sorted(mult, key=rank.__getitem__), mult


def a_vector(g: Graph, peo: PEOrdering, m) -> tuple[int, ...]:
    """``a_r = m_{i_r} + sum of m over earlier support vertices adjacent to i_r``."""
    supp, mult = _support_in_order(g, peo, m)
    out = []
    for r, v in enumerate(supp):
        out.append(mult[v] + sum(mult[u] for u in supp[:r] if g.adjacent(u, v)))
    return tuple(out)


def peo_coefficient(g: Graph, peo: PEOrdering, m, q) -> Fraction:
    """``prod_r binom(q - 1 + a_r, m_{i_r})`` for rational ``q``.

    For ``q`` outside the non-positive integers this is the coefficient of
    ``x^m`` in ``I(G, -x)^{-q}`` (the binomial product is a polynomial in
    ``q`` and is evaluated at any rational).
    """
    supp, mult = _support_in_order(g, peo, m)
    a = a_vector(g, peo, m)
    q = Fraction(q)
    return prod((binomial(q - 1 + ar, mult[v]) for ar, v in zip(a, supp)), start=Fraction(1))


def peo_chromatic(g: Graph, peo: PEOrdering, m) -> QPolynomial:
    """``pi^m_G(q) = prod_r binom(q - a_r + m_{i_r}, m_{i_r})`` as a polynomial."""
    supp, mult = _support_in_order(g, peo, m)
    a = a_vector(g, peo, m)
    out = QPolynomial([1])
    for ar, v in zip(a, supp):
        out = out * binomial_poly(mult[v], mult[v] - ar)
    return out


def peo_inverse_power_coefficient(g: Graph, peo: PEOrdering, m, q) -> Fraction:
    """Coefficient of ``x^m`` in ``I(G, x)^{-q}`` from the PEO product."""
    m = as_exponent(m, g.vertices)
    sign = -1 if m.total_degree % 2 else 1
    return sign * peo_coefficient(g, peo, m, q)


def family_chromatic(kind: GraphFamily | Kind | str, m) -> QPolynomial:
    """Product-of-binomials ``pi^m(q)`` for paths, stars and complete graphs.

    Paths (finite or infinite) chain each vertex to its predecessor ``i - 1``,
    which contributes nothing when it is outside the support.  Stars subtract
    the centre's multiplicity from every leaf factor.  Complete graphs
    subtract the running prefix sum.
    """
    n = None
    if isinstance(kind, GraphFamily):
        n = kind.n
        kind = kind.kind
    kind = Kind(kind)
    mult = as_exponent(m).as_dict()
    for v in mult:
        if not isinstance(v, int) or v < 1 or (n is not None and v > n):
            raise GraphError(f"vertex {v!r} is not a vertex of the {kind.value} family")
    out = QPolynomial([1])
    if kind in (Kind.PATH, Kind.PATH_INF):
        for v in sorted(mult):
            out = out * binomial_poly(mult[v], -mult.get(v - 1, 0))
    elif kind in (Kind.STAR, Kind.STAR_INF):
        centre = mult.get(1, 0)
        out = binomial_poly(centre)
        for v in sorted(mult):
            if v != 1:
                out = out * binomial_poly(mult[v], -centre)
    elif kind is Kind.COMPLETE:
        used = 0
        for v in sorted(mult):
            out = out * binomial_poly(mult[v], -used)
            used += mult[v]
    else:
        raise GraphError(f"no product formula for {kind.value}; cycles use read_cycle_chromatic")
    return out


def _cycle_m(n: int, m) -> list[int]:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    if isinstance(m, (list, tuple)) and (not m or not isinstance(m[0], tuple)):
        vals = [int(x) for x in m]
        if len(vals) > n:
            raise GraphError(f"{len(vals)} multiplicities for a {n}-cycle")
        return vals + [0] * (n - len(vals))
    mult = as_exponent(m).as_dict()
    for v in mult:
        if not isinstance(v, int) or not 1 <= v <= n:
            raise GraphError(f"vertex {v!r} is not on the {n}-cycle")
    return [mult.get(i, 0) for i in range(1, n + 1)]


def read_cycle_polynomial(n: int, m) -> QPolynomial:
    """``pi^m_{C_n}(q)`` from Read's formula, as an exact polynomial in ``q``.

    The sum runs over ``0 <= k <= min(m)``: for larger ``k`` the factor
    ``(m_i)_k`` vanishes at the smallest multiplicity.  For those ``k`` every
    quotient ``(q)_{m_i + m_{i+1}} / (q)_{m_i + k}`` is the polynomial
    ``(q - m_i - k)_{m_{i+1} - k}``, so the sum is polynomial term by term.
    """
    ms = _cycle_m(n, m)
    kmax = min(ms)
    total = QPolynomial()
    for k in range(kmax + 1):
        term = v_poly(k) * prod((Fraction(factorial(mi), factorial(mi - k)) for mi in ms), start=Fraction(1))
        if (k * n) % 2:
            term = -term
        for i in range(n):
            mi, mnext = ms[i], ms[(i + 1) % n]
            term = term * falling_factorial(mnext - k, -(mi + k))
        total = total + term
    return total / prod(factorial(mi) for mi in ms)


def read_cycle_chromatic(n: int, m, q) -> Fraction:
    """``pi^m_{C_n}(q)`` evaluated at ``q``."""
    return read_cycle_polynomial(n, m)(q)


def cycle_inverse_power_coefficient(n: int, m, q) -> Fraction:
    """Coefficient of ``x^m`` in ``I(C_n, x)^{-q}``, i.e. ``pi^m_{C_n}(-q)``."""
    return read_cycle_polynomial(n, m)(-Fraction(q))


def cycle_diagonal_q1(n: int, a: int) -> int:
    """Coefficient of ``x_1^a ... x_n^a`` in ``I(C_n, x)^{-1}``."""
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    s = sum((-1) ** abs(k) * comb(2 * a, a + k) ** n for k in range(-a, a + 1))
    return (-1) ** (n * a) * s
