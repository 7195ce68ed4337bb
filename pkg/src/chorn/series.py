"""Exact truncated multivariate power series over the rationals.

A :class:`TruncatedSeries` stores the coefficients of monomials of total
degree at most ``degree_bound`` in a fixed, sorted tuple of variables (vertex
labels).  Zero coefficients are never stored, so a missing key below the
bound means zero; asking above the bound raises :class:`TruncationError`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import TruncationError
from .graphs import Graph, GraphFamily, as_graph

Rational = Fraction


class ExponentVector:
    """Finite-support map vertex -> positive multiplicity.

    Zero entries are dropped, so two vectors are equal iff they agree on
    every vertex.  Ordering is graded: total degree first, then the sorted
    ``(vertex, exponent)`` pair lists.
    """

    __slots__ = ("_pairs", "_deg")

    def __init__(self, entries: Mapping | Iterable[tuple] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        merged: dict = {}
        for v, e in items:
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e} at {v!r}")
            if e:
                merged[v] = merged.get(v, 0) + e
        self._pairs = tuple(sorted(merged.items()))
        self._deg = sum(merged.values())

    @classmethod
    def from_dense(cls, values: Sequence[int], labels: Sequence | None = None) -> "ExponentVector":
        if labels is None:
            labels = range(1, len(values) + 1)
        if len(values) > len(labels):
            raise ValueError(f"{len(values)} exponents for {len(labels)} variables")
        return cls(zip(labels, values))

    @classmethod
    def unit(cls, v) -> "ExponentVector":
        return cls({v: 1})

    @property
    def pairs(self) -> tuple:
        return self._pairs

    @property
    def total_degree(self) -> int:
        return self._deg

    def __len__(self) -> int:
        return self._deg

    def support(self) -> tuple:
        return tuple(v for v, _ in self._pairs)

    def get(self, v, default: int = 0) -> int:
        for u, e in self._pairs:
            if u == v:
                return e
        return default

    __getitem__ = get

    def as_dict(self) -> dict:
        return dict(self._pairs)

    def dense(self, labels: Sequence) -> tuple:
        d = dict(self._pairs)
        extra = set(d).difference(labels)
        if extra:
            raise KeyError(f"vertices {sorted(extra)!r} are not among the variables")
        return tuple(d.get(v, 0) for v in labels)

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        return ExponentVector(self._pairs + other._pairs)

    def sort_key(self) -> tuple:
        return (self._deg, self._pairs)

    def __lt__(self, other: "ExponentVector") -> bool:
        return self.sort_key() < other.sort_key()

    def __eq__(self, other) -> bool:
        return isinstance(other, ExponentVector) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __repr__(self) -> str:
        return f"ExponentVector({dict(self._pairs)!r})"


def as_exponent(m, labels: Sequence | None = None) -> ExponentVector:
    """Coerce a mapping, pair list, dense sequence or vector into an ExponentVector."""
    if isinstance(m, ExponentVector):
        return m
    if isinstance(m, Mapping):
        return ExponentVector(m)
    m = list(m)
    if m and isinstance(m[0], tuple):
        return ExponentVector(m)
    return ExponentVector.from_dense(m, labels)


def monomials_upto(nvars: int, degree: int) -> Iterator[tuple]:
    """Dense exponent tuples of total degree <= ``degree``, graded."""
    for d in range(degree + 1):
        yield from _monomials_exact(nvars, d)


def _monomials_exact(nvars: int, d: int) -> Iterator[tuple]:
    if nvars == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in _monomials_exact(nvars - 1, d - first):
            yield (first,) + rest


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


class TruncatedSeries:
    """Power series in ``variables`` known up to total degree ``degree_bound``."""

    __slots__ = ("variables", "degree_bound", "_terms", "_index")

    def __init__(self, variables: Sequence, degree_bound: int, terms: Mapping | None = None):
        if degree_bound < 0:
            raise ValueError(f"negative degree bound {degree_bound}")
        self.variables = tuple(sorted(variables))
        self.degree_bound = int(degree_bound)
        self._index = {v: k for k, v in enumerate(self.variables)}
        self._terms: dict[tuple, Fraction] = {}
        for key, value in (terms or {}).items():
            key = self._dense(key)
            if sum(key) > self.degree_bound:
                continue
            value = Fraction(value)
            if value:
                self._terms[key] = self._terms.get(key, Fraction(0)) + value
                if not self._terms[key]:
                    del self._terms[key]

    # -- construction helpers ------------------------------------------------

    @classmethod
    def one(cls, variables: Sequence, degree_bound: int) -> "TruncatedSeries":
        return cls(variables, degree_bound, {(0,) * len(variables): 1})

    @classmethod
    def _raw(cls, variables: tuple, degree_bound: int, terms: dict) -> "TruncatedSeries":
        s = cls.__new__(cls)
        s.variables = variables
        s.degree_bound = degree_bound
        s._index = {v: k for k, v in enumerate(variables)}
        s._terms = terms
        return s

    def _dense(self, key) -> tuple:
        if isinstance(key, tuple) and len(key) == len(self.variables) and all(isinstance(e, int) for e in key):
            return key
        return as_exponent(key, self.variables).dense(self.variables)

    # -- accessors -----------------------------------------------------------

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self.variables), Fraction(0))

    def coefficient(self, m) -> Fraction:
        """Coefficient of ``x^m``; zero for monomials in foreign variables."""
        m = as_exponent(m, self.variables)
        if m.total_degree > self.degree_bound:
            raise TruncationError(
                f"insufficient truncation: |m| = {m.total_degree} > degree bound {self.degree_bound}"
            )
        if any(v not in self._index for v in m.support()):
            return Fraction(0)
        return self._terms.get(m.dense(self.variables), Fraction(0))

    def items(self) -> Iterator[tuple[ExponentVector, Fraction]]:
        """Nonzero terms in graded order."""
        for key in sorted(self._terms, key=lambda k: (sum(k), tuple((v, e) for v, e in zip(self.variables, k) if e))):
            yield ExponentVector(zip(self.variables, key)), self._terms[key]

    def dense_items(self) -> Iterator[tuple[tuple, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.degree_bound == other.degree_bound
            and dict(self.items()) == dict(other.items())
        )

    def __repr__(self) -> str:
        body = " + ".join(f"{format_rational(c)}*{m.as_dict()}" for m, c in self.items())
        return f"TruncatedSeries(D={self.degree_bound}, {body or '0'})"

    def to_json_obj(self) -> dict:
        return {
            "degree_bound": self.degree_bound,
            "terms": [
                {"m": [list(p) for p in m.pairs], "value": format_rational(c)}
                for m, c in self.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict, variables: Sequence | None = None) -> "TruncatedSeries":
        terms = {}
        seen = set()
        for t in obj["terms"]:
            m = ExponentVector(tuple(p) for p in t["m"])
            seen.update(m.support())
            terms[m] = parse_rational(t["value"])
        return cls(variables if variables is not None else sorted(seen), obj["degree_bound"], terms)

    def restrict_bound(self, degree_bound: int) -> "TruncatedSeries":
        degree_bound = min(degree_bound, self.degree_bound)
        return TruncatedSeries._raw(
            self.variables, degree_bound, {k: c for k, c in self._terms.items() if sum(k) <= degree_bound}
        )

    def _aligned(self, other: "TruncatedSeries") -> tuple[tuple, dict, dict]:
        if self.variables == other.variables:
            return self.variables, self._terms, other._terms
        variables = tuple(sorted(set(self.variables) | set(other.variables)))

        def lift(s):
            pos = [variables.index(v) for v in s.variables]
            out = {}
            for k, c in s._terms.items():
                dense = [0] * len(variables)
                for p, e in zip(pos, k):
                    dense[p] = e
                out[tuple(dense)] = c
            return out

        return variables, lift(self), lift(other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_multiply(self, other)


# ----------------------------------------------------------------------------
# operations
# ----------------------------------------------------------------------------


def independence_series(
    g: Graph | GraphFamily,
    relevant_vertices: Iterable | None = None,
    degree_bound: int | None = None,
    *,
    alternating: bool = False,
) -> TruncatedSeries:
    """Multivariate independence polynomial, truncated at ``degree_bound``.

    With ``alternating=True`` the monomial of an independent set ``S`` gets
    sign ``(-1)^|S|``, i.e. the series ``I(G, -x)``.
    """
    graph = as_graph(g, relevant_vertices)
    if degree_bound is None:
        degree_bound = graph.n
    if degree_bound < 0:
        raise ValueError(f"negative degree bound {degree_bound}")
    variables = graph.vertices
    index = {v: k for k, v in enumerate(variables)}
    terms = {}
    for s in graph.independent_sets(max_size=degree_bound):
        key = [0] * len(variables)
        for v in s:
            key[index[v]] = 1
        terms[tuple(key)] = Fraction(-1 if alternating and len(s) % 2 else 1)
    return TruncatedSeries._raw(variables, degree_bound, terms)


def _integral(terms: Mapping) -> dict | None:
    """Same terms with int values, or None if some value is not an integer."""
    out = {}
    for k, c in terms.items():
        if c.denominator != 1:
            return None
        out[k] = c.numerator
    return out


def series_multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the common degree bound."""
    if a.degree_bound != b.degree_bound:
        raise ValueError(f"degree bounds differ: {a.degree_bound} != {b.degree_bound}")
    D = a.degree_bound
    variables, ta, tb = a._aligned(b)
    # integer arithmetic is several times faster than Fraction
    ia, ib = _integral(ta), _integral(tb)
    integral = ia is not None and ib is not None
    if integral:
        ta, tb = ia, ib
    by_deg_b: dict[int, list] = {}
    for k, c in tb.items():
        by_deg_b.setdefault(sum(k), []).append((k, c))
    out: dict[tuple, Fraction] = {}
    for ka, ca in ta.items():
        da = sum(ka)
        for db, bucket in by_deg_b.items():
            if da + db > D:
                continue
            for kb, cb in bucket:
                key = tuple(x + y for x, y in zip(ka, kb))
                out[key] = out.get(key, 0) + ca * cb
    return TruncatedSeries._raw(variables, D, {k: Fraction(c) for k, c in out.items() if c})


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse up to the degree bound, layer by layer in total degree."""
    c0 = s.constant_term
    if c0 == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    n = len(s.variables)
    zero = (0,) * n
    inv0 = 1 / Fraction(c0)
    # s = c0 * (1 + u); invert 1 + u, then rescale
    u = [(k, c * inv0) for k, c in s._terms.items() if k != zero]
    if all(c.denominator == 1 for _, c in u):
        u = [(k, c.numerator) for k, c in u]
    t: dict[tuple, Fraction] = {zero: 1 if all(isinstance(c, int) for _, c in u) else Fraction(1)}
    for m in monomials_upto(n, s.degree_bound):
        if m == zero:
            continue
        acc = 0
        for k, c in u:
            rest = tuple(x - y for x, y in zip(m, k))
            if min(rest) < 0:
                continue
            tr = t.get(rest)
            if tr:
                acc += c * tr
        if acc:
            t[m] = -acc
    return TruncatedSeries._raw(s.variables, s.degree_bound, {k: c * inv0 for k, c in t.items()})


def series_int_power(s: TruncatedSeries, q: int) -> TruncatedSeries:
    """``s**q`` for any integer ``q``; requires constant term 1."""
    if s.constant_term != 1:
        raise ValueError(f"integer powers need constant term 1, got {s.constant_term}")
    q = int(q)
    if q == 0:
        return TruncatedSeries.one(s.variables, s.degree_bound)
    base = series_invert(s) if q < 0 else s
    e = abs(q)
    result = None
    while e:
        if e & 1:
            result = base if result is None else series_multiply(result, base)
        e >>= 1
        if e:
            base = series_multiply(base, base)
    return result


def coefficient(s: TruncatedSeries, m) -> Fraction:
    return s.coefficient(m)


def one_variable_collapse(s: TruncatedSeries) -> list[Fraction]:
    """Coefficients of the univariate series obtained by setting every ``x_i = t``."""
    out = [Fraction(0)] * (s.degree_bound + 1)
    for k, c in s._terms.items():
        out[sum(k)] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
