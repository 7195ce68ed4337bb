"""Bounded-evidence analysis of the Horn hypergeometric property.

A series ``sum c_m x^m`` is Horn hypergeometric when no coefficient vanishes
and every step ratio ``c_{m+e_i} / c_m`` is a rational function of the
multiplicities on the (fixed) support of ``m``.  Neither condition can be
settled by finite computation, so :func:`horn_verdict` reports what a
truncated table shows:

``HornConsistent``
    no zero coefficient up to the degree bound, and every sampled ray admits
    an exact rational fit within the degree caps;
``ZeroCoefficientWitness``
    an exponent vector whose coefficient is exactly zero;
``RatioFitFailed``
    a ray whose ratios no rational function within the caps reproduces.

For chordal graphs the coefficients of ``I(G, x)^{-q}`` are products of
binomials and the first outcome is what one sees; for cycles of length at
least four the diagonal ratios ``c_{(a+1,..,a+1)} / c_{(a,..,a)}`` are not
hypergeometric, and a long enough diagonal ray refutes every small cap.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import check_guard
from .graphs import Graph, GraphFamily, as_graph
from .linalg import nullspace
from .series import (
    ExponentVector,
    format_rational,
    independence_series,
    monomials_upto,
    series_int_power,
)

HORN_CONSISTENT = "HornConsistent"
ZERO_WITNESS = "ZeroCoefficientWitness"
RATIO_FIT_FAILED = "RatioFitFailed"


def _window(g: Graph | GraphFamily, window: Iterable | None) -> tuple[Graph, tuple]:
    graph = as_graph(g, window)
    return graph, graph.vertices


def _graph_label(g) -> str:
    if isinstance(g, GraphFamily):
        return g.label()
    return f"explicit:{g.n}"


# ----------------------------------------------------------------------------
# coefficient tables
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientTable:
    """Every coefficient of ``I(G, x)^q`` of total degree <= D over a vertex window."""

    graph: str
    q: int
    degree_bound: int
    window: tuple
    entries: dict = field(repr=False)

    def __getitem__(self, m) -> Fraction:
        if not isinstance(m, tuple) or len(m) != len(self.window) or (m and isinstance(m[0], tuple)):
            from .series import as_exponent

            m = as_exponent(m, self.window).dense(self.window)
        return self.entries[m]

    def __contains__(self, m) -> bool:
        return m in self.entries

    def vector(self, key: tuple) -> ExponentVector:
        return ExponentVector(zip(self.window, key))


def coefficient_table(g: Graph | GraphFamily, q: int, window: Iterable | None = None, degree_bound: int = 8) -> CoefficientTable:
    graph, win = _window(g, window)
    series = series_int_power(independence_series(graph, None, degree_bound), q)
    entries = {key: series._terms.get(key, Fraction(0)) for key in monomials_upto(len(win), degree_bound)}
    return CoefficientTable(_graph_label(g), int(q), degree_bound, win, entries)


def _graded_key(window: tuple, key: tuple) -> tuple:
    return (sum(key), tuple((v, e) for v, e in zip(window, key) if e))


def zero_scan(table: CoefficientTable) -> ExponentVector | None:
    """Smallest exponent vector (graded order) whose coefficient is exactly zero."""
    zeros = [k for k, c in table.entries.items() if c == 0]
    if not zeros:
        return None
    return table.vector(min(zeros, key=lambda k: _graded_key(table.window, k)))


# ----------------------------------------------------------------------------
# exact coefficients beyond a total-degree table
# ----------------------------------------------------------------------------


def box_coefficients(
    g: Graph | GraphFamily,
    q,
    corner,
    window: Iterable | None = None,
    *,
    keep: Callable[[tuple], bool] | None = None,
    guard: int | None = None,
) -> dict:
    """Coefficients of ``I(G, x)^q`` at every ``m <= corner`` (componentwise).

    ``keep`` filters which exponent tuples are returned; all of them are
    still computed.

    Uses the first-order recurrence obtained from ``I * d_k J = q * J * d_k I``
    for ``J = I^q``: with ``k`` the first coordinate where ``m_k > 0``,

        m_k J_m = sum over nonempty independent S within supp(m) of
                  (q [k in S] + [k in S] - m_k) J_{m - S}.

    Only coefficients inside the box are touched, so a long diagonal ray is
    cheap compared with a total-degree table reaching the same corner.
    """
    graph, win = _window(g, window)
    corner = tuple(corner) if not isinstance(corner, int) else (corner,) * len(win)
    if len(corner) != len(win):
        raise ValueError(f"corner has {len(corner)} entries for {len(win)} variables")
    size = 1
    for c in corner:
        size *= c + 1
    check_guard("box coefficients", size, guard)
    integral = isinstance(q, int) or Fraction(q).denominator == 1
    q = int(q) if integral else Fraction(q)
    n = len(win)
    index = {v: i for i, v in enumerate(win)}
    strides = [0] * n
    s = 1
    for i in range(n - 1, -1, -1):
        strides[i] = s
        s *= corner[i] + 1
    sets = []
    for ind in graph.independent_sets():
        if ind:
            coords = [index[v] for v in ind]
            sets.append((sum(1 << c for c in coords), sum(strides[c] for c in coords), coords))
    by_mask: dict[int, tuple] = {}
    for mask in range(1, 1 << n):
        k = (mask & -mask).bit_length() - 1
        applicable = [(off, (k in coords)) for smask, off, coords in sets if smask & mask == smask]
        by_mask[mask] = (k, applicable)
    values = [0] * size
    values[0] = 1 if integral else Fraction(1)
    out = {}
    for flat, m in enumerate(itertools.product(*[range(c + 1) for c in corner])):
        if flat:
            mask = 0
            for i, e in enumerate(m):
                if e:
                    mask |= 1 << i
            k, applicable = by_mask[mask]
            mk = m[k]
            acc = 0
            for off, has_k in applicable:
                w = values[flat - off]
                if w:
                    acc += ((q + 1) * has_k - mk) * w
            if integral:
                val, rem = divmod(acc, mk)
                if rem:
                    raise ArithmeticError("non-integral coefficient in an integral power")
            else:
                val = Fraction(acc) / mk
            values[flat] = val
        if keep is None or keep(m):
            out[m] = Fraction(values[flat])
    return out


# ----------------------------------------------------------------------------
# rays and ratio samples
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Ray:
    """Points ``base + t * step`` for ``t = 0, 1, ...``."""

    base: ExponentVector
    step: ExponentVector

    @property
    def parameter_vertex(self):
        return self.step.support()[0]

    def point(self, t: int) -> ExponentVector:
        return ExponentVector(self.base.pairs + tuple((v, e * t) for v, e in self.step.pairs))

    def to_json_obj(self) -> dict:
        return {"base": [list(p) for p in self.base.pairs], "step": [list(p) for p in self.step.pairs]}


@dataclass(frozen=True)
class RatioSample:
    """``value = c_{m + direction} / c_m`` at the sample point ``m``."""

    direction: ExponentVector
    m: ExponentVector
    parameters: tuple
    value: Fraction
    t: int = 0
    parameter_vertex: object = None

    def point(self, names: Sequence | None = None) -> tuple:
        """Fit coordinates: the ray's free multiplicity unless ``names`` are given."""
        if names is None:
            names = (self.parameter_vertex,)
        return tuple(self.m.get(v) for v in names)


class SampleList(list):
    """Ratio samples plus the ray points dropped for a zero denominator."""

    def __init__(self, items=(), excluded=()):
        super().__init__(items)
        self.excluded = list(excluded)


def _as_vec(x, window) -> ExponentVector:
    from .series import as_exponent

    if isinstance(x, ExponentVector):
        return x
    if not isinstance(x, (list, tuple, dict)) and x in window:
        return ExponentVector.unit(x)
    return as_exponent(x, window)


def ratio_samples(table: CoefficientTable, direction, ray: Ray, length: int | None = None) -> SampleList:
    """Step ratios along a fixed-support ray, as far as the table reaches.

    ``direction`` is a vertex (axis step) or an exponent vector (composite
    step).  Points with a zero coefficient are listed in ``.excluded``.
    """
    direction = _as_vec(direction, table.window)
    out = SampleList()
    t = 0
    while length is None or len(out) + len(out.excluded) < length:
        m = ray.point(t)
        nxt = m + direction
        if nxt.total_degree > table.degree_bound:
            break
        cm = table[m]
        if cm == 0:
            out.excluded.append(m)
        else:
            out.append(RatioSample(direction, m, m.pairs, table[nxt] / cm, t, ray.parameter_vertex))
        t += 1
    return out


def diagonal_samples(g: Graph | GraphFamily, q: int, window: Iterable | None, length: int) -> SampleList:
    """Composite-step ratios ``c_{(a+1)1} / c_{a 1}`` of ``I(G, x)^q`` for ``a = 0 .. length - 1``, exactly."""
    graph, win = _window(g, window)
    box = box_coefficients(graph, q, length, None, keep=lambda m: min(m) == max(m))
    one = ExponentVector({v: 1 for v in win})
    out = SampleList()
    for a in range(length):
        ca = box[(a,) * len(win)]
        m = ExponentVector({v: a for v in win})
        if ca == 0:
            out.excluded.append(m)
            continue
        out.append(RatioSample(one, m, m.pairs, box[(a + 1,) * len(win)] / ca, a, win[0]))
    return out


# ----------------------------------------------------------------------------
# rational fitting
# ----------------------------------------------------------------------------


def _monomials(nvars: int, degree: int) -> list[tuple]:
    return list(monomials_upto(nvars, degree))


def _mono_value(point: tuple, alpha: tuple) -> Fraction:
    out = Fraction(1)
    for x, e in zip(point, alpha):
        if e:
            out *= Fraction(x) ** e
    return out


class RationalFunction:
    """``P / Q`` in ``nvars`` variables with exact rational coefficients."""

    __slots__ = ("num", "den", "nvars")

    def __init__(self, num: dict, den: dict, nvars: int):
        num = {k: Fraction(c) for k, c in num.items() if c}
        den = {k: Fraction(c) for k, c in den.items() if c}
        if not den:
            raise ZeroDivisionError("zero denominator")
        lead = den[max(den, key=lambda k: (sum(k), k))]
        self.num = {k: c / lead for k, c in num.items()}
        self.den = {k: c / lead for k, c in den.items()}
        self.nvars = nvars

    @property
    def degrees(self) -> tuple[int, int]:
        dn = max((sum(k) for k in self.num), default=0)
        dd = max(sum(k) for k in self.den)
        return dn, dd

    def numerator_at(self, point) -> Fraction:
        return sum((c * _mono_value(point, k) for k, c in self.num.items()), Fraction(0))

    def denominator_at(self, point) -> Fraction:
        return sum((c * _mono_value(point, k) for k, c in self.den.items()), Fraction(0))

    def __call__(self, *point) -> Fraction:
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = tuple(point[0])
        return self.numerator_at(point) / self.denominator_at(point)

    def _poly_str(self, terms: dict, names: Sequence[str]) -> str:
        if not terms:
            return "0"
        parts = []
        for k in sorted(terms, key=lambda k: (-sum(k), tuple(-e for e in k))):
            c = terms[k]
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, k) if e)
            if mono:
                coef = "" if c == 1 else "-" if c == -1 else f"{format_rational(c)}*"
                parts.append(f"{coef}{mono}")
            else:
                parts.append(format_rational(c))
        return " + ".join(parts).replace("+ -", "- ")

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = ["a"] if self.nvars == 1 else [f"m{i + 1}" for i in range(self.nvars)]
        num = self._poly_str(self.num, names)
        if set(self.den) == {(0,) * self.nvars} and self.den[(0,) * self.nvars] == 1:
            return num
        return f"({num})/({self._poly_str(self.den, names)})"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    out = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        out[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return out, a


def _poly_gcd(a: list, b: list) -> list:
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return a


def _reduce_univariate(f: RationalFunction) -> RationalFunction:
    dn, dd = f.degrees
    num = [f.num.get((k,), Fraction(0)) for k in range(dn + 1)]
    den = [f.den.get((k,), Fraction(0)) for k in range(dd + 1)]
    g = _poly_gcd(num, den) if any(num) else den
    if len(g) <= 1:
        return f
    num_q, _ = _poly_divmod(num, g)
    den_q, _ = _poly_divmod(den, g)
    return RationalFunction({(k,): c for k, c in enumerate(num_q)}, {(k,): c for k, c in enumerate(den_q)}, 1)


def min_samples(caps: tuple[int, int], nvars: int = 1) -> int:
    """Sample count needed by :func:`rational_fit`: free parameters plus one check."""
    return len(_monomials(nvars, caps[0])) + len(_monomials(nvars, caps[1]))


def _normalize_samples(samples) -> list[tuple[tuple, Fraction]]:
    pts = []
    for s in samples:
        if isinstance(s, RatioSample):
            pts.append((s.point(), s.value))
        else:
            x, v = s
            x = tuple(x) if isinstance(x, (tuple, list)) else (x,)
            pts.append((tuple(Fraction(c) for c in x), Fraction(v)))
    return pts


def _try_fit(pts, nvars: int, dn: int, dd: int) -> RationalFunction | None:
    nmon = _monomials(nvars, dn)
    dmon = _monomials(nvars, dd)
    rows = []
    for x, v in pts:
        rows.append([_mono_value(x, a) for a in nmon] + [-v * _mono_value(x, b) for b in dmon])
    basis = nullspace(rows, len(nmon) + len(dmon))
    candidates = list(basis)
    if len(basis) > 1:
        candidates.append([sum(col) for col in zip(*basis)])
    for vec in candidates:
        den = {b: c for b, c in zip(dmon, vec[len(nmon):]) if c}
        if not den:
            continue
        f = RationalFunction({a: c for a, c in zip(nmon, vec[: len(nmon)])}, den, nvars)
        if all(f.denominator_at(x) != 0 and f(x) == v for x, v in pts):
            return f
    return None


def rational_fit(samples, caps: tuple[int, int] = (2, 2)) -> RationalFunction | None:
    """Exact rational function with total degrees within ``caps`` through every sample.

    Solves the cross-multiplied system ``P(x) - v Q(x) = 0`` for the lowest
    degree pair first, so the result is in lowest terms; every returned
    function is checked against all samples.
    """
    pts = _normalize_samples(samples)
    if not pts:
        raise ValueError("no samples to fit")
    nvars = len(pts[0][0])
    need = min_samples(caps, nvars)
    if len(pts) < need:
        raise ValueError(f"{len(pts)} samples cannot test caps {caps}: need at least {need}")
    # feasibility at the full caps is necessary for every smaller pair
    if not nullspace(
        [[_mono_value(x, a) for a in _monomials(nvars, caps[0])] + [-v * _mono_value(x, b) for b in _monomials(nvars, caps[1])] for x, v in pts]
    ):
        return None
    pairs = sorted(itertools.product(range(caps[0] + 1), range(caps[1] + 1)), key=lambda p: (p[0] + p[1], p[1]))
    for dn, dd in pairs:
        f = _try_fit(pts, nvars, dn, dd)
        if f is not None:
            return _reduce_univariate(f) if nvars == 1 else f
    return None


# ----------------------------------------------------------------------------
# verdicts
# ----------------------------------------------------------------------------


@dataclass
class HornVerdict:
    status: str
    graph: str
    q: int
    window: tuple
    degree_bound: int
    caps: tuple
    evidence: dict

    def to_json_obj(self) -> dict:
        return {
            "graph": self.graph,
            "q": self.q,
            "status": self.status,
            "evidence": self.evidence,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def _pairs_json(m: ExponentVector) -> list:
    return [list(p) for p in m.pairs]


def axis_rays(window: tuple, degree_bound: int, needed: int) -> list[tuple]:
    """``(direction, ray)`` for every fixed support S, direction in S and free coordinate in S.

    The base point is the all-ones vector on ``S``; only supports leaving room
    for ``needed`` samples under the degree bound are listed.
    """
    out = []
    for size in range(1, len(window) + 1):
        if degree_bound - size < needed:
            break
        for s in itertools.combinations(window, size):
            base = ExponentVector({v: 1 for v in s})
            for i in s:
                for j in s:
                    out.append((i, Ray(base, ExponentVector.unit(j))))
    return out


def horn_verdict(
    g: Graph | GraphFamily,
    q: int,
    window: Iterable | None = None,
    degree_bound: int = 8,
    caps: tuple[int, int] = (2, 2),
    ray_length: int | None = None,
) -> HornVerdict:
    """Desk-scale Horn test of ``I(G, x)^{-q}``.

    The coefficient table up to ``degree_bound`` is scanned for zeros, then
    every axis ray with fixed support is fitted, then the diagonal
    composite ray.  The diagonal is read from the table unless
    ``ray_length`` is given, in which case that many diagonal ratios are
    computed exactly past the table.  Rays too short to test ``caps`` are
    counted as skipped.  The result is evidence within these bounds only.
    """
    if q < 1:
        raise ValueError(f"the analysis targets I^(-q) with q >= 1, got q = {q}")
    caps = tuple(caps)
    graph, win = _window(g, window)
    label = _graph_label(g)
    table = coefficient_table(graph, -q, None, degree_bound)
    bounds = {"degree_bound": degree_bound, "window": list(win), "caps": list(caps)}

    def verdict(status, evidence):
        evidence = {**evidence, "bounds": bounds}
        return HornVerdict(status, label, q, win, degree_bound, caps, evidence)

    witness = zero_scan(table)
    if witness is not None:
        return verdict(ZERO_WITNESS, {"m": _pairs_json(witness), "value": "0"})

    need = min_samples(caps)
    fits = []
    skipped = 0
    rays = [("axis", i, ray) for i, ray in axis_rays(win, degree_bound, need)]
    diag = Ray(ExponentVector(), ExponentVector({v: 1 for v in win}))
    rays.append(("diagonal", diag.step, diag))
    for kind, direction, ray in rays:
        if kind == "diagonal" and ray_length is not None:
            samples = diagonal_samples(graph, -q, None, ray_length)
            source = "exact"
        else:
            samples = ratio_samples(table, direction, ray)
            source = "table"
        direction_vec = _as_vec(direction, win)
        if len(samples) < need:
            skipped += 1
            continue
        fit = rational_fit(samples, caps)
        ray_info = {
            "kind": kind,
            "direction": _pairs_json(direction_vec),
            "ray": ray.to_json_obj(),
            "parameter": ray.parameter_vertex,
            "samples": len(samples),
            "source": source,
        }
        if fit is None:
            ray_info["values"] = [[s.t, format_rational(s.value)] for s in samples]
            return verdict(RATIO_FIT_FAILED, {"ray": ray_info, "rays_fitted": len(fits)})
        ray_info["ratio"] = fit.to_string([f"m{ray.parameter_vertex}"])
        fits.append(ray_info)
    return verdict(HORN_CONSISTENT, {"rays_fitted": len(fits), "rays_skipped": skipped, "fits": fits})
