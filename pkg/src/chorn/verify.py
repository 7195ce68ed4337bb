"""Cross-module identity checks, shared by ``chorn verify`` and the test-suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .chromatic import (
    generalized_chromatic,
    generalized_chromatic_via_interpolation,
    generalized_chromatic_via_join,
    multicolor_count_bruteforce,
)
from .closed_forms import (
    cycle_diagonal_q1,
    family_chromatic,
    peo_coefficient,
    read_cycle_chromatic,
)
from .graphs import (
    Graph,
    Kind,
    all_labeled_graphs,
    all_peos,
    build_graph,
    family_graph,
    find_peo,
    is_chordal_bruteforce,
    verify_peo,
)
from .horn import HORN_CONSISTENT, RATIO_FIT_FAILED, horn_verdict
from .series import (
    ExponentVector,
    independence_series,
    monomials_upto,
    one_variable_collapse,
    series_int_power,
    series_invert,
)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, detail: Callable[[], str] | str = "") -> bool:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(detail() if callable(detail) else detail)
        return ok

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json_obj(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "failed": self.failed, "failures": self.failures}


def family_members(max_n: int, kinds: Sequence[str] = ("P", "C", "S", "K")) -> list[tuple[str, Graph]]:
    out = []
    for kind in kinds:
        for n in range(3 if kind == "C" else 1, max_n + 1):
            out.append((f"{kind}:{n}", family_graph(kind, n)))
    return out


def labeled_graphs_upto(max_n: int) -> list[tuple[str, Graph]]:
    out = []
    for n in range(1, max_n + 1):
        for g in all_labeled_graphs(n):
            out.append((f"labeled:{n}:{g.edge_list()}", g))
    return out


def unlabeled_graphs_upto(max_n: int) -> list[Graph]:
    """One representative per isomorphism class, from the networkx graph atlas (n <= 7)."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas covers at most 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= max_n:
            out.append(build_graph(n, [(u + 1, v + 1) for u, v in h.edges()]))
    return out


def exponent_vectors(g: Graph, max_degree: int) -> list[ExponentVector]:
    return [ExponentVector(zip(g.vertices, key)) for key in monomials_upto(g.n, max_degree)]


def _sign(m: ExponentVector) -> int:
    return -1 if m.total_degree % 2 else 1


def suite_bridge(graphs: Iterable[tuple[str, Graph]], qs: Iterable[int] = range(-3, 4), max_degree: int = 4) -> SuiteResult:
    """``I(G,-x)^q [x^m] = (-1)^|m| pi^m(q)`` and ``I(G,x)^q [x^m] = pi^m(q)``."""
    res = SuiteResult("bridge")
    qs = list(qs)
    for name, g in graphs:
        chrom = {m: generalized_chromatic(g, m) for m in exponent_vectors(g, max_degree)}
        signed = independence_series(g, None, max_degree, alternating=True)
        plain = independence_series(g, None, max_degree)
        for q in qs:
            sp = series_int_power(signed, q)
            pp = series_int_power(plain, q)
            for m, poly in chrom.items():
                val = poly(q)
                res.check(
                    sp.coefficient(m) == _sign(m) * val and pp.coefficient(m) == val,
                    lambda: f"{name} q={q} m={m.as_dict()}: {sp.coefficient(m)} vs {_sign(m) * val}",
                )
    return res


def suite_peo(graphs: Iterable[Graph], qs: Iterable[int] = (1, 2, 3), max_degree: int = 6) -> SuiteResult:
    """PEO product against series inversion, on every chordal graph given."""
    res = SuiteResult("peo")
    qs = list(qs)
    for g in graphs:
        if not is_chordal_bruteforce(g):
            continue
        peo = find_peo(g)
        if not res.check(peo is not None, lambda: f"no PEO for chordal {g!r}"):
            continue
        signed = independence_series(g, None, max_degree, alternating=True)
        for q in qs:
            inv = series_int_power(signed, -q)
            for m in exponent_vectors(g, max_degree):
                got = peo_coefficient(g, peo, m, q)
                res.check(got == inv.coefficient(m), lambda: f"{g!r} q={q} m={m.as_dict()}: {got} vs {inv.coefficient(m)}")
    return res


def suite_read(ns: Iterable[int] = (3, 4, 5), max_entry: int = 2, qs: Iterable[int] = range(1, 6)) -> SuiteResult:
    import itertools

    res = SuiteResult("read")
    qs = list(qs)
    for n in ns:
        g = family_graph("C", n)
        for ms in itertools.product(range(max_entry + 1), repeat=n):
            for q in qs:
                want = multicolor_count_bruteforce(g, ms, q)
                got = read_cycle_chromatic(n, ms, q)
                res.check(got == want, lambda: f"C_{n} m={ms} q={q}: Read {got} vs count {want}")
    return res


def suite_diagonal(cases: Iterable[tuple[int, int]] = ((4, 0), (4, 1), (4, 2), (5, 0), (5, 1), (5, 2))) -> SuiteResult:
    res = SuiteResult("diagonal")
    for n, a in cases:
        g = family_graph("C", n)
        inv = series_invert(independence_series(g, None, n * a))
        m = ExponentVector({v: a for v in g.vertices})
        want = inv.coefficient(m)
        got = cycle_diagonal_q1(n, a)
        res.check(got == want, lambda: f"C_{n} a={a}: formula {got} vs series {want}")
    return res


def suite_collapse(max_n: int = 10) -> SuiteResult:
    """One-variable data and the path/cycle recursions."""
    res = SuiteResult("collapse")
    one = lambda kind, n: one_variable_collapse(independence_series(family_graph(kind, n)))
    for kind, n, want in (("C", 3, [1, 3]), ("C", 4, [1, 4, 2]), ("P", 2, [1, 2]), ("P", 1, [1, 1])):
        got = one(kind, n)
        res.check(got == want, lambda: f"{kind}_{n}: {got} vs {want}")

    def shifted_sum(a, b):
        out = [Fraction(0)] * max(len(a), len(b) + 1)
        for k, c in enumerate(a):
            out[k] += c
        for k, c in enumerate(b):
            out[k + 1] += c
        return out

    for kind, lo in (("P", 3), ("C", 5)):
        for n in range(lo, max_n + 1):
            got = one(kind, n)
            want = shifted_sum(one(kind, n - 1), one(kind, n - 2))
            res.check(got == want, lambda: f"{kind}_{n} recursion: {got} vs {want}")
    return res


def suite_chordal(n: int = 5) -> SuiteResult:
    res = SuiteResult("chordal")
    for g in all_labeled_graphs(n):
        peo = find_peo(g)
        res.check((peo is not None) == is_chordal_bruteforce(g), lambda: f"{g!r}")
        if peo is not None:
            res.check(bool(verify_peo(g, peo.order)), lambda: f"bad PEO for {g!r}")
    return res


def suite_chromatic(graphs: Iterable[tuple[str, Graph]], max_degree: int = 4) -> SuiteResult:
    """P_k route, join route and interpolated brute-force counts agree."""
    res = SuiteResult("chromatic")
    for name, g in graphs:
        for m in exponent_vectors(g, max_degree):
            a = generalized_chromatic(g, m)
            b = generalized_chromatic_via_join(g, m)
            c = generalized_chromatic_via_interpolation(g, m)
            res.check(a == b == c, lambda: f"{name} m={m.as_dict()}: {a} | {b} | {c}")
    return res


def suite_families(max_n: int = 5, max_degree: int = 4) -> SuiteResult:
    res = SuiteResult("families")
    for kind in ("P", "S", "K"):
        for n in range(1, max_n + 1):
            g = family_graph(kind, n)
            for m in exponent_vectors(g, max_degree):
                got = family_chromatic(kind, m)
                want = generalized_chromatic(g, m)
                res.check(got == want, lambda: f"{kind}_{n} m={m.as_dict()}: {got} vs {want}")
    return res


def suite_peo_order_independence(graphs: Iterable[Graph], qs=(1, 2, 3), max_degree: int = 5) -> SuiteResult:
    res = SuiteResult("peo-order")
    for g in graphs:
        peos = list(all_peos(g))
        if len(peos) < 2:
            continue
        # the exhaustive list is large for cliques; a spread of orderings suffices
        chosen = peos[:: max(1, len(peos) // 6)]
        for m in exponent_vectors(g, max_degree):
            for q in qs:
                vals = {peo_coefficient(g, p, m, q) for p in chosen}
                res.check(len(vals) == 1, lambda: f"{g!r} m={m.as_dict()} q={q}: {vals}")
    return res


def suite_horn(max_n: int = 5, cycles: Sequence[int] = (4, 5), ray_length: int = 10) -> SuiteResult:
    res = SuiteResult("horn")
    for kind in ("P", "S", "K"):
        for n in range(1, max_n + 1):
            for q in (1, 2):
                v = horn_verdict(family_graph(kind, n), q, None, 8, (2, 2))
                res.check(v.status == HORN_CONSISTENT, lambda: f"{kind}_{n} q={q}: {v.status}")
    for n in cycles:
        v = horn_verdict(family_graph("C", n), 1, None, 12, (4, 4), ray_length=ray_length)
        res.check(
            v.status == RATIO_FIT_FAILED and v.evidence["ray"]["kind"] == "diagonal",
            lambda: f"C_{n}: {v.status}",
        )
    return res


def run_all(max_n: int = 5, seed: int = 0) -> list[SuiteResult]:
    """Every suite, sized by ``max_n``."""
    rng = random.Random(seed)
    small = min(max_n, 4)
    chordal_graphs = [g for g in unlabeled_graphs_upto(min(max_n, 6)) if is_chordal_bruteforce(g)]
    labeled = labeled_graphs_upto(small)
    sample = rng.sample(labeled, min(len(labeled), 40))
    return [
        suite_collapse(10),
        suite_chordal(min(max_n, 5)),
        suite_chromatic(family_members(min(max_n, 4), ("P", "S", "K")) + sample, max_degree=3),
        suite_families(max_n, 3),
        suite_bridge(family_members(max_n) + sample, range(-3, 4), 3),
        suite_peo(chordal_graphs, (1, 2, 3), min(max_n, 5)),
        suite_peo_order_independence([g for g in chordal_graphs if g.n <= 4], max_degree=3),
        suite_read(tuple(n for n in (3, 4, 5) if n <= max_n), 2, range(1, 6)),
        suite_diagonal(),
        suite_horn(max_n, tuple(n for n in (4, 5) if n <= max_n)),
    ]


SUITES = {
    "collapse": lambda max_n, seed: [suite_collapse(10)],
    "chordal": lambda max_n, seed: [suite_chordal(min(max_n, 5))],
    "chromatic": lambda max_n, seed: [suite_chromatic(family_members(min(max_n, 4), ("P", "S", "K")), 3)],
    "families": lambda max_n, seed: [suite_families(max_n, 3)],
    "bridge": lambda max_n, seed: [suite_bridge(family_members(max_n), range(-3, 4), 3)],
    "peo": lambda max_n, seed: [
        suite_peo([g for g in unlabeled_graphs_upto(min(max_n, 6)) if is_chordal_bruteforce(g)], (1, 2, 3), min(max_n, 5))
    ],
    "read": lambda max_n, seed: [suite_read(tuple(n for n in (3, 4, 5) if n <= max_n))],
    "diagonal": lambda max_n, seed: [suite_diagonal()],
    "horn": lambda max_n, seed: [suite_horn(max_n, tuple(n for n in (4, 5) if n <= max_n))],
    "all": lambda max_n, seed: run_all(max_n, seed),
}
