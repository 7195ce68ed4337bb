"""The eight acceptance criteria, run at full size.

Each test prints one ``ACCEPTANCE <k> PASS|FAIL`` line (visible under
``pytest -v``) and then asserts.  All comparisons are exact.

Sign convention: ``I(G, x)`` has all coefficients +1.  The bridge and PEO
identities are checked in the form that holds for the alternating series
``I(G, -x)``, and the equivalent plain-series form is checked alongside
(see the closed_forms module docstring).
"""

import time

import pytest

from chorn import (
    build_graph,
    cycle_diagonal_q1,
    family_graph,
    find_peo,
    horn_verdict,
    independence_series,
    peo_inverse_power_coefficient,
    series_int_power,
    series_invert,
)
from chorn.graphs import all_labeled_graphs, is_chordal_bruteforce
from chorn.horn import HORN_CONSISTENT, RATIO_FIT_FAILED
from chorn.verify import (
    exponent_vectors,
    family_members,
    labeled_graphs_upto,
    suite_bridge,
    suite_chordal,
    suite_chromatic,
    suite_collapse,
    suite_peo,
    suite_read,
    unlabeled_graphs_upto,
)


@pytest.fixture
def report(capsys):
    def emit(k, title, ok, detail, elapsed, budget=None):
        within = budget is None or elapsed < budget
        status = "PASS" if ok and within else "FAIL"
        limit = f" (budget {budget}s)" if budget else ""
        with capsys.disabled():
            print(f"\nACCEPTANCE {k} {status}: {title}; {detail}; {elapsed:.1f}s{limit}")
        return ok and within

    return emit


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_bridge_identity(report):
    graphs = family_members(5) + labeled_graphs_upto(4)
    assert sum(1 for name, _ in graphs if name.startswith("labeled:4:")) == 64
    res, dt = _timed(lambda: suite_bridge(graphs, range(-3, 4), 4))
    ok = report(1, "bridge identity", res.ok, f"{res.passed} checks, {res.failed} failures {res.failures[:3]}", dt, 60)
    assert ok


def test_criterion_2_peo_closed_form(report):
    def run():
        chordal = [g for g in unlabeled_graphs_upto(6) if is_chordal_bruteforce(g)]
        res = suite_peo(chordal, (1, 2, 3), 6)
        # plain-series form, on the densest chordal class per vertex count:
        # I(G,x)^-q [x^m] = (-1)^|m| * product
        for n in range(1, 7):
            g = max((h for h in chordal if h.n == n), key=lambda h: len(h.edge_list()))
            peo = find_peo(g)
            inv = series_int_power(independence_series(g, None, 6), -2)
            for m in exponent_vectors(g, 6):
                res.check(peo_inverse_power_coefficient(g, peo, m, 2) == inv.coefficient(m), f"plain form {g!r} {m!r}")
        return chordal, res

    (chordal, res), dt = _timed(run)
    ok = report(2, "PEO closed form", res.ok, f"{len(chordal)} chordal classes, {res.passed} checks, {res.failed} failures {res.failures[:3]}", dt, 120)
    assert ok


def test_criterion_3_read_cycle_formula(report):
    res, dt = _timed(lambda: suite_read((3, 4, 5), 2, range(1, 6)))
    ok = report(3, "Read's cycle formula", res.ok, f"{res.passed} checks, {res.failed} failures {res.failures[:3]}", dt, 60)
    assert ok


def test_criterion_4_diagonal_values(report):
    def run():
        c4 = family_graph("C", 4)
        inv = series_invert(independence_series(c4, None, 8))
        return (
            cycle_diagonal_q1(4, 1),
            cycle_diagonal_q1(4, 2),
            int(inv.coefficient((1, 1, 1, 1))),
            int(inv.coefficient((2, 2, 2, 2))),
        )

    vals, dt = _timed(run)
    ok = report(4, "cycle diagonal values", vals == (14, 786, 14, 786), f"formula {vals[:2]}, inversion {vals[2:]}", dt, 30)
    assert ok


def test_criterion_5_one_variable_data(report):
    res, dt = _timed(lambda: suite_collapse(10))
    ok = report(5, "one-variable collapse and recursions", res.ok, f"{res.passed} checks, {res.failed} failures {res.failures[:3]}", dt)
    assert ok


def test_criterion_6_chordality_equivalence(report):
    def run():
        count = sum(1 for _ in all_labeled_graphs(5))
        return count, suite_chordal(5)

    (count, res), dt = _timed(run)
    ok = report(6, "find_peo vs brute-force chordality", res.ok and count == 1024, f"{count} graphs, {res.passed} checks, {res.failed} failures", dt, 30)
    assert ok


def test_criterion_7_horn_dichotomy(report):
    def run():
        bad = []
        consistent = 0
        chordal = [family_graph(k, n) for k in ("P", "S", "K") for n in range(1, 7)]
        chordal.append(build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]))
        for g in chordal:
            for q in (1, 2):
                v = horn_verdict(g, q, None, 8, (2, 2))
                if v.status == HORN_CONSISTENT:
                    consistent += 1
                else:
                    bad.append((repr(g), q, v.status))
        refuted = 0
        for n in (4, 5, 6):
            v = horn_verdict(family_graph("C", n), 1, None, 12, (4, 4), ray_length=10)
            ray = v.evidence.get("ray", {})
            if v.status == RATIO_FIT_FAILED and ray.get("kind") == "diagonal" and ray.get("samples", 0) >= 10:
                refuted += 1
            else:
                bad.append((f"C_{n}", 1, v.status))
        return consistent, refuted, bad

    (consistent, refuted, bad), dt = _timed(run)
    ok = report(7, "Horn dichotomy at desk scale", not bad, f"{consistent} consistent, {refuted} cycle refutations, unexpected {bad}", dt, 600)
    assert ok


def test_criterion_8_three_route_agreement(report):
    res, dt = _timed(lambda: suite_chromatic(labeled_graphs_upto(4), 4))
    ok = report(8, "three chromatic routes agree", res.ok, f"{res.passed} checks, {res.failed} failures {res.failures[:3]}", dt)
    assert ok
