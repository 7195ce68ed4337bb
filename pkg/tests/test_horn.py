import json
import random
from fractions import Fraction

import pytest
import sympy

from chorn import (
    ExponentVector,
    Ray,
    build_graph,
    coefficient_table,
    cycle_diagonal_q1,
    family_graph,
    find_peo,
    horn_verdict,
    peo_inverse_power_coefficient,
    ratio_samples,
    rational_fit,
    zero_scan,
)
from chorn.horn import HORN_CONSISTENT, RATIO_FIT_FAILED, ZERO_WITNESS, box_coefficients, diagonal_samples, min_samples


def test_table_is_complete(c4):
    t = coefficient_table(c4, -1, None, 4)
    assert len(t.entries) == 70  # monomials of degree <= 4 in 4 variables
    assert t[(1, 1, 1, 1)] == 14


def test_zero_scan_witness(c4):
    assert zero_scan(coefficient_table(c4, 1, None, 4)) == ExponentVector({1: 1, 2: 1})
    assert zero_scan(coefficient_table(c4, -1, None, 6)) is None


def test_zero_scan_on_positive_power():
    # I^1 is a polynomial; adjacent pairs have coefficient 0
    t = coefficient_table(family_graph("K", 2), 1, None, 3)
    assert zero_scan(t) == ExponentVector({1: 1, 2: 1})


def test_box_matches_table(c4):
    box = box_coefficients(c4, -1, 2, None)
    t = coefficient_table(c4, -1, None, 8)
    for key, v in box.items():
        assert t[key] == v


def test_rational_fit_recovers_function():
    f = lambda t: Fraction(t + 2, 2 * t + 1)
    fit = rational_fit([(t, f(t)) for t in range(8)], (2, 2))
    assert fit is not None and fit.degrees == (1, 1)
    for t in range(8, 30):
        assert fit(t) == f(t)


def test_rational_fit_constant():
    fit = rational_fit([(t, Fraction(-1)) for t in range(6)], (2, 2))
    assert fit.degrees == (0, 0) and fit(100) == -1


def test_rational_fit_rejects_exponential():
    assert rational_fit([(t, Fraction(2) ** t) for t in range(8)], (2, 2)) is None


def test_rational_fit_needs_enough_samples():
    assert min_samples((2, 2)) == 6 and min_samples((4, 4)) == 10
    with pytest.raises(ValueError):
        rational_fit([(t, Fraction(1)) for t in range(5)], (2, 2))


def test_fit_reproduces_samples_multivariate():
    pts = [((a, b), Fraction(a + b + 1, a + 1)) for a in range(4) for b in range(4)]
    fit = rational_fit(pts, (1, 1))
    assert all(fit(*x) == v for x, v in pts)


def test_cycle_diagonal_samples_match_formula():
    samples = diagonal_samples(family_graph("C", 4), -1, None, 6)
    for s in samples:
        a = s.t
        assert s.value == Fraction(cycle_diagonal_q1(4, a + 1), cycle_diagonal_q1(4, a))


@pytest.mark.parametrize("n", [4, 5])
def test_cycle_diagonal_infeasible_by_sympy_rank(n):
    # independent check: the cross-multiplied system at caps (4,4) has only the zero solution
    vals = [sympy.Rational(cycle_diagonal_q1(n, a + 1), cycle_diagonal_q1(n, a)) for a in range(12)]
    rows = [[sympy.Integer(a) ** k for k in range(5)] + [-v * sympy.Integer(a) ** k for k in range(5)] for a, v in enumerate(vals)]
    assert sympy.Matrix(rows).rank() == 10
    assert rational_fit([(a, Fraction(int(v.p), int(v.q))) for a, v in enumerate(vals)], (4, 4)) is None


def test_chordal_fits_match_closed_form_ratio():
    rng = random.Random(7)
    g = build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
    peo = find_peo(g)
    q = 2
    table = coefficient_table(g, -q, None, 9)
    for base, direction in [({1: 1, 3: 1}, 1), ({2: 1, 4: 1}, 4), ({1: 1, 2: 1, 3: 1}, 2)]:
        ray = Ray(ExponentVector(base), ExponentVector.unit(direction))
        samples = ratio_samples(table, direction, ray)
        fit = rational_fit(samples, (2, 2))
        assert fit is not None
        for _ in range(20):
            t = rng.randint(0, 40)
            m = ray.point(t)
            want = peo_inverse_power_coefficient(g, peo, m + ExponentVector.unit(direction), q) / peo_inverse_power_coefficient(g, peo, m, q)
            assert fit(m.get(direction)) == want


@pytest.mark.parametrize("kind,n", [("P", 4), ("S", 4), ("K", 3)])
def test_chordal_verdicts(kind, n):
    v = horn_verdict(family_graph(kind, n), 1, None, 8, (2, 2))
    assert v.status == HORN_CONSISTENT
    assert v.evidence["rays_fitted"] > 0


def test_c4_verdict_and_json():
    v = horn_verdict(family_graph("C", 4), 1, None, 12, (4, 4), ray_length=10)
    assert v.status == RATIO_FIT_FAILED
    ev = v.evidence
    assert ev["ray"]["kind"] == "diagonal" and ev["ray"]["samples"] >= 10
    obj = json.loads(v.to_json())
    assert set(obj) == {"graph", "q", "status", "evidence"}
    assert obj["evidence"]["ray"]["values"][0] == [0, "14"]


def test_verdict_deterministic(c4_chord):
    a = horn_verdict(c4_chord, 2, None, 8, (2, 2))
    b = horn_verdict(c4_chord, 2, None, 8, (2, 2))
    assert a.to_json() == b.to_json()


def test_infinite_family_needs_window():
    from chorn import GraphFamily, Kind

    fam = GraphFamily(Kind.PATH_INF)
    v = horn_verdict(fam, 1, [1, 2, 3], 8, (2, 2))
    assert v.status == HORN_CONSISTENT
    assert v.evidence["bounds"]["window"] == [1, 2, 3]


def test_q_must_be_positive(c4):
    with pytest.raises(ValueError):
        horn_verdict(c4, 0)


def test_zero_witness_status_name():
    assert ZERO_WITNESS == "ZeroCoefficientWitness"
