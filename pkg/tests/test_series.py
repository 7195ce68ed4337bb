from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chorn import (
    ExponentVector,
    TruncatedSeries,
    TruncationError,
    build_graph,
    family_graph,
    independence_series,
    one_variable_collapse,
    series_int_power,
    series_invert,
    series_multiply,
)
from chorn.series import format_rational, monomials_upto, parse_rational


def test_exponent_vector_basics():
    m = ExponentVector.from_dense([1, 0, 2])
    assert m.pairs == ((1, 1), (3, 2))
    assert m.total_degree == 3
    assert m.support() == (1, 3)
    assert m.get(2) == 0
    assert m + ExponentVector.unit(2) == ExponentVector({1: 1, 2: 1, 3: 2})
    assert m.dense((1, 2, 3, 4)) == (1, 0, 2, 0)


def test_monomials_graded():
    monos = list(monomials_upto(2, 2))
    assert monos == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def test_rational_format_roundtrip():
    for x in (Fraction(0), Fraction(7), Fraction(-3, 4)):
        assert parse_rational(format_rational(x)) == x
    assert format_rational(Fraction(14)) == "14"
    assert format_rational(Fraction(-1, 2)) == "-1/2"


def test_independence_series_of_c4(c4):
    s = independence_series(c4)
    assert s.coefficient((1, 0, 1, 0)) == 1
    assert s.coefficient((1, 1, 0, 0)) == 0
    assert s.coefficient((2, 0, 0, 0)) == 0
    assert one_variable_collapse(s) == [1, 4, 2]


def test_alternating_series_signs(c4):
    s = independence_series(c4, alternating=True)
    assert s.coefficient((1, 0, 0, 0)) == -1
    assert s.coefficient((1, 0, 1, 0)) == 1


def test_relevant_vertices_restricts():
    s = independence_series(family_graph("P", 5), [1, 2, 3])
    assert s.variables == (1, 2, 3)
    assert one_variable_collapse(s) == [1, 3, 1]
    assert s.coefficient({5: 1}) == 0


def test_coefficient_above_bound_is_refused(c4):
    s = independence_series(c4, None, 2)
    with pytest.raises(TruncationError, match="insufficient truncation"):
        s.coefficient((1, 1, 1, 0))


def test_inverse_of_c4(c4):
    inv = series_invert(independence_series(c4))
    assert inv.coefficient((1, 1, 1, 1)) == 14
    assert inv.coefficient((1, 0, 0, 0)) == -1
    prod = series_multiply(inv, independence_series(c4))
    assert all(v == (1 if m.total_degree == 0 else 0) for m, v in prod.items())


def test_inverse_needs_nonzero_constant():
    s = TruncatedSeries((1,), 2, {(1,): 1})
    with pytest.raises(ZeroDivisionError):
        series_invert(s)


def test_multiply_rejects_mismatched_bounds(c4):
    with pytest.raises(ValueError):
        series_multiply(independence_series(c4, None, 2), independence_series(c4, None, 3))


def test_single_vertex_powers():
    g = build_graph(1, [])
    s = independence_series(g, None, 5)
    # (1 + x)^-2 = sum (-1)^k (k + 1) x^k
    assert [series_int_power(s, -2).coefficient((k,)) for k in range(6)] == [1, -2, 3, -4, 5, -6]
    assert series_int_power(s, 0).coefficient((0,)) == 1
    assert series_int_power(s, 0).coefficient((3,)) == 0


def test_json_roundtrip(c4):
    s = series_invert(independence_series(c4, None, 3))
    back = TruncatedSeries.from_json_obj(s.to_json_obj(), c4.vertices)
    assert back == s


def _graphs():
    return st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] != e[1]), max_size=6
        ).map(lambda es: build_graph(n, es))
    )


@settings(max_examples=40, deadline=None)
@given(_graphs(), st.integers(-3, 3), st.integers(-3, 3))
def test_power_laws(g, a, b):
    s = independence_series(g, None, 4)
    assert series_multiply(series_int_power(s, a), series_int_power(s, b)) == series_int_power(s, a + b)


@settings(max_examples=40, deadline=None)
@given(_graphs())
def test_collapse_counts_independent_sets(g):
    counts = [0] * (g.n + 1)
    for s in g.independent_sets():
        counts[len(s)] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    assert one_variable_collapse(independence_series(g)) == counts
