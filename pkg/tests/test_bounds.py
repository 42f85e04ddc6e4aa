import math

import pytest
from hypothesis import given, strategies as st

from heawood import bounds
from heawood.bounds import (
    BoundResult,
    bound_table,
    bound_table_markdown,
    empire_upper,
    heawood_upper,
    known_value,
    simplified_upper,
    slack,
    uniform_slack,
    vertex_removal_budget,
)
from heawood.errors import HeawoodError


def float_reference(a, disc):
    return math.floor((a + math.sqrt(disc)) / 2)


@pytest.mark.parametrize("chi,colours", [(0, 7), (-2, 8), (-4, 9), (-6, 10), (-10, 12)])
def test_heawood_values(chi, colours):
    assert heawood_upper(chi) == colours


def test_heawood_needs_nonpositive_chi():
    with pytest.raises(HeawoodError, match="χ ≤ 0"):
        heawood_upper(2)


@given(st.integers(0, 2000), st.integers(1, 60))
def test_empire_upper_against_float(g, m):
    a = 6 * m + 1
    assert empire_upper(g, m) == float_reference(a, a * a + 48 * g - 48)


def test_empire_upper_on_sphere():
    assert [empire_upper(0, m) for m in range(1, 6)] == [4, 12, 18, 24, 30]


@given(st.integers(1, 500))
def test_m1_is_heawood(g):
    assert empire_upper(g, 1) == heawood_upper(2 - 2 * g)


@given(st.integers(0, 40), st.integers(1, 40))
def test_simplified_upper_agrees(g, m):
    s = simplified_upper(g, m)
    if s is not None and g >= 1:
        assert empire_upper(g, m) == s


def test_simplified_upper_cases():
    assert simplified_upper(0, 3) == 18
    assert simplified_upper(2, 2) == 13
    assert simplified_upper(3, 2) is None


@pytest.mark.parametrize(
    "g,m,value,rule",
    [
        (0, 1, 4, bounds.FOUR_COLOUR),
        (0, 3, 18, bounds.WESSEL_PLANE),
        (1, 2, 13, bounds.WESSEL_TORUS),
        (2, 1, 8, bounds.MAP_COLOUR),
        (2, 2, 13, bounds.MONOTONE_LIFT),
        (3, 2, 14, bounds.TRIPLE_TORUS_2PIRE),
        (3, 4, 25, bounds.MONOTONE_LIFT),
    ],
)
def test_known_exact_values(g, m, value, rule):
    r = known_value(g, m)
    assert r.status == "exact"
    assert r.lower == r.upper == value
    assert rule in r.provenance
    assert not r.conjectured_exact


def test_open_case():
    r = known_value(3, 3)
    assert r.status == "open-interval"
    assert (r.lower, r.upper) == (19, 20)
    assert r.conjectured_exact


@given(st.integers(0, 30), st.integers(1, 12))
def test_known_value_within_heawood(g, m):
    r = known_value(g, m)
    assert r.upper <= empire_upper(g, m)
    if g >= 1:
        assert r.lower is None or r.lower >= known_value(g - 1, m).lower


def test_bound_result_rejects_inverted_interval():
    with pytest.raises(HeawoodError):
        BoundResult(1, 1, 9, 7)


def test_table_shapes():
    assert len(bound_table(3, 4)) == 16
    md = bound_table_markdown(3, 3)
    assert md.splitlines()[2] == "| 0 | 4 | 12 | 18 |"
    assert "19–20" in md


def test_slack_values():
    assert slack(91, 59) == 5
    assert uniform_slack(3, 2) == 5
    assert uniform_slack(3, 3) == 2
    assert vertex_removal_budget(3, 2) == 1
    assert [uniform_slack(1, m) for m in range(1, 7)] == [0] * 6


def test_slack_nonnegative_grid():
    assert min(uniform_slack(g, m) for g in range(1, 51) for m in range(1, 11)) >= 0


def test_slack_needs_positive_genus():
    with pytest.raises(HeawoodError):
        uniform_slack(0, 2)
