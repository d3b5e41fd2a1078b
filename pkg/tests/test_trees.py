"""Plane-tree enumeration, encodings and statistics."""

import csv
import io

import pytest
from hypothesis import given, strategies as st

from treegrammar.catalog import catalan, motzkin
from treegrammar.poly import parse_poly
from treegrammar.trees import (
    ALL, LEAF, STAT_NAMES, TIP_AUGMENTED, PlaneTree, UnknownStatistic, classify,
    enumerate_trees, histogram, invariant_violations, stats_csv, weight_sum,
)

P = parse_poly

plane_trees = st.recursive(
    st.just(LEAF),
    lambda kids: st.lists(kids, min_size=1, max_size=4).map(PlaneTree),
    max_leaves=12,
)


@pytest.mark.parametrize("n, count", [(0, 1), (3, 5), (10, 16796)])
def test_enumerate_counts(n, count):
    assert len(enumerate_trees(n)) == count


@pytest.mark.parametrize("n", range(1, 10))
def test_tip_augmented_counted_by_motzkin(n):
    # a tip-augmented tree with n+1 edges is a Motzkin path of length n
    assert len(enumerate_trees(n + 1, TIP_AUGMENTED)) == motzkin(n)


def test_tip_augmented_four_edges():
    assert len(enumerate_trees(4, TIP_AUGMENTED)) == 4


@pytest.mark.parametrize("n", range(0, 9))
def test_tip_filter_matches_yint_zero(n):
    kept = tuple(t for t in enumerate_trees(n) if n > 0 and classify(t).yint == 0)
    assert enumerate_trees(n, TIP_AUGMENTED) == kept


@pytest.mark.parametrize("n", range(0, 9))
def test_enumeration_distinct_and_sized(n):
    trees = enumerate_trees(n)
    assert len(set(trees)) == len(trees) == catalan(n)
    assert all(t.edges == n for t in trees)


def test_enumeration_order():
    assert [t.encoding for t in enumerate_trees(3)] == ["()(())", "()()()", "(())()", "((()))", "(()())"]


def test_unknown_filter():
    with pytest.raises(ValueError):
        enumerate_trees(3, "bushy")


@pytest.mark.parametrize(
    "enc, expected",
    [
        ("((()))", dict(sleaf=1, sint=1, yint=2, eleaf=0, yleaf=0, eint=0, yedge=2)),
        ("(()())", dict(eleaf=1, yleaf=1, eint=1, yint=1, sleaf=0, sint=0, yedge=2)),
        ("()()()()", dict(etleaf=1, syleaf=1, yerleaf=2, yedge=3, entleaf=0, yint=0)),
        ("", dict(edges=0, leaf=0, yint=1, interior=1)),
    ],
)
def test_classify_examples(enc, expected):
    s = classify(PlaneTree.decode(enc))
    assert {k: getattr(s, k) for k in expected} == expected


def test_weight_sum_narayana():
    assert weight_sum(3, ALL, {"leaf": "x"}) == P("x + 3*x^2 + x^3")


def test_weight_sum_six_variable():
    spec = {"sleaf": "x11", "eleaf": "x12", "yleaf": "x2", "sint": "y11", "eint": "y12", "yint": "y2"}
    want = P("x11*y11*y2^2 + x12*x2*y12*y2 + x11*x2*y11*y2 + x11*x12*y11*y12 + x12*x2^2*y12")
    assert weight_sum(3, ALL, spec) == want


def test_weight_sum_refined_tip_augmented():
    spec = {"sleaf": "u1", "etleaf": "u2", "entleaf": "u3", "yerleaf": "v1", "syleaf": "v2"}
    assert weight_sum(4, TIP_AUGMENTED, spec) == P("u2*v1^2*v2 + u1*u3*v1 + u1*u2*v2 + u2*u3*v2")


def test_unknown_statistic():
    with pytest.raises(UnknownStatistic):
        weight_sum(2, ALL, {"height": "h"})
    with pytest.raises(UnknownStatistic):
        histogram(2, ALL, ("height",))


@pytest.mark.parametrize("bad", ["(", ")(", "(()", "(x)"])
def test_decode_rejects(bad):
    with pytest.raises(ValueError):
        PlaneTree.decode(bad)


def test_stats_csv():
    rows = list(csv.reader(io.StringIO(stats_csv(enumerate_trees(3)))))
    assert rows[0] == ["encoding", *STAT_NAMES]
    assert len(rows) == 6
    assert rows[4][0] == "((()))"


@given(plane_trees)
def test_encode_round_trip(t):
    assert PlaneTree.decode(t.encode()) == t
    assert PlaneTree.decode(t.encode()).encode() == t.encode()


@given(plane_trees)
def test_invariants_hold(t):
    s = classify(t)
    assert invariant_violations(s, tip_augmented=s.yint == 0 and s.edges > 0) == []


@given(plane_trees)
def test_leaf_count_matches_encoding(t):
    assert classify(t).leaf == t.encoding.count("()")


@pytest.mark.parametrize("n", range(1, 9))
def test_etleaf_equals_syleaf_on_tip_augmented(n):
    assert all(classify(t).etleaf == classify(t).syleaf for t in enumerate_trees(n, TIP_AUGMENTED))


def test_invariant_violations_flags_bad_record():
    good = classify(PlaneTree.decode("(()())"))
    bad = type(good)(**{**good.as_dict(), "leaf": good.leaf + 1})
    assert "leaf = oleaf + yleaf" in invariant_violations(bad)
