"""Tests for stratification posets"""

import os
import sys

import pytest
from hypothesis import given, settings

sys.path.append(os.path.join(os.path.dirname(__file__), '../'))

from packages.strata.errors import (
    CycleError,
    DimOrderError,
    DuplicateStratum,
    NoDenseStratum,
    UnknownStratum,
)
from packages.strata.poset import (
    build_poset,
    closure_subspace,
    down_set,
    is_closed,
    linear_extension,
    restrict_poset,
)
from strategies import posets


def test_singleton_is_its_own_dense_stratum():
    """A single stratum is dense and has no comparable pairs"""
    space = build_poset([("Y", 1, 2)], [])
    assert space.dense == "Y"
    assert space.comparable_pairs() == []
    assert down_set(space, "Y") == frozenset({"Y"})


def test_canonical_order_sorts_by_dimension_then_id():
    space = build_poset([("c", 2, 0), ("b", 1, 0), ("a", 1, 0), ("p", 0, 1)], [("p", "a"), ("a", "c"), ("b", "c")])
    assert space.strata == ("p", "a", "b", "c")
    assert linear_extension(space) == ["p", "a", "b", "c"]


def test_order_is_transitively_closed():
    """p < a < c gives p < c without listing it"""
    space = build_poset([("p", 0, 1), ("a", 1, 0), ("c", 2, 0)], [("p", "a"), ("a", "c")])
    assert space.lt("p", "c")
    assert space.strictly_below("c") == ["p", "a"]
    assert space.strictly_above("p") == ["a", "c"]
    assert space.covering_pairs() == [("p", "a"), ("a", "c")]


def test_cycle_is_rejected():
    with pytest.raises(CycleError) as info:
        build_poset([("a", 0, 1), ("b", 1, 1)], [("a", "b"), ("b", "a")])
    assert set(info.value.cycle) == {"a", "b"}


def test_dimension_must_strictly_increase():
    with pytest.raises(DimOrderError):
        build_poset([("a", 1, 1), ("b", 1, 1)], [("a", "b")])


def test_duplicate_and_unknown_strata():
    with pytest.raises(DuplicateStratum):
        build_poset([("a", 0, 1), ("a", 1, 1)], [])
    with pytest.raises(UnknownStratum):
        build_poset([("a", 0, 1)], [("a", "ghost")])


def test_no_dense_stratum_for_two_maxima():
    space = build_poset([("W", 0, 1), ("A", 1, 0), ("B", 1, 0)], [("W", "A"), ("W", "B")])
    assert space.dense is None
    with pytest.raises(NoDenseStratum):
        space.require_dense()


def test_declared_dense_must_be_maximum():
    with pytest.raises(NoDenseStratum):
        build_poset([("p", 0, 1), ("S", 1, 0)], [("p", "S")], dense="p")


def test_closed_subsets_are_down_sets(diamond):
    space = diamond.target
    assert is_closed(space, ["W", "A"])
    assert not is_closed(space, ["A"])
    assert is_closed(space, [])


def test_closure_subspace_makes_the_stratum_dense(diamond):
    sub = closure_subspace(diamond.target, "A")
    assert sub.strata == ("W", "A")
    assert sub.dense == "A"
    assert sub.chi_c == {"W": 1, "A": 1}


def test_restriction_keeps_induced_order(diamond):
    sub = restrict_poset(diamond.target, ["W", "S"])
    assert sub.lt("W", "S")
    assert sub.dense == "S"


@settings(max_examples=200, deadline=None)
@given(posets())
def test_order_is_antisymmetric_and_dimension_monotone(space):
    """Random posets satisfy the frontier-order invariants"""
    for lower, upper in space.comparable_pairs():
        assert not space.leq(upper, lower)
        assert space.complex_dim[lower] < space.complex_dim[upper]
    for stratum in space.strata:
        assert space.leq(stratum, space.dense)


@settings(max_examples=200, deadline=None)
@given(posets(dense=False))
def test_down_sets_grow_along_the_order(space):
    for lower, upper in space.comparable_pairs():
        assert down_set(space, lower) <= down_set(space, upper)
    for stratum in space.strata:
        assert stratum in down_set(space, stratum)


@settings(max_examples=200, deadline=None)
@given(posets(dense=False))
def test_rebuilding_from_the_closed_order_changes_nothing(space):
    """Closing an already closed order is the identity; so is rebuilding from the Hasse edges"""
    strata = [(s, space.complex_dim[s], space.chi_c[s]) for s in space.strata]
    assert build_poset(strata, space.comparable_pairs()) == space
    assert build_poset(strata, space.covering_pairs()) == space


if __name__ == "__main__":
    pytest.main([__file__])
