"""Tests for constructible functions and the open, closed and hat bases"""

import os
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.append(os.path.join(os.path.dirname(__file__), '../'))

from packages.strata.errors import InputError, NoDenseStratum, SpaceMismatch, UnknownStratum
from packages.strata.functions import (
    Basis,
    closed_indicator,
    constant,
    decompose_closed,
    decompose_hat,
    decompose_hat_dense,
    euler,
    euler_closed,
    from_values,
    hat_closed,
    hat_function,
    indicator,
    restrict,
    verify_additivity,
)
from packages.strata.poset import build_poset
from strategies import functions, posets


def test_euler_of_the_nodal_cubic(nodal_cubic):
    """chi = 1 (node) + 0 (sphere minus two points)"""
    assert euler(constant(nodal_cubic.target, 1)) == 1


def test_closed_indicator_and_hat(diamond):
    space = diamond.target
    assert closed_indicator(space, "A").to_dict() == {"W": 1, "A": 1, "B": 0, "S": 0}
    assert hat_closed(space, "A").coefficients == {"A": 1, "W": -1}
    assert hat_function(space, "S") == indicator(space, "S")


def test_dense_hat_decomposition(diamond):
    """alpha = alpha(S) 1_Y + sum (alpha(V) - alpha(S)) hat(V)"""
    alpha = from_values(diamond.target, {"W": 4, "A": -1, "S": 2})
    decomposition = decompose_hat_dense(alpha)
    assert decomposition.basis == Basis.HAT_DENSE
    assert decomposition.coefficients == {"S": 2, "W": 2, "A": -3, "B": -2}
    assert decomposition.recompose() == alpha


def test_closed_decomposition_round_trip(diamond):
    alpha = from_values(diamond.target, {"W": 1, "B": 5})
    decomposition = decompose_closed(alpha)
    assert decomposition.recompose() == alpha
    assert decomposition.dense_vector() == [-4, 0, 5, 0]


def test_missing_dense_stratum():
    space = build_poset([("W", 0, 1), ("A", 1, 0), ("B", 1, 0)], [("W", "A"), ("W", "B")])
    with pytest.raises(NoDenseStratum):
        decompose_hat_dense(constant(space, 1))


def test_functions_on_different_spaces_do_not_mix(nodal_cubic, diamond):
    with pytest.raises(SpaceMismatch):
        constant(nodal_cubic.target, 1) + constant(diamond.target, 1)


def test_unknown_stratum_in_values(nodal_cubic):
    with pytest.raises(UnknownStratum):
        from_values(nodal_cubic.target, {"cusp": 1})


def test_additivity(diamond):
    report = verify_additivity(diamond.target, ["W", "A"])
    assert report.passed
    assert report.left == euler_closed(diamond.target, ["W", "A", "B", "S"]) == 3


def test_additivity_rejects_open_subset(diamond):
    with pytest.raises(InputError):
        verify_additivity(diamond.target, ["A"])


def test_restrict_and_arithmetic(diamond):
    space = diamond.target
    alpha = from_values(space, {"W": 2, "A": 3, "B": 4, "S": 5})
    assert restrict(alpha, ["A", "S"]).to_dict() == {"W": 0, "A": 3, "B": 0, "S": 5}
    assert (alpha * 2 - alpha) == alpha
    assert str(indicator(space, "W")) == "(W ↦ 1, A ↦ 0, B ↦ 0, S ↦ 0)"


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_bases_recompose_exactly(data):
    """Every basis expansion reproduces the function pointwise"""
    space = data.draw(posets())
    alpha = data.draw(functions(space))
    for decomposition in (decompose_hat(alpha), decompose_hat_dense(alpha), decompose_closed(alpha)):
        assert decomposition.recompose() == alpha


@settings(max_examples=200, deadline=None)
@given(posets())
def test_hat_elements_are_open_indicators(space):
    for stratum in space.strata:
        assert hat_function(space, stratum) == indicator(space, stratum)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_hat_coefficients_and_euler_are_additive(data):
    space = data.draw(posets(dense=False))
    alpha = data.draw(functions(space))
    beta = data.draw(functions(space))
    summed = decompose_hat(alpha) + decompose_hat(beta)
    assert decompose_hat(alpha + beta).dense_vector() == summed.dense_vector()
    assert summed.recompose() == alpha + beta
    assert euler(alpha + beta) == euler(alpha) + euler(beta)
    assert decompose_closed(alpha + beta).dense_vector() == (
        decompose_closed(alpha) + decompose_closed(beta)
    ).dense_vector()


if __name__ == "__main__":
    pytest.main([__file__])
