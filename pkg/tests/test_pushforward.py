"""Tests for proper-map kernels, the pushforward and the multiplicative formulas"""

import os
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.append(os.path.join(os.path.dirname(__file__), '../'))

from packages.strata.errors import InputError, KernelInconsistent, SpaceMismatch
from packages.strata.functions import constant, euler
from packages.strata.ic import ic_function
from packages.strata.poset import build_poset
from packages.strata.pushforward import (
    build_kernel,
    column_defects,
    compose_kernels,
    decompose_pushforward_hat,
    identity_kernel,
    point_kernel,
    pushforward,
    verify_chi_mult,
    verify_compare,
    verify_fibration,
    verify_ic_pushforward,
    verify_ichi_mult,
    verify_pushforward_euler,
)
from strategies import functions, kernels


def test_blow_up_pushforward(blow_up):
    """The exceptional projective line has chi 2"""
    image = pushforward(blow_up.kernel, constant(blow_up.source, 1))
    assert image.to_dict() == {"p": 2, "S": 1}


def test_blow_up_chi_multiplicativity(blow_up):
    """4 = 1*3 + (2-1)*1"""
    report = verify_chi_mult(blow_up.kernel)
    assert report.formula == "eq6"
    assert report.passed
    assert report.left == report.right == 4
    assert [(t.stratum, t.coefficient, t.value) for t in report.terms] == [("S", 1, 3), ("p", 1, 1)]


def test_blow_up_ichi_multiplicativity(blow_up):
    """4 = 1*3 + (2 - 1*1)*1 with a smooth point's cone value 1"""
    report = verify_ichi_mult(blow_up.kernel, None, blow_up.target_links, "eq15")
    assert report.passed
    assert report.left == 4
    assert [(t.stratum, t.coefficient, t.value) for t in report.terms] == [("S", 1, 3), ("p", 1, 1)]


def test_blow_up_hat_decomposition(blow_up):
    report = decompose_pushforward_hat(blow_up.kernel)
    assert report.passed
    assert report.left.to_dict() == {"p": 2, "S": 1}


def test_nodal_cubic_comparison(nodal_cubic):
    """1 = 2 + (1-2)*1"""
    report = verify_compare(nodal_cubic.target_links)
    assert report.passed
    assert report.left == 1
    assert [(t.stratum, t.coefficient, t.value) for t in report.terms] == [("S", 1, 2), ("node", -1, 1)]


def test_normalization_ic_pushforward(normalization):
    """f_*(1_X) = ic_Y and every correction vanishes"""
    report = verify_ic_pushforward(normalization.kernel, None, normalization.target_links)
    assert report.passed
    assert report.left == ic_function(normalization.target_links, "S")
    assert [t.coefficient for t in report.terms] == [1, 0]


def test_normalization_intersection_multiplicativity(normalization):
    """2 = 1*2 + (2-2)*1"""
    report = verify_ichi_mult(
        normalization.kernel, None, normalization.target_links, "eq17", normalization.source_links,
    )
    assert report.passed
    assert report.left == report.right == 2
    assert [(t.coefficient, t.value) for t in report.terms] == [(1, 2), (0, 1)]


def test_identity_on_nodal_cubic_with_ic(nodal_cubic):
    """alpha = ic_Y: 2 = 1*2 + (2-2)*1"""
    links = nodal_cubic.target_links
    report = verify_ichi_mult(identity_kernel(nodal_cubic.target), ic_function(links, "S"), links, "eq13")
    assert report.passed
    assert report.left == 2


def test_identity_specialization_matches_comparison(diamond):
    links = diamond.target_links
    identity = verify_ichi_mult(identity_kernel(diamond.target), None, links, "eq15")
    compare = verify_compare(links)
    assert identity.terms == compare.terms
    assert (identity.left, identity.right) == (compare.left, compare.right)


def test_fibration_over_a_single_stratum(singleton):
    report = verify_fibration(point_kernel(singleton.target))
    assert report.passed
    assert report.left == 2
    with pytest.raises(InputError):
        verify_fibration(identity_kernel(build_poset([("p", 0, 1), ("S", 1, 0)], [("p", "S")])))


def test_inconsistent_kernel_is_rejected(blow_up):
    entries = {("p", "X"): 3, ("S", "X"): 1}
    with pytest.raises(KernelInconsistent) as info:
        build_kernel(blow_up.source, blow_up.target, entries)
    assert info.value.defects == (("X", 5, 4),)


def test_waived_kernel_breaks_the_formula(blow_up):
    kernel = build_kernel(blow_up.source, blow_up.target, {("p", "X"): 3, ("S", "X"): 1}, validate=False)
    assert not kernel.validated
    assert column_defects(kernel) == [("X", 5, 4)]
    report = verify_chi_mult(kernel)
    assert not report.passed
    assert (report.left, report.right) == (4, 5)


def test_pushforward_checks_the_space(blow_up, nodal_cubic):
    with pytest.raises(SpaceMismatch):
        pushforward(blow_up.kernel, constant(nodal_cubic.target, 1))


def test_point_kernel_computes_euler(diamond):
    image = pushforward(point_kernel(diamond.target), constant(diamond.target, 1))
    assert image.to_dict() == {"pt": euler(constant(diamond.target, 1))}


def test_composition_with_the_identity(blow_up):
    composed = compose_kernels(identity_kernel(blow_up.target), blow_up.kernel)
    assert composed.entries == blow_up.kernel.entries
    with pytest.raises(SpaceMismatch):
        compose_kernels(blow_up.kernel, blow_up.kernel)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_formulas_hold_on_random_kernels(data):
    """Every multiplicative formula is an exact identity on consistent kernels"""
    kernel, links = data.draw(kernels())
    alpha = data.draw(functions(kernel.source))
    assert verify_pushforward_euler(kernel, alpha).passed
    assert decompose_pushforward_hat(kernel, alpha).passed
    assert verify_chi_mult(kernel, alpha).passed
    assert verify_chi_mult(kernel).passed
    assert verify_ic_pushforward(kernel, alpha, links).passed
    assert verify_ichi_mult(kernel, alpha, links, "eq13").passed
    assert verify_ichi_mult(kernel, None, links, "eq15").passed
    assert verify_compare(links).passed


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_pushforward_is_functorial(data):
    kernel, _ = data.draw(kernels())
    alpha = data.draw(functions(kernel.source))
    to_point = point_kernel(kernel.target)
    composed = compose_kernels(to_point, kernel)
    assert pushforward(composed, alpha) == pushforward(to_point, pushforward(kernel, alpha))
    assert column_defects(composed) == []


if __name__ == "__main__":
    pytest.main([__file__])
