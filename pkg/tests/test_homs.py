"""Tests for homomorphisms given on a basis and the class-level formulas"""

import os
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.append(os.path.join(os.path.dirname(__file__), '../'))

from packages.strata import formal
from packages.strata.class_formulas import verify_class_formula, verify_degree
from packages.strata.errors import InputError, MissingLinkData
from packages.strata.functions import closed_indicator, constant, decompose_closed, euler, hat_closed, zero
from packages.strata.homs import (
    chi_hom,
    evaluate,
    hat_value,
    ichat_value,
    ichi_hom,
    ic_universal_hom,
    universal_hom,
)
from packages.strata.ic import build_link_system, hat_ic
from packages.strata.pushforward import verify_chi_mult, verify_compare, verify_ichi_mult
from strategies import functions, kernels, linked_posets


def test_chi_on_the_nodal_cubic(nodal_cubic):
    assert evaluate(chi_hom(nodal_cubic.target), constant(nodal_cubic.target, 1)) == 1


def test_universal_class_of_a_closed_indicator(diamond):
    phi = universal_hom(diamond.target)
    assert evaluate(phi, closed_indicator(diamond.target, "A")) == formal.symbol(formal.CLOSED, "A")
    assert evaluate(phi, zero(diamond.target)) == 0


def test_hat_values(blow_up, diamond):
    """chi-hat of a closure is chi_c of its top stratum"""
    assert hat_value(chi_hom(blow_up.target), "p") == 1
    assert hat_value(chi_hom(blow_up.target), "S") == 2
    phi = universal_hom(diamond.target)
    assert hat_value(phi, "W") == formal.symbol(formal.CLOSED, "W")
    assert hat_value(phi, "A") == evaluate(phi, hat_closed(diamond.target, "A").recompose())


def test_ichat_values(nodal_cubic):
    links = nodal_cubic.target_links
    assert ichat_value(links, ichi_hom(links), "node") == 1
    assert ichat_value(links, ichi_hom(links), "S") == 0
    expected = formal.FormalClass(formal.IC, {"S": 1, "node": -2})
    assert ichat_value(links, ic_universal_hom(links), "S") == expected


def test_symbol_families_do_not_mix():
    with pytest.raises(TypeError):
        formal.symbol(formal.CLOSED, "S") + formal.symbol(formal.IC, "S")


def test_formal_class_rendering():
    cls = formal.FormalClass(formal.CLOSED, {"S": 1, "p": -2})
    assert str(cls) == "c*[S] - 2·c*[p]"
    assert cls.to_dict() == {"family": "closed", "terms": {"S": 1, "p": -2}}


def test_blow_up_class_formula(blow_up):
    """f_* c_*(X) = c_*(Y) + c-hat(p)"""
    report = verify_class_formula("eq7", blow_up.kernel, None)
    assert report.passed
    assert report.left == formal.FormalClass(formal.CLOSED, {"S": 1, "p": 1})
    assert report.right == report.left


def test_blow_up_ic_class_formula(blow_up):
    report = verify_class_formula("eq16", blow_up.kernel, None, blow_up.target_links)
    assert report.passed
    assert report.left == formal.FormalClass(formal.IC, {"S": 1, "p": 1})


def test_nodal_cubic_class_comparison(nodal_cubic):
    """c_*(Y) = Ic_*(Y) - Ic-hat(node)"""
    report = verify_class_formula("c2", None, None, nodal_cubic.target_links)
    assert report.passed
    assert report.left == formal.FormalClass(formal.IC, {"S": 1, "node": -1})


def test_normalization_class_formula(normalization):
    report = verify_class_formula(
        "eq18", normalization.kernel, None, normalization.target_links, source_links=normalization.source_links,
    )
    assert report.passed
    assert report.left == formal.symbol(formal.IC, "S")


def test_class_formula_argument_errors(blow_up):
    with pytest.raises(InputError):
        verify_class_formula("eq99", blow_up.kernel, None)
    with pytest.raises(MissingLinkData):
        verify_class_formula("c2", None, None)
    with pytest.raises(InputError):
        verify_class_formula("eq18", blow_up.kernel, None, blow_up.target_links)


def test_numeric_substitution_reproduces_chi_reports(blow_up, nodal_cubic):
    chi = chi_hom(blow_up.target)
    numeric = verify_class_formula("eq7", blow_up.kernel, None, hom=chi)
    assert (numeric.left, numeric.right) == (4, 4)
    assert numeric.terms == verify_chi_mult(blow_up.kernel).terms
    compare = verify_class_formula("c2", None, None, nodal_cubic.target_links, hom=ichi_hom(nodal_cubic.target_links))
    assert compare.terms == verify_compare(nodal_cubic.target_links).terms


def test_degree(diamond):
    alpha = constant(diamond.target, 1)
    assert verify_degree(alpha).passed
    assert verify_degree(alpha, diamond.target_links).passed
    assert verify_degree(alpha).right == 3


def test_missing_links_for_ic_hom(nodal_cubic):
    partial = build_link_system(nodal_cubic.target)
    with pytest.raises(MissingLinkData):
        ichat_value(partial, universal_hom(nodal_cubic.target), "S")


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_evaluate_is_linear(data):
    space, links = data.draw(linked_posets())
    alpha = data.draw(functions(space))
    beta = data.draw(functions(space))
    for phi in (universal_hom(space), ic_universal_hom(links), chi_hom(space)):
        assert evaluate(phi, alpha * 3 + beta) == evaluate(phi, alpha) * 3 + evaluate(phi, beta)
    assert evaluate(chi_hom(space), alpha) == euler(alpha) == evaluate(ichi_hom(links), alpha)


@settings(max_examples=200, deadline=None)
@given(linked_posets())
def test_hat_values_are_top_stratum_chi(space_and_links):
    space, links = space_and_links
    for stratum in space.strata:
        assert hat_value(chi_hom(space), stratum) == space.chi_c[stratum]
        assert ichat_value(links, ichi_hom(links), stratum) == space.chi_c[stratum]
        universal = ichat_value(links, ic_universal_hom(links), stratum)
        assert universal == formal.FormalClass(formal.IC, hat_ic(links, stratum).coefficients)
        assert hat_value(universal_hom(space), stratum) == formal.FormalClass(
            formal.CLOSED, decompose_closed(hat_closed(space, stratum).recompose()).coefficients,
        )


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_class_formulas_hold_universally(data):
    """Class formulas hold coefficientwise and specialize under chi"""
    kernel, links = data.draw(kernels())
    alpha = data.draw(functions(kernel.source))
    for which in ("eq5", "eq14"):
        assert verify_class_formula(which, kernel, alpha, links).passed
    for which in ("eq7", "eq16"):
        assert verify_class_formula(which, kernel, None, links).passed
    assert verify_class_formula("c2", None, None, links).passed
    chi = chi_hom(kernel.target)
    numeric = verify_class_formula("eq14", kernel, alpha, links, hom=chi)
    reference = verify_ichi_mult(kernel, alpha, links, "eq13")
    assert (numeric.left, numeric.right) == (reference.left, reference.right)
    assert verify_degree(alpha).passed


if __name__ == "__main__":
    pytest.main([__file__])
