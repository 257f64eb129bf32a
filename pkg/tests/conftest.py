"""Shared fixtures: the catalog spaces and maps as calculus objects"""

import os
import sys

import pytest

sys.path.append(os.path.join(os.path.dirname(__file__), '../'))

from apps.cli.documents.loader import load_input
from packages.strata.arith import set_int_bits


@pytest.fixture(autouse=True)
def default_int_bits():
    """Every test starts from the default 64-bit checked range"""
    set_int_bits(64)
    yield
    set_int_bits(64)


@pytest.fixture
def blow_up():
    return load_input("catalog:blow-up")


@pytest.fixture
def nodal_cubic():
    return load_input("catalog:nodal-cubic")


@pytest.fixture
def normalization():
    return load_input("catalog:nodal-normalization")


@pytest.fixture
def three_chain():
    return load_input("catalog:three-chain")


@pytest.fixture
def diamond():
    return load_input("catalog:diamond")


@pytest.fixture
def singleton():
    return load_input("catalog:smooth-singleton")
