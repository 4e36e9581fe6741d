"""Shared fixtures"""
import pytest

from rootcluster import constructions
from rootcluster.permcore import DEFAULT_LIMITS, Permutation, closure, subgroup_generated


@pytest.fixture
def limits():
    return DEFAULT_LIMITS


@pytest.fixture
def s4():
    return closure(4, [Permutation.from_cycles(4, "(1 2)"), Permutation.from_cycles(4, "(1 2 3 4)")])


@pytest.fixture
def d4():
    return closure(4, [Permutation.from_cycles(4, "(1 2 3 4)"), Permutation.from_cycles(4, "(2 4)")])


@pytest.fixture
def klein(s4):
    return subgroup_generated(
        s4, [Permutation.from_cycles(4, "(1 2)(3 4)"), Permutation.from_cycles(4, "(1 3)(2 4)")]
    )


@pytest.fixture
def metacyclic12():
    return constructions.metacyclic(12)


@pytest.fixture
def wreath32():
    return constructions.wreathlike(3, 2)


@pytest.fixture
def wreath23():
    return constructions.wreathlike(2, 3)
