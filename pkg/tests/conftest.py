from fractions import Fraction as Q

import pytest

from weylblocks import build_root_system, integral_datum


@pytest.fixture(scope="session")
def a1():
    return build_root_system("A1")


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A2")


@pytest.fixture(scope="session")
def a3():
    return build_root_system("A3")


@pytest.fixture(scope="session")
def b2():
    return build_root_system("B2")


@pytest.fixture(scope="session")
def a3_block(a3):
    """The half-integral middle-node block of A3 used throughout."""
    return integral_datum(a3, (Q(0), Q(1, 2), Q(0)))


def w(*coords):
    """Shorthand for an exact weight."""
    return tuple(Q(c) for c in coords)
