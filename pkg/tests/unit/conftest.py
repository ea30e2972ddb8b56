# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Fixtures for the toolkit unit tests."""

import numpy as np
import pytest

from groups import FiniteGroup, cyclic, dihedral, symmetric
from state import Limits


@pytest.fixture(scope="session", name="limits")
def limits_fixture() -> Limits:
    """Built-in limits, independent of the environment."""
    return Limits()


@pytest.fixture(scope="function", name="rng")
def rng_fixture(request: pytest.FixtureRequest) -> np.random.Generator:
    """Random source seeded from the --seed option."""
    return np.random.default_rng(request.config.getoption("--seed"))


@pytest.fixture(scope="session", name="z2")
def z2_fixture(limits: Limits) -> FiniteGroup:
    """The cyclic group of order 2."""
    return cyclic(2, limits)


@pytest.fixture(scope="session", name="z3")
def z3_fixture(limits: Limits) -> FiniteGroup:
    """The cyclic group of order 3."""
    return cyclic(3, limits)


@pytest.fixture(scope="session", name="s3")
def s3_fixture(limits: Limits) -> FiniteGroup:
    """The symmetric group on three letters."""
    return symmetric(3, limits)


@pytest.fixture(scope="session", name="d4")
def d4_fixture(limits: Limits) -> FiniteGroup:
    """The dihedral group of order 8."""
    return dihedral(4, limits)


@pytest.fixture(scope="session", name="d8")
def d8_fixture(limits: Limits) -> FiniteGroup:
    """The dihedral group of order 16."""
    return dihedral(8, limits)
