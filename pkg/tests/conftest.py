"""Shared fixtures: the reference bases exercised throughout the suite."""

from fractions import Fraction as F

import pytest

from negabeta.numerics import BetaSpec, beta_from_poly, beta_from_rational


def golden() -> BetaSpec:
    return beta_from_poly([F(-1), F(-1), F(1)], F(1), F(2))


def plastic() -> BetaSpec:
    # largest root of x^3 - x - 1 (first base of the cascade below golden)
    return beta_from_poly([F(-1), F(-1), F(0), F(1)], F(1), F(2))


def quintic() -> BetaSpec:
    # root of x^5 - 2x^4 - 2x^3 - x^2 + x + 1 in (2, 3); its left-endpoint
    # expansion is 2012 followed by repeating 1
    return beta_from_poly([F(1), F(1), F(-1), F(-2), F(-2), F(1)], F(2), F(3))


def quartic_302() -> BetaSpec:
    # root of x^4 - 3x^3 - 3x^2 - 2x - 1 in (3, 4); expansion 302 then
    # repeating 1
    return beta_from_poly([F(-1), F(-2), F(-3), F(-3), F(1)], F(3), F(4))


@pytest.fixture(scope="session")
def base_matrix():
    """The seven bases used by the oracle-equivalence battery."""
    return {
        "2": beta_from_rational(2, 1),
        "5/2": beta_from_rational(5, 2),
        "3": beta_from_rational(3, 1),
        "golden": golden(),
        "plastic": plastic(),
        "13/10": beta_from_rational(13, 10),
        "3/2": beta_from_rational(3, 2),
    }


@pytest.fixture(scope="session")
def beta_golden():
    return golden()


@pytest.fixture(scope="session")
def beta_plastic():
    return plastic()


@pytest.fixture(scope="session")
def beta_quintic():
    return quintic()


@pytest.fixture(scope="session")
def beta_302():
    return quartic_302()
