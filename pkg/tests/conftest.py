"""Shared fixtures: the witness graphs and derived family data, built once."""

from __future__ import annotations

import pytest

from srgpq.geometry import build_gq35, build_rook4, build_shrikhande
from srgpq.params import FamilyInfo


@pytest.fixture(scope="session")
def rook():
    return build_rook4()


@pytest.fixture(scope="session")
def shrikhande():
    return build_shrikhande()


@pytest.fixture(scope="session")
def gq35():
    return build_gq35()


@pytest.fixture(scope="session")
def fam_gq35():
    return FamilyInfo.from_n_lam(2, 2)


@pytest.fixture(scope="session")
def fam_rook():
    return FamilyInfo.from_n_lam(-2, 2)


@pytest.fixture(scope="session")
def sigma_family(gq35, fam_gq35):
    from srgpq.automorphism import canonical_sigma_family

    return canonical_sigma_family(gq35, fam_gq35, z=0)
