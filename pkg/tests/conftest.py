"""Shared fixtures.

The symbolic pipeline on the three-parameter family (connection, curvature,
covariant derivative of R) takes a couple of seconds, so everything derived
from it is computed once per session and shared read-only across modules.
"""

from pathlib import Path

import pytest

from nordenlab import (
    AlmostNordenAlgebra,
    LieAlgebra,
    Table1Family,
    build_table1,
    curvature_R,
    levi_civita,
    nabla_R,
    ricci_and_scalar,
)

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def family() -> Table1Family:
    return build_table1()


@pytest.fixture(scope="session")
def falg(family):
    return family.algebra


@pytest.fixture(scope="session")
def ftensor(falg):
    return falg.tensor_F()


@pytest.fixture(scope="session")
def fconn(falg):
    return levi_civita(falg)


@pytest.fixture(scope="session")
def fcurv(falg, fconn):
    return curvature_R(falg, fconn)


@pytest.fixture(scope="session")
def fricci(falg, fcurv):
    return ricci_and_scalar(falg, fcurv)


@pytest.fixture(scope="session")
def fnabla_r(falg, fconn, fcurv):
    return nabla_R(falg, fconn, fcurv)


@pytest.fixture(scope="session")
def abelian6() -> AlmostNordenAlgebra:
    return AlmostNordenAlgebra(LieAlgebra.abelian(6))


@pytest.fixture(scope="session")
def affine6() -> AlmostNordenAlgebra:
    # [X1, X2] = X1 padded to six dimensions; the default metric on it is
    # not invariant, so this exercises the general Koszul branch.
    return AlmostNordenAlgebra(LieAlgebra.from_brackets(6, (), {(1, 2): {1: 1}}))


@pytest.fixture(scope="session")
def heisenberg6() -> AlmostNordenAlgebra:
    # [X1, X2] = X3 padded to six dimensions; nilpotent, not locally
    # symmetric, useful wherever a nonzero nabla-R is needed.
    return AlmostNordenAlgebra(LieAlgebra.from_brackets(6, (), {(1, 2): {3: 1}}))


@pytest.fixture(scope="session")
def spec_fixture_path() -> Path:
    return DATA_DIR / "table1.spec"
