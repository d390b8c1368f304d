import pytest

from homhopf.catalog import (catalog, h4_sign_endo, sweedler_h4,
                             z2_group_algebra, z3_group_algebra)
from homhopf.double import drinfeld_double, dual_algebra, functor_g
from homhopf.modules import (adjoint_module_algebra, regular_module,
                             twist_module_structure)
from homhopf.smash import lr_smash


@pytest.fixture(scope="session")
def cat():
    return catalog()


@pytest.fixture(scope="session")
def z2(cat):
    return cat["z2-group"].obj


@pytest.fixture(scope="session")
def h4(cat):
    return cat["h4-sweedler"].obj


@pytest.fixture(scope="session")
def h4t(cat):
    return cat["h4-sweedler-twisted"].obj


@pytest.fixture(scope="session")
def h4_endo(cat):
    return cat["h4-alpha-minus"].obj


@pytest.fixture(scope="session")
def z3gf7(cat):
    return cat["z3-gf7-frobenius"].obj


@pytest.fixture(scope="session")
def dual_h4t(h4t):
    return dual_algebra(h4t)


@pytest.fixture(scope="session")
def smash_h4t(dual_h4t):
    return lr_smash(dual_h4t.bimodule)


@pytest.fixture(scope="session")
def dbl(h4t):
    return drinfeld_double(h4t)


@pytest.fixture(scope="session")
def reg_double_module(dbl):
    return regular_module(dbl.hopf)


@pytest.fixture(scope="session")
def yd16(dbl, reg_double_module):
    return functor_g(dbl, reg_double_module)


@pytest.fixture(scope="session")
def adj_left(h4, h4t, h4_endo):
    return twist_module_structure(adjoint_module_algebra(h4, "left"),
                                  h4_endo, h4_endo, twisted_base=h4t)


@pytest.fixture(scope="session")
def adj_right(h4, h4t, h4_endo):
    return twist_module_structure(adjoint_module_algebra(h4, "right"),
                                  h4_endo, h4_endo, twisted_base=h4t)
