from fractions import Fraction

import numpy as np
import pytest

from quasieinstein.catalog import list_cases, make_case, realize


REALIZABLE = [c for c in list_cases(4) if c.realizable]


@pytest.fixture(scope="session")
def sp2():
    case = make_case("SPK_UK", k=2)
    alg, dec = realize(case)
    return case, alg, dec


@pytest.fixture(scope="session")
def su4():
    case = make_case("SU_L1L2", l1=2, l2=2)
    alg, dec = realize(case)
    return case, alg, dec


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def q(text):
    return Fraction(text)
