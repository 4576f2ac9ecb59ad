import pytest

from modules.configs import BUILTIN_REGISTRY
from modules.core.field import EISENSTEIN, GAUSSIAN
from modules.core.groupoid import enumerate_generators


@pytest.fixture(scope="session")
def t():
    return EISENSTEIN.gen


@pytest.fixture(scope="session")
def i():
    return GAUSSIAN.gen


@pytest.fixture(scope="session")
def quadric4():
    return BUILTIN_REGISTRY["quadric4"]()


@pytest.fixture(scope="session")
def d4():
    return BUILTIN_REGISTRY["d4"]()


@pytest.fixture(scope="session")
def d4_analysis(d4):
    return enumerate_generators(d4)


@pytest.fixture(scope="session")
def penrose():
    return BUILTIN_REGISTRY["penrose"]()


@pytest.fixture(scope="session")
def penrose_analysis(penrose):
    return enumerate_generators(penrose)


@pytest.fixture(scope="session")
def penrose_half():
    return BUILTIN_REGISTRY["penrose_half"]()


@pytest.fixture(scope="session")
def klein():
    return BUILTIN_REGISTRY["klein"]()


@pytest.fixture(scope="session")
def klein_analysis(klein):
    return enumerate_generators(klein)


@pytest.fixture(scope="session")
def p4_25():
    return BUILTIN_REGISTRY["p4_25"]()
