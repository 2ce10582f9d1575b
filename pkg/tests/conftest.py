import pytest

from mu_spectra import fixtures, petersen


@pytest.fixture(scope="session")
def P():
    return petersen()


@pytest.fixture(scope="session")
def catalog():
    return fixtures()
