import pytest

from germain_lab.constants import twin_prime_constant
from germain_lab.sieve import build_factor_sieve


@pytest.fixture(scope="session")
def spf_100k():
    return build_factor_sieve(10 ** 5)


@pytest.fixture(scope="session")
def c2_1e6():
    return twin_prime_constant(10 ** 6)
