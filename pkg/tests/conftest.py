import pytest

from ambizone import construct_a, construct_b, construct_c, exp_mapping, power_permutation


@pytest.fixture(scope="session")
def family_a_set():
    """13 sequences of length 169: M=1, N=13, K=3, permutation x -> x^5 mod 13."""
    return construct_a(1, 13, 3, power_permutation(13, 5))


@pytest.fixture(scope="session")
def comb_set():
    """5 comb-spectrum sequences of length 105: K=4, N=5, P=1."""
    return construct_b(4, 5, 1)


@pytest.fixture(scope="session")
def laz_p5_set():
    """5 sequences of length 20 from the exponential mapping with alpha=3."""
    return construct_c(5, exp_mapping(5, 3))
