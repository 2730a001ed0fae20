import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def kac_walton_result():
    from a2fusion.symbolic import symbolic_kac_walton

    return symbolic_kac_walton()


@pytest.fixture(scope="session")
def bmw_pieces():
    from a2fusion.symbolic import bmw_symbolic

    return bmw_symbolic()


@pytest.fixture(scope="session")
def multiplicity_table():
    from a2fusion import mult_piecewise_table

    return mult_piecewise_table()
