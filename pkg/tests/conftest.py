import pytest

import higher_bell


@pytest.fixture(autouse=True)
def fresh_memo_tables():
    """Every test starts and ends with empty Stirling, Bernoulli, Bell and polynomial memo tables."""
    higher_bell.clear_caches()
    yield
    higher_bell.clear_caches()


@pytest.fixture
def faker_seed():
    # picked up by faker's pytest plugin, keeps the random sample points reproducible
    return 20230225
