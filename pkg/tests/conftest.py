import pytest

from crankq.etaq import named_series


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running end-to-end checks")


@pytest.fixture(scope="session", autouse=True)
def warm_shared_series():
    # Compute the big shared series once at their suite-wide maxima so
    # individual tests reuse the cache instead of growing it piecemeal.
    named_series("C", 2520)
    named_series("a", 1802)
    named_series("p", 1107)
