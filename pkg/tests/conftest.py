import pytest
from hypothesis import HealthCheck, settings

from charsum.field import make_field

settings.register_profile(
    "ci",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

_CTX_CACHE = {}


def field(p, n=1):
    """Session-cached field contexts; construction and tables are reused."""
    key = (p, n)
    if key not in _CTX_CACHE:
        _CTX_CACHE[key] = make_field(p, n)
    return _CTX_CACHE[key]


@pytest.fixture(scope="session")
def f13():
    return field(13)


@pytest.fixture(scope="session")
def f17():
    return field(17)


@pytest.fixture(scope="session")
def f19():
    return field(19)


@pytest.fixture(scope="session")
def f37():
    return field(37)


@pytest.fixture(scope="session")
def f9():
    return field(3, 2)


@pytest.fixture(scope="session")
def f25():
    return field(5, 2)


@pytest.fixture(scope="session")
def f27():
    return field(3, 3)
