import pytest

from toeplitz_hulls.config import reset_settings


@pytest.fixture(autouse=True)
def default_settings():
    reset_settings()
    yield
    reset_settings()
