import pytest

from orthoglide import ManipulatorParams


@pytest.fixture
def unit_params() -> ManipulatorParams:
    return ManipulatorParams(L=1.0)
