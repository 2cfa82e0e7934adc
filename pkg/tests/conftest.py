import pytest

from batres.params_transforms import PhysicalParams


@pytest.fixture
def unit():
    """gamma = omega = hbar = 1."""
    return PhysicalParams(1.0, 1.0, 1.0)


@pytest.fixture
def p_half_two():
    """gamma = 0.5, omega = 2, hbar = 1."""
    return PhysicalParams(0.5, 2.0, 1.0)
