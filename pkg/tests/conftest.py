import logging

import pytest

from coxeter2d.coxeter.services import a2n
from coxeter2d.parabolic.models import Decomposition


@pytest.fixture(autouse=True)
def reset_package_logger():
    yield
    logger = logging.getLogger("coxeter2d")
    logger.handlers.clear()
    logger.setLevel(logging.NOTSET)


@pytest.fixture
def dec():
    """Shorthand: dec("2,1") -> Decomposition((2, 1))."""
    return Decomposition.parse


@pytest.fixture(scope="session")
def a2():
    return a2n(2)


@pytest.fixture(scope="session")
def a3():
    return a2n(3)
