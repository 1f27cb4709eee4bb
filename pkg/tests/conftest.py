import pytest

from dropkit import RieszParams, ball_constants


@pytest.fixture(scope="session")
def p31():
    return RieszParams(3, 1.0)


@pytest.fixture(scope="session")
def c31(p31):
    return ball_constants(p31)


@pytest.fixture(scope="session")
def p21():
    return RieszParams(2, 1.0)


@pytest.fixture(scope="session")
def c21(p21):
    return ball_constants(p21)
