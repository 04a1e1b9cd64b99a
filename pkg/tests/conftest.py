import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from labelled_spaces import fixtures


@pytest.fixture(scope="session")
def loops4():
    return fixtures.loops4()


@pytest.fixture(scope="session")
def loops4_pow():
    return fixtures.loops4_powerset()


@pytest.fixture(scope="session")
def chain7():
    return fixtures.chain7(10)


@pytest.fixture(scope="session")
def twins2():
    return fixtures.twins2()


@pytest.fixture(scope="session")
def twins3():
    return fixtures.twins3()


@pytest.fixture(scope="session")
def single_loop():
    return fixtures.single_loop()


def fset(*items):
    return frozenset(items)
