import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from rlab.coxeter import make_system  # noqa: E402


@pytest.fixture(scope="session")
def A2():
    return make_system("A2")


@pytest.fixture(scope="session")
def A3():
    return make_system("A3")


@pytest.fixture(scope="session")
def B2():
    return make_system("B2")
