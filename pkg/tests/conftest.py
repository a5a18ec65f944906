import os

import pytest

from twosilt import QQ, build_based_algebra, resolve_presentation


FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "..",
                           "fixtures", "paper")


def make(name):
    return build_based_algebra(resolve_presentation(name), QQ)


@pytest.fixture(scope="session")
def square():
    return make("square")


@pytest.fixture(scope="session")
def bipartite():
    return make("bipartite-a3")


@pytest.fixture(scope="session")
def linear3():
    return make("linear:3")


@pytest.fixture(scope="session")
def bs242():
    return make("bs:2,4,2")


@pytest.fixture(scope="session")
def bs253():
    return make("bs:2,5,3")
