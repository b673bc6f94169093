import random
from importlib import resources

import pytest
from hypothesis import settings

from textsteg.dictionary import sample_dictionary

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def words():
    return sample_dictionary()


@pytest.fixture(scope="session")
def corpus():
    return resources.files("textsteg.data").joinpath("corpus.txt").read_text(encoding="utf-8")


@pytest.fixture
def rng():
    return random.Random(1234)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
