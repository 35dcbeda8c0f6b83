import random

import pytest
from hypothesis import settings

from linsplit.ff_core import make_field

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# (p, s, n) triples small enough for exhaustive checks; s > 1 covers q = 4, 9.
SMALL_FIELDS = [(2, 1, 1), (2, 1, 3), (2, 1, 7), (3, 1, 2), (3, 1, 3), (2, 2, 3), (3, 2, 2), (5, 1, 2), (7, 1, 2)]
# Fields beyond the table limit exercise the slow arithmetic paths.
LARGE_FIELDS = [(2, 1, 20), (2, 1, 42), (3, 1, 11), (2, 3, 7), (5, 1, 8)]


@pytest.fixture(params=SMALL_FIELDS, ids=lambda t: "GF(%d^%d^%d)" % t)
def small_field(request):
    return make_field(*request.param)


@pytest.fixture(params=LARGE_FIELDS, ids=lambda t: "GF(%d^%d^%d)" % t)
def large_field(request):
    return make_field(*request.param)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
