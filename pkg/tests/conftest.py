import sys

import pytest
from hypothesis import settings

from tdesigns.fixtures import fano, fano_minus_one, generate_s5612

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture(scope="session")
def fano_design():
    return fano()


@pytest.fixture(scope="session")
def fano_minus():
    return fano_minus_one()


@pytest.fixture(scope="session")
def s5612():
    return generate_s5612()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
