from pathlib import Path

import pytest

from nielsen_coincidence.catalog import catalog_group, cyclic
from nielsen_coincidence.groups import make_character, make_hom

DATA = Path(__file__).parent / "data"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def S3():
    return catalog_group("S3")


@pytest.fixture(scope="session")
def D4():
    return catalog_group("D4")


@pytest.fixture(scope="session")
def Z2():
    return cyclic(2)


@pytest.fixture(scope="session")
def Z4():
    return cyclic(4)


@pytest.fixture(scope="session")
def z4_mod2(Z4, Z2):
    return make_hom(Z4, Z2, [0, 1, 0, 1])


@pytest.fixture(scope="session")
def z4_alternating(Z4):
    """(-1)^x on Z/4"""
    return make_character(Z4, [1, -1, 1, -1])
