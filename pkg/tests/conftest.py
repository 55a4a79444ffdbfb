import pytest

from invgeo import families


@pytest.fixture(scope="session")
def g7():
    return families.build("g7")


@pytest.fixture(scope="session")
def g3():
    return families.build("g3")


@pytest.fixture(scope="session")
def general():
    return families.build("general_s3")


@pytest.fixture(scope="session")
def abelian4():
    return families.abelian(4)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
