import pathlib

import pytest

from qda.rmatrix import BUILTINS, builtin

SPECS = pathlib.Path(__file__).resolve().parent.parent / "specs"


@pytest.fixture(scope="session")
def specs_dir():
    return SPECS


@pytest.fixture(scope="session", params=BUILTINS)
def any_builtin(request):
    return builtin(request.param, 2)


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":")[2:])):
        terminalreporter.write_line(line)
