import pathlib
import sys

import pytest

HERE = pathlib.Path(__file__).parent
sys.path.insert(0, str(HERE))

from polyproj.io import parse_instance  # noqa: E402


@pytest.fixture(scope="session")
def data_dir():
    return HERE / "data"


def load(name):
    return parse_instance((HERE / "data" / name).read_text())


@pytest.fixture(scope="session")
def skew_cone():
    return load("skew_cone.vlp")


@pytest.fixture(scope="session")
def three_objective():
    return load("three_objective.vlp")


@pytest.fixture(scope="session")
def cube8():
    return load("cube8.pp")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
